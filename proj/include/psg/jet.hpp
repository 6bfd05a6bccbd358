#pragma once

#include <psg/signature.hpp>

#include <memory>
#include <span>
#include <vector>

namespace psg {

///
/// Monomial bookkeeping for truncated Taylor series in `vars` variables up to
/// total degree `order`. Multi-indices are stored graded (by total degree),
/// then lexicographically descending.
///
class JetLayout
{
public:
    JetLayout(int vars, int order);

    int vars() const { return m_vars; }
    int order() const { return m_order; }
    int size() const { return static_cast<int>(m_alphas.size()); }

    const std::vector<int>& alpha(int k) const { return m_alphas[k]; }
    int degree(int k) const { return m_degree[k]; }

    /// Position of a multi-index, -1 when its degree exceeds the order.
    int find(const std::vector<int>& alpha) const;

    /// alpha! = prod_i alpha_i!
    double factorial(int k) const { return m_factorial[k]; }

    struct Product
    {
        int a, b, c;
    };
    const std::vector<Product>& products() const { return m_products; }

private:
    int m_vars;
    int m_order;
    std::vector<std::vector<int>> m_alphas;
    std::vector<int> m_degree;
    std::vector<double> m_factorial;
    std::vector<Product> m_products;
};

using LayoutPtr = std::shared_ptr<const JetLayout>;

LayoutPtr jet_layout(int vars, int order);

///
/// Truncated multivariate Taylor polynomial. Coefficients are stored as
/// d^alpha f / alpha!, so all partial derivatives up to the layout order are
/// exact up to roundoff.
///
class Jet
{
public:
    Jet() = default;
    Jet(LayoutPtr layout, double value);

    static Jet variable(LayoutPtr layout, int var, double value);

    const LayoutPtr& layout() const { return m_layout; }
    double value() const { return m_coeffs[0]; }
    const Vector& coeffs() const { return m_coeffs; }

    /// Partial derivative d^alpha; zero when |alpha| exceeds the order.
    double partial(const std::vector<int>& alpha) const;

    Jet& operator+=(const Jet& o);
    Jet& operator-=(const Jet& o);
    Jet& operator*=(const Jet& o);
    Jet& operator+=(double a)
    {
        m_coeffs[0] += a;
        return *this;
    }
    Jet& operator*=(double a)
    {
        m_coeffs *= a;
        return *this;
    }

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(Jet a, const Jet& b) { return a *= b; }
    friend Jet operator+(Jet a, double b) { return a += b; }
    friend Jet operator+(double b, Jet a) { return a += b; }
    friend Jet operator-(Jet a, double b) { return a += -b; }
    friend Jet operator-(double b, Jet a) { return (a *= -1.0) += b; }
    friend Jet operator*(Jet a, double b) { return a *= b; }
    friend Jet operator*(double b, Jet a) { return a *= b; }
    friend Jet operator-(Jet a) { return a *= -1.0; }
    friend Jet operator/(const Jet& a, const Jet& b);
    friend Jet operator/(Jet a, double b) { return a *= 1.0 / b; }
    friend Jet operator/(double a, const Jet& b);

    /// f(x0 + delta) = sum_k f^(k)(x0) / k! delta^k given f^(k)(x0), k = 0..order.
    Jet compose(std::span<const double> derivatives) const;

private:
    LayoutPtr m_layout;
    Vector m_coeffs;
};

Jet sin(const Jet& x);
Jet cos(const Jet& x);
Jet sinh(const Jet& x);
Jet cosh(const Jet& x);
Jet exp(const Jet& x);
Jet log(const Jet& x);
Jet sqrt(const Jet& x);
/// x^k for integer k (negative k requires x != 0).
Jet powi(const Jet& x, int k);

} // namespace psg
