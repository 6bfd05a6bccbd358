#pragma once

#include <psg/jet.hpp>

#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace psg {

///
/// All partial derivatives of a chart x: R^n -> R^m at one point, up to a
/// fixed total order. Column k of `derivs` is d^alpha x for the k-th
/// multi-index of the layout.
///
class ChartJet
{
public:
    ChartJet(LayoutPtr layout, Matrix derivs);

    int vars() const { return m_layout->vars(); }
    int order() const { return m_layout->order(); }
    int ambient_dim() const { return static_cast<int>(m_derivs.rows()); }
    const LayoutPtr& layout() const { return m_layout; }
    const Matrix& derivs() const { return m_derivs; }

    Vector value() const { return m_derivs.col(0); }
    Vector partial(const std::vector<int>& alpha) const;

    /// d x / d u_i
    Vector d1(int i) const;
    /// d^2 x / d u_i d u_j
    Vector d2(int i, int j) const;
    /// d^3 x / d u_i d u_j d u_k
    Vector d3(int i, int j, int k) const;

    /// m x n matrix of first partials.
    Matrix tangents() const;

private:
    LayoutPtr m_layout;
    Matrix m_derivs;
};

///
/// A parametrization u in R^n -> x(u) in R^m with a derivative oracle.
///
class Chart
{
public:
    virtual ~Chart() = default;

    virtual int vars() const = 0;
    virtual int ambient_dim() const = 0;

    /// Highest order the oracle delivers in closed form.
    virtual int exact_order() const { return std::numeric_limits<int>::max(); }

    /// Derivatives up to `order` at u.
    virtual ChartJet jet(const Vector& u, int order) const = 0;

    Vector value(const Vector& u) const { return jet(u, 0).value(); }
};

///
/// Chart written once over the Jet scalar; every order is exact.
///
class JetChart : public Chart
{
public:
    virtual std::vector<Jet> evaluate(std::span<const Jet> u) const = 0;
    ChartJet jet(const Vector& u, int order) const override;
};

///
/// Chart given by a callable on Jets, for ad hoc surfaces and tests.
///
class LambdaChart final : public JetChart
{
public:
    using Fn = std::function<std::vector<Jet>(std::span<const Jet>)>;

    LambdaChart(int vars, int ambient_dim, Fn fn)
        : m_vars(vars)
        , m_dim(ambient_dim)
        , m_fn(std::move(fn))
    {}

    int vars() const override { return m_vars; }
    int ambient_dim() const override { return m_dim; }
    std::vector<Jet> evaluate(std::span<const Jet> u) const override { return m_fn(u); }

private:
    int m_vars;
    int m_dim;
    Fn m_fn;
};

enum class Func { constant, poly, sin, cos, sinh, cosh };

/// f(w . u + phase), with `power` the exponent of poly.
struct Factor
{
    Func func = Func::constant;
    int power = 1;
    Vector weights;
    double phase = 0.0;
};

/// coef * prod_j factor_j
struct Term
{
    double coef = 0.0;
    std::vector<Factor> factors;
};

///
/// Sum-of-products chart: every component is a list of terms built from
/// const, poly_k, sin, cos, sinh, cosh of affine arguments. This is the
/// structure of the chart text format.
///
class TermChart final : public JetChart
{
public:
    TermChart(int vars, std::vector<std::vector<Term>> components);

    int vars() const override { return m_vars; }
    int ambient_dim() const override { return static_cast<int>(m_components.size()); }
    std::vector<Jet> evaluate(std::span<const Jet> u) const override;

    const std::vector<std::vector<Term>>& components() const { return m_components; }

    /// Symbolic partial derivative along u_axis.
    TermChart differentiate(int axis) const;

    /// Re-express in `vars` variables; variable i of this chart becomes
    /// sum_j map(i, j) u_j.
    TermChart substitute(int vars, const Matrix& map) const;

    /// Linear map of the components: y = A x + b.
    TermChart transform(const Matrix& a, const Vector& b) const;

private:
    int m_vars;
    std::vector<std::vector<Term>> m_components;
};

///
/// Chart with a user oracle exact up to `exact_order`; higher orders are
/// synthesized from the highest exact order by central differences with one
/// Richardson level.
///
class OracleChart final : public Chart
{
public:
    using Oracle = std::function<ChartJet(const Vector&, int)>;

    OracleChart(int vars, int ambient_dim, int exact_order, Oracle oracle, double step = 1e-3);

    int vars() const override { return m_vars; }
    int ambient_dim() const override { return m_dim; }
    int exact_order() const override { return m_exact; }
    ChartJet jet(const Vector& u, int order) const override;

private:
    Vector partial(const Vector& u, const std::vector<int>& alpha) const;

    int m_vars;
    int m_dim;
    int m_exact;
    Oracle m_oracle;
    double m_step;
};

} // namespace psg
