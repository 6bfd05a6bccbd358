#pragma once

#include <psg/catalog.hpp>
#include <psg/curvature.hpp>

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>
#include <vector>

namespace gen {

using psg::Matrix;
using psg::Signature;
using psg::Vector;

struct Rng
{
    explicit Rng(std::uint64_t seed)
        : engine(seed)
    {}

    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(engine); }
    int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(engine); }

    std::mt19937_64 engine;
};

inline Vector vector(Rng& rng, int m, double scale = 1.0)
{
    Vector v(m);
    for (int i = 0; i < m; ++i) v[i] = rng.uniform(-scale, scale);
    return v;
}

inline Matrix matrix(Rng& rng, int rows, int cols, double scale = 1.0)
{
    Matrix a(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a(i, j) = rng.uniform(-scale, scale);
    return a;
}

inline Signature signature(Rng& rng, int m_lo, int m_hi)
{
    const int m = rng.integer(m_lo, m_hi);
    return Signature(m, rng.integer(0, m - 1));
}

/// Product of random plane rotations and boosts: an isometry of E^m_s.
inline Matrix isometry(Rng& rng, const Signature& sig, int factors = 6)
{
    const int m = sig.dim();
    Matrix out = Matrix::Identity(m, m);
    for (int f = 0; f < factors; ++f) {
        const int i = rng.integer(0, m - 1);
        int j = rng.integer(0, m - 2);
        if (j >= i) ++j;
        const double a = rng.uniform(-0.7, 0.7);
        Matrix r = Matrix::Identity(m, m);
        if (sig.eps(i) == sig.eps(j)) {
            r(i, i) = r(j, j) = std::cos(a);
            r(i, j) = -std::sin(a);
            r(j, i) = std::sin(a);
        } else {
            r(i, i) = r(j, j) = std::cosh(a);
            r(i, j) = r(j, i) = std::sinh(a);
        }
        out = r * out;
    }
    return out;
}

///
/// x = y / sqrt<y, y> with y = L (e_0 + sum_i u_i e_{a_i} + 0.2 sum_k c_k sin(w_k . u + phi_k)),
/// the a_i distinct random axes and L a random isometry: a generic immersion
/// into S^{m-1}_s(1) whose index is read off at the domain center.
///
struct GenericSurface
{
    std::shared_ptr<psg::Immersion> immersion;
    Matrix linear;
    Matrix amplitude;
    Matrix weights;
    Vector phase;
};

inline GenericSurface generic_surface(Rng& rng, const Signature& sig, int n, int terms = 3)
{
    const int m = sig.dim();
    for (int attempt = 0; attempt < 100; ++attempt) {
        GenericSurface s;
        std::vector<int> axes;
        for (int A = 1; A < m; ++A) axes.push_back(A);
        std::shuffle(axes.begin(), axes.end(), rng.engine);
        const Matrix l = isometry(rng, sig, 3);
        s.linear = Matrix::Zero(m, n);
        for (int i = 0; i < n; ++i) s.linear.col(i) = l.col(axes[i]);
        s.amplitude = l * matrix(rng, m, terms, 0.2);
        s.weights = matrix(rng, terms, n, 1.5);
        s.phase = vector(rng, terms, 3.0);
        const Vector p = l.col(0);
        const Matrix b = s.linear, a = s.amplitude, w = s.weights;
        const Vector ph = s.phase;
        auto y_of = [p, b, a, w, ph](const Vector& u) -> Vector { return p + b * u + a * (w * u + ph).array().sin().matrix(); };
        auto chart = std::make_shared<psg::LambdaChart>(n, m, [p, b, a, w, ph, m, n, sig](std::span<const psg::Jet> u) {
            std::vector<psg::Jet> y;
            const auto& layout = u[0].layout();
            for (int A = 0; A < m; ++A) {
                y.emplace_back(layout, p[A]);
                for (int i = 0; i < n; ++i) y[A] += b(A, i) * u[i];
            }
            for (Eigen::Index k = 0; k < w.rows(); ++k) {
                psg::Jet arg(layout, ph[k]);
                for (Eigen::Index i = 0; i < w.cols(); ++i) arg += w(k, i) * u[i];
                const psg::Jet s = psg::sin(arg);
                for (int A = 0; A < m; ++A) y[A] += a(A, k) * s;
            }
            psg::Jet q(layout, 0.0);
            for (int A = 0; A < m; ++A) q += double(sig.eps(A)) * y[A] * y[A];
            const psg::Jet inv = 1.0 / psg::sqrt(q);
            for (auto& c : y) c *= inv;
            return y;
        });
        const Vector lo = Vector::Constant(n, -0.4), hi = Vector::Constant(n, 0.4);
        try {
            psg::Immersion probe("generic", sig, n, 0, lo, hi, chart);
            const int t = psg::metric_index(psg::induced_metric(probe, Vector::Zero(n)));
            s.immersion = std::make_shared<psg::Immersion>("generic", sig, n, t, lo, hi, chart);
            // reject charts that come close to degenerating anywhere on a 5^n grid
            const int per_axis = 5;
            int total = 1;
            for (int i = 0; i < n; ++i) total *= per_axis;
            for (int k = 0; k < total; ++k) {
                Vector u(n);
                for (int i = 0, rest = k; i < n; ++i, rest /= per_axis) u[i] = -0.4 + 0.2 * (rest % per_axis);
                const Vector y = y_of(u);
                if (sig.inner(y, y) < 0.1) throw psg::DegenerateMetric("y close to the light cone");
                const auto g = psg::induced_metric(*s.immersion, u);
                if (std::abs(g.determinant()) < 1e-2 || psg::metric_index(g) != t) throw psg::DegenerateMetric("near degenerate");
                psg::adapted_frame(*s.immersion, u, 1e-3);
            }
            return s;
        } catch (const psg::Error&) {
            continue;
        }
    }
    throw std::runtime_error("generic_surface: no admissible chart");
}

/// Points of the box [-r, r]^n.
inline std::vector<Vector> points(Rng& rng, int n, int count, double r = 0.2)
{
    std::vector<Vector> out;
    for (int k = 0; k < count; ++k) out.push_back(vector(rng, n, r));
    return out;
}

} // namespace gen
