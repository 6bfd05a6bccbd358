#include <psg/finite_difference.hpp>
#include <psg/gaussmap.hpp>

#include <Eigen/LU>

#include <cmath>

namespace psg {

namespace {

/// [x, e_1, .., e_n]
Matrix gauss_columns(const AdaptedFrame& frame)
{
    Matrix cols(frame.m(), frame.n() + 1);
    cols.col(0) = frame.x;
    cols.rightCols(frame.n()) = frame.tangents;
    return cols;
}

Matrix metric_inverse(const Matrix& g)
{
    if (std::abs(g.determinant()) < 1e-12) {
        throw DegenerateMetric("induced metric is degenerate at the evaluation point");
    }
    return g.inverse();
}

} // namespace

MultivectorD gauss_map(const Signature& sig, const AdaptedFrame& frame)
{
    return wedge(sig, gauss_columns(frame));
}

MultivectorD gauss_map(const Immersion& imm, const Vector& u)
{
    const ChartJet j = imm.jet(u, 1);
    const Matrix partials = j.tangents();
    if (std::abs(imm.ambient().gram(partials, partials).determinant()) < 1e-12) {
        throw DegenerateMetric("induced metric is degenerate at the evaluation point");
    }
    const OrthonormalSet t = gram_schmidt_indefinite(imm.ambient(), partials * imm.tangent_mix());
    Matrix cols(imm.m(), imm.n() + 1);
    cols.col(0) = j.value();
    cols.rightCols(imm.n()) = t.vectors;
    return wedge(imm.ambient(), cols);
}

MultivectorField gauss_map_field(const Immersion& imm)
{
    return {"gauss_map", [&imm](const Vector& u) { return gauss_map(imm, u); }};
}

MultivectorD gauss_map_derivative(const Signature& sig, const AdaptedFrame& frame, const SecondForm& h, int i)
{
    const int n = frame.n();
    const Matrix base = gauss_columns(frame);
    MultivectorD out(multivector_space(sig, n + 1));
    for (int k = 0; k < n; ++k) {
        Vector v = Vector::Zero(frame.m());
        for (int r = 0; r < frame.normal_count(); ++r) v += frame.eps[n + r] * h[r](i, k) * frame.normals.col(r);
        Matrix cols = base;
        cols.col(k + 1) = v;
        out += wedge(sig, cols);
    }
    return out;
}

MultivectorD gauss_map_derivative_numeric(const Immersion& imm, const AdaptedFrame& frame, int i, double step)
{
    const MultivectorField f = gauss_map_field(imm);
    MultivectorD out(multivector_space(imm.ambient(), imm.n() + 1));
    for (int a = 0; a < imm.n(); ++a) out += frame.tangent_coords(a, i) * richardson_derivative(f, frame.u, a, step);
    return out;
}

MultivectorD laplacian_formula(const Signature& sig, const GeometryReport& rep)
{
    const AdaptedFrame& f = rep.frame;
    const int n = f.n();
    const Matrix base = gauss_columns(f);
    auto replaced = [&](std::initializer_list<std::pair<int, Vector>> slots) {
        Matrix cols = base;
        for (const auto& [slot, v] : slots) cols.col(slot) = v;
        return wedge(sig, cols);
    };

    MultivectorD out = rep.h_sq * wedge(sig, base);
    out += double(n) * replaced({{0, rep.Hhat}});
    for (int k = 0; k < n; ++k) out -= double(n) * replaced({{k + 1, rep.DHhat.col(k)}});
    const int p = rep.RD.normals;
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            if (j == k) continue;
            for (int r = 0; r < p; ++r) {
                for (int s = r + 1; s < p; ++s) {
                    const double coef = f.eps[n + r] * f.eps[n + s] * rep.RD(r, s, j, k);
                    if (coef == 0.0) continue;
                    out += coef * replaced({{j + 1, f.normals.col(r)}, {k + 1, f.normals.col(s)}});
                }
            }
        }
    }
    return out;
}

MultivectorD laplacian_formula(const Immersion& imm, const Vector& u)
{
    return laplacian_formula(imm.ambient(), geometry_report(imm, u));
}

MultivectorField laplacian_formula_field(const Immersion& imm)
{
    return {"laplacian_formula", [&imm](const Vector& u) { return laplacian_formula(imm, u); }};
}

namespace {

template <typename T, typename F>
T laplace_beltrami_impl(const Immersion& imm, const F& f, const Vector& u, double step, T out)
{
    const int n = imm.n();
    const ChartJet j = imm.jet(u, 2);
    const Matrix t = j.tangents();
    const Matrix ginv = metric_inverse(imm.ambient().gram(t, t));

    std::vector<T> first;
    for (int c = 0; c < n; ++c) first.push_back(richardson_derivative(f, u, c, step));
    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            const double w = (a == b ? 1.0 : 2.0) * ginv(a, b);
            if (w == 0.0) continue;
            T term = richardson_second(f, u, a, b, step);
            const Vector xab = j.d2(a, b);
            for (int c = 0; c < n; ++c) {
                double gamma = 0;
                for (int d = 0; d < n; ++d) gamma += ginv(c, d) * imm.ambient().inner(xab, t.col(d));
                term -= gamma * first[c];
            }
            out -= w * term;
        }
    }
    return out;
}

} // namespace

MultivectorD laplace_beltrami_numeric(const Immersion& imm, const MultivectorField& field, const Vector& u, double step)
{
    MultivectorD zero = field(u);
    zero.coeffs().setZero();
    return laplace_beltrami_impl(imm, field, u, step, zero);
}

double laplace_beltrami_numeric(const Immersion& imm, const std::function<double(const Vector&)>& f, const Vector& u, double step)
{
    auto g = [&](const Vector& v) { return Vector(Vector::Constant(1, f(v))); };
    return laplace_beltrami_impl(imm, g, u, step, Vector(Vector::Zero(1)))[0];
}

namespace {

void require_hypersurface(const Immersion& imm)
{
    if (!imm.is_hypersurface()) {
        throw NotHypersurface(imm.name() + ": defined only for hypersurfaces (m = n + 2)");
    }
}

int frame_orientation(const AdaptedFrame& frame)
{
    Matrix b(frame.m(), frame.m());
    b.leftCols(frame.n()) = frame.tangents;
    b.col(frame.n()) = frame.normals.col(0);
    b.col(frame.m() - 1) = frame.x;
    return b.determinant() > 0 ? 1 : -1;
}

} // namespace

int companion_orientation(const Immersion& imm)
{
    require_hypersurface(imm);
    return frame_orientation(adapted_frame(imm, imm.domain_center()));
}

AdaptedFrame oriented_hypersurface_frame(const Immersion& imm, const Vector& u, int orientation)
{
    require_hypersurface(imm);
    AdaptedFrame f = adapted_frame(imm, u);
    if (frame_orientation(f) != orientation) f.normals.col(0) *= -1.0;
    return f;
}

MultivectorD companion(const Signature& sig, const AdaptedFrame& frame)
{
    Matrix cols(frame.m(), frame.n() + 1);
    cols.col(0) = frame.normals.col(0);
    cols.rightCols(frame.n()) = frame.tangents;
    return wedge(sig, cols);
}

MultivectorField companion_field(const Immersion& imm)
{
    const int orientation = companion_orientation(imm);
    return {"companion", [&imm, orientation](const Vector& u) {
                return companion(imm.ambient(), oriented_hypersurface_frame(imm, u, orientation));
            }};
}

MultivectorD laplacian_companion(const Immersion& imm, const Vector& u)
{
    const AdaptedFrame f = oriented_hypersurface_frame(imm, u, companion_orientation(imm));
    const MeanCurvature mc = mean_curvature(f, second_fundamental_form(imm, f));
    const double n = imm.n();
    return n * *mc.alpha_hat * gauss_map(imm.ambient(), f) + n * companion(imm.ambient(), f);
}

MultivectorD bilaplacian(const Immersion& imm, const Vector& u, double step)
{
    return laplace_beltrami_numeric(imm, laplacian_formula_field(imm), u, step);
}

MultivectorD bilaplacian_hypersurface(const Immersion& imm, const Vector& u, double step)
{
    require_hypersurface(imm);
    return bilaplacian(imm, u, step);
}

} // namespace psg
