#include <psg/curvature.hpp>
#include <psg/finite_difference.hpp>

#include <Eigen/LU>

#include <cmath>

namespace psg {

SecondForm second_fundamental_form(const Immersion& imm, const AdaptedFrame& frame)
{
    const int n = frame.n();
    const ChartJet j = imm.jet(frame.u, 2);
    const Matrix& c = frame.tangent_coords;
    const Signature& sig = imm.ambient();

    // D_{e_i} e_j projected on the normals: sum_ab C(a,i) C(b,j) d_a d_b x.
    std::vector<Vector> second(n * n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k <= i; ++k) {
            Vector acc = Vector::Zero(frame.m());
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) acc += c(a, i) * c(b, k) * j.d2(a, b);
            second[i * n + k] = acc;
            second[k * n + i] = acc;
        }
    }
    SecondForm h;
    for (int r = 0; r <= frame.normal_count(); ++r) {
        const Vector er = frame.e(n + r);
        Matrix hr(n, n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) hr(i, k) = sig.inner(second[i * n + k], er);
        h.push_back(hr);
    }
    return h;
}

MeanCurvature mean_curvature(const AdaptedFrame& frame, const SecondForm& h)
{
    const int n = frame.n();
    MeanCurvature out;
    out.Hhat = Vector::Zero(frame.m());
    Vector x_part = Vector::Zero(frame.m());
    for (std::size_t r = 0; r < h.size(); ++r) {
        const int a = n + static_cast<int>(r);
        double trace = 0;
        for (int i = 0; i < n; ++i) trace += frame.eps[i] * h[r](i, i);
        const Vector term = (frame.eps[a] * trace / n) * frame.e(a);
        if (static_cast<int>(r) < frame.normal_count()) {
            out.Hhat += term;
        } else {
            x_part += term;
        }
    }
    out.H = out.Hhat + x_part;
    if (frame.normal_count() == 1) {
        double trace = 0;
        for (int i = 0; i < n; ++i) trace += frame.eps[i] * h[0](i, i);
        out.alpha_hat = trace / n;
    }
    return out;
}

double squared_norm_h(const AdaptedFrame& frame, const SecondForm& h, bool spherical)
{
    const int n = frame.n();
    const std::size_t count = spherical ? static_cast<std::size_t>(frame.normal_count()) : h.size();
    double acc = 0;
    for (std::size_t r = 0; r < count; ++r) {
        const int er = frame.eps[n + r];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) acc += frame.eps[i] * frame.eps[j] * er * h[r](i, j) * h[r](j, i);
    }
    return acc;
}

ScalarCurvature scalar_curvature(const Signature& sig, int n, const Vector& Hhat, double h_sq)
{
    ScalarCurvature out;
    out.S = n * (n - 1) + n * n * sig.inner(Hhat, Hhat) - h_sq;
    out.normalized = n > 1 ? out.S / (n * (n - 1)) : 0.0;
    if (n == 2) out.gauss = out.S / 2;
    return out;
}

double NormalCurvature::sup() const
{
    double r = 0;
    for (const auto& b : blocks) r = std::max(r, b.cwiseAbs().maxCoeff());
    return r;
}

NormalCurvature normal_curvature(const AdaptedFrame& frame, const SecondForm& h)
{
    const int n = frame.n();
    NormalCurvature out;
    out.normals = frame.normal_count();
    for (int r = 0; r < out.normals; ++r) {
        for (int s = 0; s < out.normals; ++s) {
            Matrix b = Matrix::Zero(n, n);
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int i = 0; i < n; ++i)
                        b(j, k) += frame.eps[i] * (h[r](i, k) * h[s](i, j) - h[r](i, j) * h[s](i, k));
            out.blocks.push_back(b);
        }
    }
    return out;
}

Vector mean_curvature_field(const Immersion& imm, const Vector& u)
{
    const int n = imm.n();
    const Signature& sig = imm.ambient();
    const ChartJet j = imm.jet(u, 2);
    const Matrix t = j.tangents();
    const Matrix g = sig.gram(t, t);
    const Matrix ginv = g.inverse();
    const Matrix tangent_projector = t * ginv * t.transpose() * sig.metric_diagonal().asDiagonal();
    Vector trace = Vector::Zero(imm.m());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) trace += ginv(a, b) * j.d2(a, b);
    const Vector H = (trace - tangent_projector * trace) / n;
    return H + j.value();
}

namespace {

Vector project_sphere_normal(const Signature& sig, const AdaptedFrame& frame, Vector v)
{
    for (int i = 0; i < frame.n(); ++i) v -= frame.eps[i] * sig.inner(v, frame.tangents.col(i)) * frame.tangents.col(i);
    v -= sig.inner(v, frame.x) * frame.x;
    return v;
}

} // namespace

Matrix normal_derivative_mean_curvature(const Immersion& imm, const AdaptedFrame& frame, double step)
{
    const int n = imm.n();
    auto field = [&](const Vector& v) { return mean_curvature_field(imm, v); };
    std::vector<Vector> partial;
    for (int a = 0; a < n; ++a) partial.push_back(central_difference(field, frame.u, a, step));
    Matrix out(imm.m(), n);
    for (int k = 0; k < n; ++k) {
        Vector d = Vector::Zero(imm.m());
        for (int a = 0; a < n; ++a) d += frame.tangent_coords(a, k) * partial[a];
        out.col(k) = project_sphere_normal(imm.ambient(), frame, d);
    }
    return out;
}

GeometryReport geometry_report(const Immersion& imm, const Vector& u, const ReportOptions& opts)
{
    return geometry_report(imm, adapted_frame(imm, u), opts);
}

GeometryReport geometry_report(const Immersion& imm, const AdaptedFrame& frame, const ReportOptions& opts)
{
    GeometryReport rep;
    rep.frame = frame;
    rep.h = second_fundamental_form(imm, frame);
    const MeanCurvature mc = mean_curvature(frame, rep.h);
    rep.H = mc.H;
    rep.Hhat = mc.Hhat;
    rep.alpha_hat = mc.alpha_hat;
    rep.h_sq_ambient = squared_norm_h(frame, rep.h, false);
    rep.h_sq = squared_norm_h(frame, rep.h, true);
    const int n = frame.n();
    const auto sc = scalar_curvature(imm.ambient(), n, rep.Hhat, rep.h_sq);
    rep.S = sc.S;
    rep.normalized_curvature = sc.normalized;
    rep.gauss_curvature = sc.gauss;
    rep.S_ambient = n * n * imm.ambient().inner(rep.H, rep.H) - rep.h_sq_ambient;
    rep.RD = normal_curvature(frame, rep.h);
    rep.DHhat = normal_derivative_mean_curvature(imm, frame, opts.dh_step);
    if (opts.connection) rep.omega = frame_connection(imm, frame, opts.frame_step);
    return rep;
}

double codazzi_residual(const Immersion& imm, const Vector& u, const SecondFormHook& hook, double step)
{
    const AdaptedFrame frame = adapted_frame(imm, u);
    const int n = frame.n();
    const int p = frame.normal_count() + 1;

    auto hfield = [&](const Vector& v) {
        const AdaptedFrame f = adapted_frame_like(imm, v, frame);
        SecondForm h = second_fundamental_form(imm, f);
        if (hook) hook(v, h);
        Matrix packed(p * n, n);
        for (int r = 0; r < p; ++r) packed.middleRows(r * n, n) = h[r];
        return packed;
    };
    const Matrix h0 = hfield(u);
    auto h = [&](int r, int i, int j) { return h0(r * n + i, j); };

    std::vector<Matrix> dh;
    for (int a = 0; a < n; ++a) dh.push_back(richardson_derivative(hfield, u, a, step));
    // e_i(h^r_jk)
    auto eh = [&](int r, int j, int k, int i) {
        double acc = 0;
        for (int a = 0; a < n; ++a) acc += frame.tangent_coords(a, i) * dh[a](r * n + j, k);
        return acc;
    };

    const ConnectionForms w = frame_connection(imm, frame, step);
    auto cov = [&](int r, int j, int k, int i) {
        double acc = eh(r, j, k, i);
        for (int l = 0; l < n; ++l) acc -= frame.eps[l] * (h(r, l, k) * w(j, l, i) + h(r, l, j) * w(k, l, i));
        for (int s = 0; s < p; ++s) acc += frame.eps[n + s] * h(s, j, k) * w(n + s, n + r, i);
        return acc;
    };

    double worst = 0;
    for (int r = 0; r < p; ++r)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) worst = std::max(worst, std::abs(cov(r, i, j, k) - cov(r, j, k, i)));
    return worst;
}

bool marginally_trapped(const Signature& sig, const std::vector<GeometryReport>& reports, double tol)
{
    if (reports.empty()) return false;
    for (const auto& rep : reports) {
        if (causal_character(sig, rep.Hhat, tol) != Causal::null) return false;
    }
    return true;
}

} // namespace psg
