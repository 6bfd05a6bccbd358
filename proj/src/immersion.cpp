#include <psg/finite_difference.hpp>
#include <psg/immersion.hpp>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <cmath>

namespace psg {

Immersion::Immersion(
    std::string name,
    Signature ambient,
    int n,
    int t,
    Vector domain_lo,
    Vector domain_hi,
    std::shared_ptr<const Chart> chart)
    : m_name(std::move(name))
    , m_ambient(ambient)
    , m_n(n)
    , m_t(t)
    , m_lo(std::move(domain_lo))
    , m_hi(std::move(domain_hi))
    , m_chart(std::move(chart))
    , m_mix(Matrix::Identity(n, n))
{
    if (!m_chart) throw ParameterError("Immersion: missing chart");
    if (n < 1 || n > ambient.dim() - 2) throw ParameterError("Immersion: need 1 <= n <= m - 2");
    if (t < 0 || t > n) throw ParameterError("Immersion: need 0 <= t <= n");
    if (m_chart->vars() != n || m_chart->ambient_dim() != ambient.dim()) {
        throw DimensionError("Immersion: chart dimensions do not match (n, m)");
    }
    if (m_lo.size() != n || m_hi.size() != n) throw DimensionError("Immersion: domain box must have n entries");
    for (int i = 0; i < n; ++i) {
        if (!(m_lo[i] < m_hi[i])) throw ParameterError("Immersion: empty domain interval");
    }
}

Immersion& Immersion::set_tangent_mix(const Matrix& mix)
{
    if (mix.rows() != m_n || mix.cols() != m_n) throw DimensionError("tangent_mix must be n x n");
    if (!(mix.determinant() > 0)) throw ParameterError("tangent_mix must have positive determinant");
    m_mix = mix;
    return *this;
}

Immersion& Immersion::add_normal_hint(const Vector& v)
{
    if (v.size() != m()) throw DimensionError("normal hint must have m entries");
    m_hints.push_back([v](const Vector&) { return v; });
    m_constant_hints.emplace_back(v);
    return *this;
}

Immersion& Immersion::add_normal_hint(VectorField field)
{
    m_hints.push_back(std::move(field));
    m_constant_hints.emplace_back(std::nullopt);
    return *this;
}

ChartJet Immersion::jet(const Vector& u, int order) const
{
    if (u.size() != m_n) throw DimensionError("Immersion: parameter dimension mismatch");
    return m_chart->jet(u, order);
}

Matrix induced_metric(const Immersion& imm, const Vector& u)
{
    const Matrix t = imm.jet(u, 1).tangents();
    const Matrix g = imm.ambient().gram(t, t);
    if (std::abs(g.determinant()) < 1e-12) {
        throw DegenerateMetric("induced metric is degenerate at the evaluation point");
    }
    return g;
}

int metric_index(const Matrix& g)
{
    Eigen::SelfAdjointEigenSolver<Matrix> es(g, Eigen::EigenvaluesOnly);
    int neg = 0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) neg += es.eigenvalues()[i] < 0;
    return neg;
}

Matrix AdaptedFrame::basis() const
{
    Matrix b(m(), m());
    b.leftCols(n()) = tangents;
    b.middleCols(n(), normal_count()) = normals;
    b.col(m() - 1) = x;
    return b;
}

Vector AdaptedFrame::e(int a) const
{
    if (a < n()) return tangents.col(a);
    if (a < n() + normal_count()) return normals.col(a - n());
    return x;
}

int AdaptedFrame::tangent_index() const
{
    int k = 0;
    for (int i = 0; i < n(); ++i) k += eps[i] < 0;
    return k;
}

namespace {

struct TangentPart
{
    Vector x;
    OrthonormalSet set;
    Matrix coords;
};

TangentPart tangent_part(const Immersion& imm, const Vector& u, double pivot_tol)
{
    const ChartJet j = imm.jet(u, 1);
    const Matrix partials = j.tangents();
    const Matrix g = imm.ambient().gram(partials, partials);
    if (std::abs(g.determinant()) < 1e-12) {
        throw DegenerateMetric("induced metric is degenerate at the evaluation point");
    }
    TangentPart tp;
    tp.x = j.value();
    tp.set = gram_schmidt_indefinite(imm.ambient(), partials * imm.tangent_mix(), pivot_tol);
    tp.coords = g.inverse() * imm.ambient().gram(partials, tp.set.vectors);
    return tp;
}

Vector candidate(const Immersion& imm, const Vector& u, int source)
{
    const int hints = static_cast<int>(imm.hint_count());
    if (source < hints) return imm.hint(source, u);
    return Vector::Unit(imm.m(), source - hints);
}

AdaptedFrame assemble(const Immersion& imm, const Vector& u, TangentPart tp, const OrthonormalSet& normals, std::vector<int> sources)
{
    AdaptedFrame f;
    f.u = u;
    f.x = tp.x;
    f.tangents = tp.set.vectors;
    f.normals = normals.vectors;
    f.eps = tp.set.signs;
    f.eps.insert(f.eps.end(), normals.signs.begin(), normals.signs.end());
    f.eps.push_back(1);
    f.tangent_coords = std::move(tp.coords);
    f.normal_sources = std::move(sources);
    (void)imm;
    return f;
}

} // namespace

AdaptedFrame adapted_frame(const Immersion& imm, const Vector& u, double pivot_tol)
{
    const Signature& sig = imm.ambient();
    TangentPart tp = tangent_part(imm, u, pivot_tol);

    OrthonormalSet span = tp.set;
    span.vectors.conservativeResize(Eigen::NoChange, span.vectors.cols() + 1);
    span.vectors.col(span.vectors.cols() - 1) = tp.x;
    span.signs.push_back(1);

    OrthonormalSet normals;
    normals.vectors.resize(imm.m(), 0);
    std::vector<int> sources;
    const int wanted = imm.codim();
    const int total = static_cast<int>(imm.hint_count()) + imm.m();
    for (int src = 0; src < total && static_cast<int>(sources.size()) < wanted; ++src) {
        const Vector c = candidate(imm, u, src);
        const Vector r = project_out(sig, c, span);
        const double norm2 = r.squaredNorm();
        if (norm2 < 1e-12 * std::max(1.0, c.squaredNorm())) continue;
        const double q = sig.inner(r, r);
        if (std::abs(q) < pivot_tol * norm2) {
            throw NullPivot(
                static_cast<std::size_t>(src),
                "adapted_frame: null normal direction from candidate " + std::to_string(src) +
                    "; supply a normal hint");
        }
        const Vector e = r / std::sqrt(std::abs(q));
        const int sign = q > 0 ? 1 : -1;
        for (OrthonormalSet* set : {&span, &normals}) {
            set->vectors.conservativeResize(Eigen::NoChange, set->vectors.cols() + 1);
            set->vectors.col(set->vectors.cols() - 1) = e;
            set->signs.push_back(sign);
        }
        sources.push_back(src);
    }
    if (static_cast<int>(sources.size()) != wanted) {
        throw LinearDependence(sources.size(), "adapted_frame: could not complete the normal frame");
    }
    return assemble(imm, u, std::move(tp), normals, std::move(sources));
}

AdaptedFrame adapted_frame_like(const Immersion& imm, const Vector& u, const AdaptedFrame& reference)
{
    const Signature& sig = imm.ambient();
    TangentPart tp = tangent_part(imm, u, 1e-12);
    OrthonormalSet span = tp.set;
    span.vectors.conservativeResize(Eigen::NoChange, span.vectors.cols() + 1);
    span.vectors.col(span.vectors.cols() - 1) = tp.x;
    span.signs.push_back(1);

    OrthonormalSet normals;
    normals.vectors.resize(imm.m(), 0);
    for (std::size_t k = 0; k < reference.normal_sources.size(); ++k) {
        const Vector r = project_out(sig, candidate(imm, u, reference.normal_sources[k]), span);
        const double q = sig.inner(r, r);
        if (q == 0.0) throw NullPivot(k, "adapted_frame_like: null normal direction");
        const Vector e = r / std::sqrt(std::abs(q));
        const int sign = q > 0 ? 1 : -1;
        for (OrthonormalSet* set : {&span, &normals}) {
            set->vectors.conservativeResize(Eigen::NoChange, set->vectors.cols() + 1);
            set->vectors.col(set->vectors.cols() - 1) = e;
            set->signs.push_back(sign);
        }
    }
    return assemble(imm, u, std::move(tp), normals, reference.normal_sources);
}

void align_frame(AdaptedFrame& frame, const AdaptedFrame& reference)
{
    const int n = frame.n();
    const int p = frame.normal_count();
    std::vector<bool> used(p, false);
    Matrix out = frame.normals;
    std::vector<int> out_eps(p);
    for (int k = 0; k < p; ++k) {
        const Vector target = reference.normals.col(k);
        int best = -1;
        double best_score = -1;
        for (int j = 0; j < p; ++j) {
            if (used[j] || frame.eps[n + j] != reference.eps[n + k]) continue;
            const double score = std::abs(frame.normals.col(j).dot(target));
            if (score > best_score) {
                best_score = score;
                best = j;
            }
        }
        if (best < 0) return; // signatures differ; leave the frame untouched
        used[best] = true;
        const double sign = frame.normals.col(best).dot(target) < 0 ? -1.0 : 1.0;
        out.col(k) = sign * frame.normals.col(best);
        out_eps[k] = frame.eps[n + best];
    }
    frame.normals = out;
    for (int k = 0; k < p; ++k) frame.eps[n + k] = out_eps[k];
}

double frame_completeness_residual(const Signature& sig, const AdaptedFrame& frame)
{
    const Matrix b = frame.basis();
    Matrix acc = Matrix::Zero(frame.m(), frame.m());
    for (int a = 0; a < frame.m(); ++a) acc += frame.eps[a] * b.col(a) * b.col(a).transpose();
    acc = acc * sig.metric_diagonal().asDiagonal();
    return (acc - Matrix::Identity(frame.m(), frame.m())).cwiseAbs().maxCoeff();
}

double frame_orthonormality_residual(const Signature& sig, const AdaptedFrame& frame)
{
    const Matrix b = frame.basis();
    Matrix g = sig.gram(b, b);
    for (int a = 0; a < frame.m(); ++a) g(a, a) -= frame.eps[a];
    return g.cwiseAbs().maxCoeff();
}

double ConnectionForms::antisymmetry_residual() const
{
    double r = 0;
    for (const auto& w : forms) r = std::max(r, (w + w.transpose()).cwiseAbs().maxCoeff());
    return r;
}

std::vector<Matrix> frame_derivatives(const Immersion& imm, const AdaptedFrame& frame, double step)
{
    auto basis_at = [&](const Vector& v) { return Matrix(adapted_frame_like(imm, v, frame).basis()); };
    std::vector<Matrix> out;
    for (int a = 0; a < imm.n(); ++a) out.push_back(richardson_derivative(basis_at, frame.u, a, step));
    return out;
}

ConnectionForms frame_connection(const Immersion& imm, const AdaptedFrame& frame, double step)
{
    const auto d = frame_derivatives(imm, frame, step);
    const Matrix b = frame.basis();
    ConnectionForms out;
    for (int i = 0; i < frame.n(); ++i) {
        Matrix de = Matrix::Zero(frame.m(), frame.m());
        for (int a = 0; a < imm.n(); ++a) de += frame.tangent_coords(a, i) * d[a];
        // (A, B) -> <D_{e_i} e_A, e_B>
        out.forms.push_back(imm.ambient().gram(de, b));
    }
    return out;
}

} // namespace psg
