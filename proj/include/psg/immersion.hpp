#pragma once

#include <psg/chart.hpp>
#include <psg/signature.hpp>

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace psg {

using VectorField = std::function<Vector(const Vector&)>;

///
/// Parametrized submanifold M^n_t of S^{m-1}_s(1) in E^m_s.
///
/// Normal frames are completed from the normal hints (in order) followed by
/// the coordinate axes. Tangent frames are the Gram-Schmidt orthonormalization
/// of the chart partials combined by `tangent_mix` (identity by default),
/// which keeps the chart orientation when det(tangent_mix) > 0.
///
class Immersion
{
public:
    Immersion(
        std::string name,
        Signature ambient,
        int n,
        int t,
        Vector domain_lo,
        Vector domain_hi,
        std::shared_ptr<const Chart> chart);

    const std::string& name() const { return m_name; }
    const Signature& ambient() const { return m_ambient; }
    int n() const { return m_n; }
    int t() const { return m_t; }
    int m() const { return m_ambient.dim(); }
    int codim() const { return m() - 1 - m_n; }
    bool is_hypersurface() const { return m() == m_n + 2; }

    const Vector& domain_lo() const { return m_lo; }
    const Vector& domain_hi() const { return m_hi; }
    Vector domain_center() const { return 0.5 * (m_lo + m_hi); }

    const Chart& chart() const { return *m_chart; }
    const std::shared_ptr<const Chart>& chart_ptr() const { return m_chart; }

    /// The chart as a term chart, when it is one.
    const TermChart* term_chart() const { return dynamic_cast<const TermChart*>(m_chart.get()); }

    const Matrix& tangent_mix() const { return m_mix; }
    Immersion& set_tangent_mix(const Matrix& mix);

    /// Constant normal hint.
    Immersion& add_normal_hint(const Vector& v);
    /// Position-dependent normal hint (not serializable).
    Immersion& add_normal_hint(VectorField field);

    std::size_t hint_count() const { return m_hints.size(); }
    Vector hint(std::size_t k, const Vector& u) const { return m_hints[k](u); }
    const std::vector<std::optional<Vector>>& constant_hints() const { return m_constant_hints; }

    Vector position(const Vector& u) const { return m_chart->value(u); }
    ChartJet jet(const Vector& u, int order) const;

private:
    std::string m_name;
    Signature m_ambient;
    int m_n;
    int m_t;
    Vector m_lo;
    Vector m_hi;
    std::shared_ptr<const Chart> m_chart;
    Matrix m_mix;
    std::vector<VectorField> m_hints;
    std::vector<std::optional<Vector>> m_constant_hints;
};

/// g_ij = <d_i x, d_j x>. Throws DegenerateMetric when |det g| < 1e-12.
Matrix induced_metric(const Immersion& imm, const Vector& u);

/// Number of negative eigenvalues of a symmetric matrix.
int metric_index(const Matrix& g);

///
/// Orthonormal frame adapted to the immersion at one point.
///
/// Columns of `basis()` are e_1..e_n (tangent), e_{n+1}..e_{m-1} (normals
/// within the sphere) and x. `eps` holds <e_A, e_A> for all m columns.
///
struct AdaptedFrame
{
    Vector u;
    Vector x;
    Matrix tangents;
    Matrix normals;
    std::vector<int> eps;

    /// e_i = sum_a tangent_coords(a, i) d_a x
    Matrix tangent_coords;

    /// Candidate each normal came from: k < hint_count is hint k, otherwise
    /// coordinate axis (k - hint_count).
    std::vector<int> normal_sources;

    int n() const { return static_cast<int>(tangents.cols()); }
    int m() const { return static_cast<int>(x.size()); }
    int normal_count() const { return static_cast<int>(normals.cols()); }

    /// m x m matrix [e_1 .. e_{m-1}, x].
    Matrix basis() const;
    Vector e(int a) const;

    /// Number of timelike tangent vectors.
    int tangent_index() const;
};

///
/// Adapted frame at u. Throws NullPivot (with the candidate id as index) when a
/// candidate normal direction is null, DegenerateMetric when the tangent
/// partials are degenerate.
///
AdaptedFrame adapted_frame(const Immersion& imm, const Vector& u, double pivot_tol = 1e-9);

/// Frame at u built from the same normal candidates as `reference`; used on
/// finite-difference stencils so the frame field is smooth.
AdaptedFrame adapted_frame_like(const Immersion& imm, const Vector& u, const AdaptedFrame& reference);

/// Flip/reorder the normals of `frame` to minimize the distance to `reference`
/// (same signature slots only).
void align_frame(AdaptedFrame& frame, const AdaptedFrame& reference);

/// Sum_A eps_A e_A e_A^T eta, which must be the identity.
double frame_completeness_residual(const Signature& sig, const AdaptedFrame& frame);

/// max |<e_A, e_B> - eps_A delta_AB|
double frame_orthonormality_residual(const Signature& sig, const AdaptedFrame& frame);

///
/// Connection coefficients omega_AB(e_i) = <D_{e_i} e_A, e_B> of the frame
/// field, including the position vector as the last index.
///
struct ConnectionForms
{
    /// forms[i](A, B) = omega_AB(e_i)
    std::vector<Matrix> forms;

    double operator()(int a, int b, int i) const { return forms[i](a, b); }

    /// max |omega_AB(e_i) + omega_BA(e_i)|
    double antisymmetry_residual() const;
};

/// d/du_a of the frame basis for every chart axis a, by Richardson-extrapolated
/// central differences of the frame field.
std::vector<Matrix> frame_derivatives(const Immersion& imm, const AdaptedFrame& frame, double step = 1e-3);

ConnectionForms frame_connection(const Immersion& imm, const AdaptedFrame& frame, double step = 1e-3);

} // namespace psg
