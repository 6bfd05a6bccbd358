#pragma once

#include <psg/immersion.hpp>

#include <functional>
#include <optional>
#include <vector>

namespace psg {

///
/// Second fundamental form coefficients h^r_ij = <D_{e_i} e_j, e_r>.
///
/// One n x n matrix per normal direction: the sphere normals e_{n+1}..e_{m-1}
/// first, the position vector x last (h^x_ij = -eps_i delta_ij). Spherical
/// quantities restrict r to the first m-1-n entries.
///
using SecondForm = std::vector<Matrix>;

SecondForm second_fundamental_form(const Immersion& imm, const AdaptedFrame& frame);

struct MeanCurvature
{
    Vector H; ///< in E^m_s
    Vector Hhat; ///< in S^{m-1}_s(1), Hhat = H + x
    std::optional<double> alpha_hat; ///< hypersurfaces: Hhat = eps_{n+1} alpha_hat e_{n+1}
};

/// H = (1/n) sum_r eps_r tr(A_r) e_r, tr(A_r) = sum_i eps_i h^r_ii.
MeanCurvature mean_curvature(const AdaptedFrame& frame, const SecondForm& h);

/// sum eps_i eps_j eps_r h^r_ij h^r_ji over all normals, or sphere normals
/// only when `spherical`.
double squared_norm_h(const AdaptedFrame& frame, const SecondForm& h, bool spherical);

struct ScalarCurvature
{
    double S;
    /// S / (n (n - 1)); the Gaussian curvature K = S / 2 for surfaces.
    double normalized;
    std::optional<double> gauss;
};

/// S = n(n-1) + n^2 <Hhat, Hhat> - |hhat|^2.
ScalarCurvature scalar_curvature(const Signature& sig, int n, const Vector& Hhat, double h_sq);

///
/// R^D(e_j, e_k; e_r, e_s) = sum_i eps_i (h^r_ik h^s_ij - h^r_ij h^s_ik) for
/// sphere normals r, s.
///
struct NormalCurvature
{
    int normals = 0;
    /// blocks[r * normals + s](j, k) = R^r_{s j k}
    std::vector<Matrix> blocks;

    double operator()(int r, int s, int j, int k) const { return blocks[r * normals + s](j, k); }
    double sup() const;
};

NormalCurvature normal_curvature(const AdaptedFrame& frame, const SecondForm& h);

/// Hhat from chart data alone (independent of the normal frame).
Vector mean_curvature_field(const Immersion& imm, const Vector& u);

/// Columns D_{e_k} Hhat, k = 1..n: central differences of Hhat projected to the
/// normal bundle of M in the sphere.
Matrix normal_derivative_mean_curvature(const Immersion& imm, const AdaptedFrame& frame, double step = 1e-4);

///
/// Everything the Gauss map formulas consume at one point.
///
struct GeometryReport
{
    AdaptedFrame frame;
    SecondForm h;
    Vector H;
    Vector Hhat;
    std::optional<double> alpha_hat;
    double h_sq_ambient = 0; ///< |h|^2
    double h_sq = 0; ///< |hhat|^2
    double S = 0;
    double S_ambient = 0; ///< n^2 <H,H> - |h|^2
    double normalized_curvature = 0;
    std::optional<double> gauss_curvature;
    NormalCurvature RD;
    Matrix DHhat;
    std::optional<ConnectionForms> omega;

    const Vector& u() const { return frame.u; }
    int n() const { return frame.n(); }
};

struct ReportOptions
{
    bool connection = false;
    double dh_step = 1e-4;
    double frame_step = 1e-3;
};

GeometryReport geometry_report(const Immersion& imm, const Vector& u, const ReportOptions& opts = {});
GeometryReport geometry_report(const Immersion& imm, const AdaptedFrame& frame, const ReportOptions& opts = {});

/// Optional modification of h applied before the Codazzi check (u, h).
using SecondFormHook = std::function<void(const Vector&, SecondForm&)>;

///
/// max_{r,i,j,k} |h^r_{ij,k} - h^r_{jk,i}| with
/// h^r_{jk,i} = e_i(h^r_jk) - sum_l eps_l (h^r_lk w_jl(e_i) + h^r_lj w_kl(e_i))
///              + sum_s eps_s h^s_jk w_sr(e_i),
/// r and s ranging over all normals including x.
///
double codazzi_residual(
    const Immersion& imm,
    const Vector& u,
    const SecondFormHook& hook = {},
    double step = 1e-3);

/// True iff Hhat is null and nonzero at every report.
bool marginally_trapped(const Signature& sig, const std::vector<GeometryReport>& reports, double tol = 1e-9);

} // namespace psg
