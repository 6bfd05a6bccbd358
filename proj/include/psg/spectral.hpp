#pragma once

#include <psg/gaussmap.hpp>

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace psg {

enum class Verdict { harmonic, one_type_through_origin, one_type_with_constant, biharmonic, inconclusive };

const char* to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

///
/// Least-squares solution of Delta nu = lambda (nu - c) in the Euclidean
/// coefficient norm.
///
struct OneTypeFit
{
    double lambda = 0;
    MultivectorD c;
    double residual = 0; ///< sup_k |Delta nu_k - lambda (nu_k - c)|
};

///
/// lambda from the centered samples, c = mean(nu) - mean(Delta nu) / lambda.
/// Throws DegenerateInput for fewer than 3 samples or constant nu, and
/// NoOneTypeFit when lambda vanishes while Delta nu does not.
///
OneTypeFit fit_one_type(const std::vector<MultivectorD>& nu, const std::vector<MultivectorD>& lap);

struct ClassifyOptions
{
    double tol_analytic = 1e-6;
    double tol_fd = 1e-3;
    double tol_biharmonic = 1e-3;
    double bilaplacian_step = 5e-3;
    /// Relative threshold for a nonzero constant component.
    double constant_threshold = 1e-6;
    /// Also evaluate the biharmonic test when an earlier stage succeeded.
    bool always_bilaplacian = false;
};

struct Sample
{
    Vector u;
    MultivectorD nu;
    MultivectorD lap;
};

/// nu and the closed-form Laplacian at each point (grid-parallel).
std::vector<Sample> collect_samples(const Immersion& imm, const std::vector<Vector>& points);

/// Hhat = 0, S constant and R^D = 0 over the sampled reports.
struct GeometricCriterion
{
    double hhat_sup = 0;
    double scalar_mean = 0;
    double scalar_std = 0;
    double normal_curvature_sup = 0;
    bool minimal_flat_constant = false; ///< all three hold
    bool harmonic_condition = false; ///< additionally S = n(n-1)
};

GeometricCriterion geometric_criterion(const std::vector<GeometryReport>& reports, double tol = 1e-6);

struct SpectralFit
{
    Verdict verdict = Verdict::inconclusive;
    std::optional<double> lambda;
    std::optional<MultivectorD> c;
    double residual = 0;
    int samples_used = 0;

    /// max(1, sup |nu|): every threshold is relative to it.
    double scale = 1;
    double laplacian_sup = 0;
    std::optional<double> bilaplacian_sup;
    std::optional<double> held_out_residual;
    bool null_type = false;
    std::optional<GeometricCriterion> criterion;
    std::vector<std::string> diagnostics;
};

///
/// Decision cascade over the sampled points: harmonic, 1-type (through the
/// origin or with a constant component), biharmonic, inconclusive. One-type
/// verdicts are re-checked at `held_out` points; the result is cross-checked
/// against the geometric criterion, and a disagreement downgrades the verdict
/// to inconclusive.
///
SpectralFit classify(
    const Immersion& imm,
    const std::vector<Vector>& points,
    const std::vector<Vector>& held_out = {},
    const ClassifyOptions& opts = {});

/// Same, from precomputed samples and reports at the same points.
SpectralFit classify(
    const Immersion& imm,
    const std::vector<Sample>& samples,
    const std::vector<GeometryReport>& reports,
    const std::vector<Vector>& held_out,
    const ClassifyOptions& opts);

///
/// Constant-component decomposition of a totally umbilical hypersurface:
///   c     = (nu - eps alpha ebar) / (1 + eps alpha^2)
///   nu_p  = eps alpha / (1 + eps alpha^2) (alpha nu + ebar)
///   lambda_p = n (1 + eps alpha^2)
/// with eps = eps_{n+1} and ebar = e_{n+1} ^ e_1 ^ .. ^ e_n.
///
struct Decomposition
{
    MultivectorD c;
    MultivectorD nu_p;
    double lambda_p = 0;
    double alpha_hat = 0;
};

/// Throws NotHypersurface, FlatUmbilical (1 + eps alpha^2 = 0) or
/// DegenerateInput (alpha = 0 or not umbilical at the point).
Decomposition predicted_decomposition(const Immersion& imm, const GeometryReport& rep, double tol = 1e-8);

///
/// Monic P of least degree <= max_deg with P(Delta) tau = 0 in the least
/// squares sense. levels[j][k] is Delta^j tau at sample k.
///
struct AnnihilatingPolynomial
{
    int degree = 0;
    std::vector<double> coeffs; ///< ascending, coeffs[degree] = 1
    std::vector<std::complex<double>> roots;
    bool simple_roots = true;
    double residual = 0;
    bool degenerate = false; ///< tau vanishes
    int effective_degree = 0; ///< after dropping dependent levels
};

AnnihilatingPolynomial annihilating_polynomial(
    const std::vector<std::vector<MultivectorD>>& levels,
    int max_deg = 2,
    double tol = 1e-6);

struct ConstantComponentResult
{
    bool holds = false;
    double dh_sup = 0;
    double umbilic_residual = 0; ///< max |hhat(e_i, e_j) - <e_i, e_j> Hhat|
    double flatness = 0; ///< min |1 + <Hhat, Hhat>|
    double hhat_min = 0; ///< min |Hhat|_euclid
    std::vector<std::string> diagnostics;
};

///
/// Parallel non-null mean curvature, first normal space spanned by Hhat,
/// total umbilicity and 1 + <Hhat, Hhat> != 0. Throws NullMeanCurvature when
/// Hhat is null and nonzero at some report.
///
ConstantComponentResult constant_component_criterion(const Signature& sig, const std::vector<GeometryReport>& reports, double tol = 1e-6);

} // namespace psg
