#pragma once

#include <psg/chart_text.hpp>
#include <psg/spectral.hpp>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace psg {

/// Where an expected value comes from.
enum class Basis { published, elementary, computed };

const char* to_string(Basis b);

/// Outcome expected from `constant_component_criterion`.
enum class CriterionOutcome { holds, fails, null_mean_curvature };

const char* to_string(CriterionOutcome c);

///
/// Expected record of a catalog surface. Absent fields are not checked.
///
struct Expected
{
    std::optional<Verdict> verdict;
    std::optional<double> lambda;
    std::optional<Causal> hhat_character;
    /// S / (n (n - 1)), constant over the chart.
    std::optional<double> curvature;
    /// sup |R^D|
    std::optional<double> normal_curvature;
    std::optional<double> h_sq;
    std::optional<double> alpha_hat;
    /// h^r_ij = k_r eps_i delta_ij for each sphere normal, in frame order.
    std::optional<std::vector<double>> shape_scalars;
    bool parallel_mean_curvature = false;
    std::optional<CriterionOutcome> constant_component;

    /// Field name -> basis of the expectation.
    std::map<std::string, Basis> basis;
};

struct CatalogEntry
{
    std::string name;
    std::string summary;
    std::shared_ptr<const Immersion> immersion;
    Expected expected;
};

CatalogEntry clifford_torus();
CatalogEntry pr_clifford_torus();
CatalogEntry marginally_trapped_surface();

/// Coordinate great pseudo-sphere S^n_t(1) on the first n+1-t spacelike and
/// the last t timelike axes.
CatalogEntry totally_geodesic_equator(int n = 2, int t = 1, Signature ambient = Signature(5, 1));

///
/// {x in S^{n+1}_s(1) : <x, a> = tau} for <a, a> in {-1, 0, 1}; the null case
/// uses the paraboloid chart of `horosphere`. The normal hint is a, so that
/// e_{n+1} = (a - tau x) / sqrt|<a,a> - tau^2|.
///
CatalogEntry umbilical_hypersurface(const std::string& name, int n, const Signature& ambient, const Vector& a, double tau);

///
/// Paraboloid chart x(w) = ((1 - <w,w>) / (2 tau)) a + tau b + w of the
/// pseudo-horosphere, with b null, <a, b> = 1 and w orthogonal to a and b.
///
CatalogEntry horosphere(int n, const Signature& ambient, const Vector& a, double tau = 1.0, const std::string& name = "horosphere");

/// The default pseudo-horosphere: n = 2 in E^4_1 or n = 3 in E^5_1.
CatalogEntry horosphere(int n = 2);

/// The six umbilical settings, indexed 1..6.
CatalogEntry umbilical_setting(int k);

/// Round S^2(c) in a totally geodesic S^3 of S^4_1 (codimension 2).
CatalogEntry umbilical_sphere_codim2();

/// Curve in the light cone with derivatives to any order.
struct NullCurve
{
    std::string name;
    Signature ambient;
    TermChart z;
};

struct NullCurveDiagnostics
{
    double null_sup = 0; ///< sup |<z, z>|
    double speed_sup = 0; ///< sup |<z', z'> - 4|
    double acceleration_sup = 0; ///< sup |<z'', z''>|
    double jerk_inf = 0; ///< inf |z'''|_euclid

    bool passes(double tol = 1e-10) const
    {
        return null_sup <= tol && speed_sup <= tol && acceleration_sup <= tol && jerk_inf > tol;
    }
};

NullCurveDiagnostics null_curve_validator(const NullCurve& z, const std::vector<double>& grid);

/// sqrt2 (cos u, sin u, sinh u, cosh u, 0) in E^5_2.
NullCurve default_null_curve();

/// (1 - u^2, 2u, 0, 1 + u^2, 0) in E^5_2: its third derivative vanishes.
NullCurve quadratic_null_curve();

///
/// L(u, v) = z(u) / (u + v) - z'(u) / 2 on the box [lo, hi]^2. Throws
/// ParameterError when z fails the validator, DomainSingularity when the box
/// reaches u + v = 0.
///
CatalogEntry chen_flat_surface(const NullCurve& z, double lo = 0.5, double hi = 1.5);

/// Names accepted by `catalog_entry`.
std::vector<std::string> catalog_names();

/// Entry by name; `n` selects the dimension where the entry has one.
CatalogEntry catalog_entry(const std::string& name, std::optional<int> n = std::nullopt);

/// Every entry exercised by the suite.
std::vector<CatalogEntry> full_catalog();

/// Chart text of an immersion with a term chart and constant hints.
ChartFile export_chart(const Immersion& imm);

Immersion immersion_from_chart(const ChartFile& file);

} // namespace psg
