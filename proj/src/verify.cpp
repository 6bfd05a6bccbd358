#include <psg/verify.hpp>

#include <psg/parallel.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <limits>
#include <random>

#ifndef PSG_VERSION
#define PSG_VERSION "0.0.0"
#endif

namespace psg {

namespace {

struct Stat
{
    double min = std::numeric_limits<double>::infinity();
    double max = -std::numeric_limits<double>::infinity();
    double sum = 0;
    int count = 0;

    void add(double v)
    {
        min = std::min(min, v);
        max = std::max(max, v);
        sum += v;
        ++count;
    }

    Json json() const
    {
        if (count == 0) return nullptr;
        return Json{{"min", min}, {"max", max}, {"mean", sum / count}};
    }
};

double sup_norm(const std::vector<MultivectorD>& values)
{
    double s = 0;
    for (const auto& v : values) s = std::max(s, v.euclidean_norm());
    return s;
}

Json conventions()
{
    return {
        {"signature", "spacelike axes first, the last s axes timelike"},
        {"orientation", "chart order: e_i from Gram-Schmidt of the chart partials times tangent_mix, x last"},
        {"laplacian", "Delta = -div grad"},
        {"multivector_basis", "lexicographic subsets of the ambient axes"},
        {"second_fundamental_form", "h^r_ij = <D_{e_i} e_j, e_r>"},
    };
}

Json vector_json(const Vector& v)
{
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
    return out;
}

Check make_check(std::string name, bool pass, double measured, double tolerance, std::string basis = {}, std::string detail = {})
{
    Check c;
    c.name = std::move(name);
    c.pass = pass;
    c.measured = measured;
    c.tolerance = tolerance;
    c.basis = std::move(basis);
    c.detail = std::move(detail);
    return c;
}

Check upper_bound(std::string name, double measured, double tolerance, std::string basis = {})
{
    return make_check(std::move(name), measured <= tolerance, measured, tolerance, std::move(basis));
}

Check categorical(std::string name, const std::string& expected, const std::string& got, std::string basis)
{
    const bool same = expected == got;
    return make_check(std::move(name), same, same ? 0 : 1, 0, std::move(basis), "expected " + expected + ", got " + got);
}

std::string basis_of(const Expected& e, const std::string& field)
{
    const auto it = e.basis.find(field);
    return it == e.basis.end() ? std::string(to_string(Basis::computed)) : std::string(to_string(it->second));
}

Json fit_json(const SpectralFit& fit)
{
    Json out;
    out["verdict"] = to_string(fit.verdict);
    out["lambda"] = fit.lambda ? Json(*fit.lambda) : Json(nullptr);
    out["c"] = fit.c ? to_json(*fit.c) : Json(nullptr);
    out["residual"] = fit.residual;
    out["samples_used"] = fit.samples_used;
    out["scale"] = fit.scale;
    out["laplacian_sup"] = fit.laplacian_sup;
    out["bilaplacian_sup"] = fit.bilaplacian_sup ? Json(*fit.bilaplacian_sup) : Json(nullptr);
    out["held_out_residual"] = fit.held_out_residual ? Json(*fit.held_out_residual) : Json(nullptr);
    out["null_type"] = fit.null_type;
    if (fit.criterion) {
        const auto& c = *fit.criterion;
        out["criterion"] = {
            {"hhat_sup", c.hhat_sup},
            {"scalar_mean", c.scalar_mean},
            {"scalar_std", c.scalar_std},
            {"normal_curvature_sup", c.normal_curvature_sup},
            {"minimal_flat_constant", c.minimal_flat_constant},
            {"harmonic_condition", c.harmonic_condition},
        };
    } else {
        out["criterion"] = nullptr;
    }
    out["diagnostics"] = fit.diagnostics;
    return out;
}

Json surface_json(const Immersion& imm, const std::string& summary, bool catalog)
{
    return {
        {"name", imm.name()},
        {"summary", summary},
        {"source", catalog ? "catalog" : "chart"},
        {"ambient", {{"m", imm.m()}, {"s", imm.ambient().index()}}},
        {"n", imm.n()},
        {"t", imm.t()},
        {"domain", {{"lo", vector_json(imm.domain_lo())}, {"hi", vector_json(imm.domain_hi())}}},
    };
}

Json finish(Json report, const std::vector<Check>& checks)
{
    bool pass = true;
    Json list = Json::array();
    for (const auto& c : checks) {
        pass = pass && c.pass;
        list.push_back(to_json(c));
    }
    report["checks"] = std::move(list);
    report["pass"] = pass;
    report["exit_code"] = pass ? exit_pass : exit_check_failure;
    return report;
}

double finite_or_zero(double v)
{
    return std::isfinite(v) ? v : 0.0;
}

} // namespace

void RunConfig::validate() const
{
    for (int g : grid) {
        if (g < 3) throw ParameterError("grid needs at least 3 points per axis");
    }
    if (!(margin >= 0 && margin < 0.5)) throw ParameterError("margin must lie in [0, 0.5)");
    if (!(tol_analytic > 0 && tol_fd > 0 && tol_biharmonic > 0)) throw ParameterError("tolerances must be positive");
    if (!(fd_step > 0)) throw ParameterError("fd step must be positive");
    if (held_out < 0) throw ParameterError("held-out count must be nonnegative");
    if (n && *n < 1) throw ParameterError("n must be positive");
}

Json to_json(const RunConfig& cfg)
{
    Json out;
    out["surface"] = cfg.surface;
    out["n"] = cfg.n ? Json(*cfg.n) : Json(nullptr);
    out["grid"] = cfg.grid;
    out["margin"] = cfg.margin;
    out["tolerances"] = {{"analytic", cfg.tol_analytic}, {"fd", cfg.tol_fd}, {"biharmonic", cfg.tol_biharmonic}};
    out["fd_step"] = cfg.fd_step;
    out["held_out"] = cfg.held_out;
    out["seed"] = cfg.seed;
    return out;
}

Json to_json(const MultivectorD& mv)
{
    Json coeffs = Json::array();
    for (Eigen::Index i = 0; i < mv.coeffs().size(); ++i) coeffs.push_back(mv.coeffs()[i]);
    return {{"m", mv.space().ambient().dim()}, {"s", mv.space().ambient().index()}, {"grade", mv.space().grade()},
            {"coeffs", std::move(coeffs)}};
}

Json to_json(const Check& c)
{
    Json out{{"name", c.name}, {"pass", c.pass}, {"measured", finite_or_zero(c.measured)}, {"tolerance", c.tolerance}};
    out["basis"] = c.basis.empty() ? Json(nullptr) : Json(c.basis);
    if (!c.detail.empty()) out["detail"] = c.detail;
    return out;
}

std::vector<Vector> grid_points(const Immersion& imm, const std::vector<int>& counts, double margin)
{
    const int n = imm.n();
    if (static_cast<int>(counts.size()) != n) throw ParameterError("grid needs one count per parameter");
    const Vector width = imm.domain_hi() - imm.domain_lo();
    const Vector lo = imm.domain_lo() + margin * width;
    const Vector hi = imm.domain_hi() - margin * width;
    std::size_t total = 1;
    for (int c : counts) total *= static_cast<std::size_t>(c);
    std::vector<Vector> out;
    out.reserve(total);
    for (std::size_t k = 0; k < total; ++k) {
        Vector u(n);
        std::size_t rest = k;
        for (int i = 0; i < n; ++i) {
            const auto j = static_cast<int>(rest % counts[i]);
            rest /= counts[i];
            u[i] = lo[i] + (hi[i] - lo[i]) * j / (counts[i] - 1);
        }
        out.push_back(std::move(u));
    }
    return out;
}

std::vector<Vector> held_out_points(const Immersion& imm, double margin, int count, std::uint64_t seed)
{
    std::mt19937_64 gen(seed);
    const Vector width = imm.domain_hi() - imm.domain_lo();
    const Vector lo = imm.domain_lo() + margin * width;
    const Vector span = (1 - 2 * margin) * width;
    std::vector<Vector> out;
    for (int k = 0; k < count; ++k) {
        Vector u(imm.n());
        // 53 high bits, so the points do not depend on the standard library
        for (int i = 0; i < imm.n(); ++i) u[i] = lo[i] + span[i] * (static_cast<double>(gen() >> 11) * 0x1.0p-53);
        out.push_back(std::move(u));
    }
    return out;
}

std::vector<int> effective_grid(const Immersion& imm, const RunConfig& cfg)
{
    if (cfg.grid.empty()) return std::vector<int>(imm.n(), imm.n() == 2 ? 9 : 5);
    if (cfg.grid.size() == 1) return std::vector<int>(imm.n(), cfg.grid[0]);
    if (static_cast<int>(cfg.grid.size()) != imm.n()) {
        throw ParameterError("grid has " + std::to_string(cfg.grid.size()) + " axes, the surface has " + std::to_string(imm.n()));
    }
    return cfg.grid;
}

Json verify_immersion(const Immersion& imm, const std::string& summary, const Expected* expected, const RunConfig& cfg)
{
    cfg.validate();
    const Signature& sig = imm.ambient();
    const int n = imm.n();
    const std::vector<int> counts = effective_grid(imm, cfg);
    const std::vector<Vector> points = grid_points(imm, counts, cfg.margin);
    const std::vector<Vector> held = held_out_points(imm, cfg.margin, cfg.held_out, cfg.seed);
    const std::size_t count = points.size();

    const auto reports = parallel_map<GeometryReport>(count, [&](std::size_t k) { return geometry_report(imm, points[k]); });
    const auto samples = collect_samples(imm, points);
    const MultivectorField nu = gauss_map_field(imm);
    const auto numeric = parallel_map<MultivectorD>(count, [&](std::size_t k) {
        return laplace_beltrami_numeric(imm, nu, points[k], cfg.fd_step);
    });
    const auto dif1 = parallel_map<double>(count, [&](std::size_t k) {
        double worst = 0;
        for (int i = 0; i < n; ++i) {
            const MultivectorD a = gauss_map_derivative(sig, reports[k].frame, reports[k].h, i);
            const MultivectorD b = gauss_map_derivative_numeric(imm, reports[k].frame, i);
            worst = std::max(worst, (a - b).euclidean_norm());
        }
        return worst;
    });
    const auto codazzi = parallel_map<double>(count, [&](std::size_t k) { return codazzi_residual(imm, points[k]); });

    ClassifyOptions opts;
    opts.tol_analytic = cfg.tol_analytic;
    opts.tol_fd = cfg.tol_fd;
    opts.tol_biharmonic = cfg.tol_biharmonic;
    opts.always_bilaplacian = expected && expected->verdict == Verdict::biharmonic;
    const SpectralFit fit = classify(imm, samples, reports, held, opts);

    std::vector<Check> checks;

    double sphere = 0, orthonormality = 0;
    int index_mismatch = 0;
    Stat curvature, h_sq, scalar, hhat_norm, hhat_sq, rd, alpha, dh;
    for (std::size_t k = 0; k < count; ++k) {
        const auto& r = reports[k];
        sphere = std::max(sphere, std::abs(sig.inner(r.frame.x, r.frame.x) - 1));
        orthonormality = std::max(orthonormality, frame_orthonormality_residual(sig, r.frame));
        index_mismatch += r.frame.tangent_index() != imm.t();
        curvature.add(r.normalized_curvature);
        h_sq.add(r.h_sq);
        scalar.add(r.S);
        hhat_norm.add(r.Hhat.norm());
        hhat_sq.add(sig.inner(r.Hhat, r.Hhat));
        rd.add(r.RD.sup());
        if (r.alpha_hat) alpha.add(*r.alpha_hat);
        double d = 0;
        for (Eigen::Index i = 0; i < r.DHhat.cols(); ++i) d = std::max(d, r.DHhat.col(i).norm());
        dh.add(d);
    }
    checks.push_back(upper_bound("sphere_constraint", sphere, 1e-10));
    checks.push_back(make_check("metric_index", index_mismatch == 0, index_mismatch, 0, {}, "points whose induced index differs from t"));
    checks.push_back(upper_bound("frame_orthonormality", orthonormality, 1e-12));
    checks.push_back(upper_bound("codazzi", *std::max_element(codazzi.begin(), codazzi.end()), 1e-6));

    std::vector<MultivectorD> formula;
    for (const auto& s : samples) formula.push_back(s.lap);
    const double lap_sup = sup_norm(formula);
    double route = 0;
    for (std::size_t k = 0; k < count; ++k) route = std::max(route, (formula[k] - numeric[k]).euclidean_norm());
    checks.push_back(upper_bound("route_equivalence", route / (1 + lap_sup), cfg.tol_fd));
    checks.push_back(upper_bound("gauss_map_derivative", *std::max_element(dif1.begin(), dif1.end()), 1e-5));

    if (imm.is_hypersurface()) {
        const MultivectorField companion = companion_field(imm);
        const auto residual = parallel_map<double>(count, [&](std::size_t k) {
            const MultivectorD a = laplacian_companion(imm, points[k]);
            const MultivectorD b = laplace_beltrami_numeric(imm, companion, points[k], cfg.fd_step);
            return (a - b).euclidean_norm() / (1 + a.euclidean_norm());
        });
        checks.push_back(upper_bound("companion_identity", *std::max_element(residual.begin(), residual.end()), cfg.tol_fd));
    }

    const GeometricCriterion criterion = fit.criterion ? *fit.criterion : geometric_criterion(reports, cfg.tol_analytic);
    const bool minimal_type = fit.verdict == Verdict::harmonic || fit.verdict == Verdict::one_type_through_origin;
    checks.push_back(make_check(
        "minimal_flat_constant_equivalence",
        minimal_type == criterion.minimal_flat_constant,
        minimal_type == criterion.minimal_flat_constant ? 0 : 1,
        0,
        to_string(Basis::published),
        std::string("verdict ") + to_string(fit.verdict) + ", criterion " + (criterion.minimal_flat_constant ? "holds" : "fails")));

    if (fit.c && fit.lambda && *fit.lambda != 0) {
        double spread = 0;
        for (const auto& s : samples) {
            const MultivectorD c = s.nu - (1.0 / *fit.lambda) * s.lap;
            spread = std::max(spread, (c - *fit.c).euclidean_norm());
        }
        checks.push_back(upper_bound("constant_component_field", spread, cfg.tol_analytic * fit.scale));
    }

    if (expected) {
        const Expected& e = *expected;
        if (e.verdict) {
            checks.push_back(categorical("verdict", to_string(*e.verdict), to_string(fit.verdict), basis_of(e, "verdict")));
            if (*e.verdict == Verdict::one_type_through_origin) {
                const double c_norm = fit.c ? fit.c->euclidean_norm() : 0.0;
                checks.push_back(upper_bound("constant_component_norm", c_norm, cfg.tol_analytic, basis_of(e, "verdict")));
            }
            if (*e.verdict == Verdict::harmonic) {
                checks.push_back(upper_bound("laplacian_vanishes", sup_norm(numeric), cfg.tol_fd, basis_of(e, "verdict")));
            }
            if (*e.verdict == Verdict::biharmonic) {
                checks.push_back(make_check("laplacian_nonzero", lap_sup > 0.1, lap_sup, 0.1, basis_of(e, "verdict")));
                const double bilap = fit.bilaplacian_sup.value_or(std::numeric_limits<double>::infinity());
                checks.push_back(upper_bound("bilaplacian", bilap, cfg.tol_biharmonic, basis_of(e, "verdict")));
            }
        }
        if (e.lambda && e.verdict != Verdict::harmonic) {
            const double got = fit.lambda.value_or(std::numeric_limits<double>::infinity());
            checks.push_back(upper_bound("lambda", std::abs(got - *e.lambda), cfg.tol_analytic, basis_of(e, "lambda")));
        }
        if (e.hhat_character) {
            int mismatch = 0;
            std::string got;
            for (const auto& r : reports) {
                const Causal c = causal_character(sig, r.Hhat);
                if (c != *e.hhat_character) {
                    ++mismatch;
                    got = to_string(c);
                }
            }
            checks.push_back(make_check(
                "hhat_character", mismatch == 0, mismatch, 0, basis_of(e, "hhat_character"),
                std::string("expected ") + to_string(*e.hhat_character) + (mismatch ? ", got " + got : "")));
        }
        if (e.curvature) {
            const double d = std::max(std::abs(curvature.max - *e.curvature), std::abs(curvature.min - *e.curvature));
            checks.push_back(upper_bound("curvature", d, 1e-8, basis_of(e, "curvature")));
        }
        if (e.normal_curvature) {
            checks.push_back(upper_bound("normal_curvature", std::abs(rd.max - *e.normal_curvature), 1e-8, basis_of(e, "normal_curvature")));
        }
        if (e.h_sq) {
            const double d = std::max(std::abs(h_sq.max - *e.h_sq), std::abs(h_sq.min - *e.h_sq));
            checks.push_back(upper_bound("h_sq", d, 1e-8, basis_of(e, "h_sq")));
        }
        if (e.alpha_hat) {
            const double d = alpha.count ? std::max(std::abs(alpha.max - *e.alpha_hat), std::abs(alpha.min - *e.alpha_hat))
                                         : std::numeric_limits<double>::infinity();
            checks.push_back(upper_bound("alpha_hat", d, 1e-8, basis_of(e, "alpha_hat")));
        }
        if (e.shape_scalars) {
            const auto& k = *e.shape_scalars;
            double d = static_cast<int>(k.size()) == imm.codim() ? 0.0 : std::numeric_limits<double>::infinity();
            for (const auto& r : reports) {
                for (int s = 0; s < imm.codim() && std::isfinite(d); ++s) {
                    for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j)
                            d = std::max(d, std::abs(r.frame.eps[i] * r.h[s](i, j) - (i == j ? k[s] : 0.0)));
                }
            }
            checks.push_back(upper_bound("shape_scalars", d, 1e-8, basis_of(e, "shape_scalars")));
        }
        if (e.parallel_mean_curvature) {
            checks.push_back(upper_bound("parallel_mean_curvature", dh.max, 1e-6, basis_of(e, "parallel_mean_curvature")));
        }
        if (e.constant_component) {
            std::string got;
            try {
                got = constant_component_criterion(sig, reports, cfg.tol_analytic).holds ? "holds" : "fails";
            } catch (const NullMeanCurvature&) {
                got = to_string(CriterionOutcome::null_mean_curvature);
            }
            checks.push_back(categorical("constant_component_criterion", to_string(*e.constant_component), got, basis_of(e, "constant_component")));
        }
        if (imm.is_hypersurface() && e.verdict == Verdict::one_type_with_constant && fit.c && fit.lambda) {
            double lambda_gap = 0, c_gap = 0, split = 0;
            for (std::size_t k = 0; k < count; ++k) {
                const Decomposition d = predicted_decomposition(imm, reports[k]);
                lambda_gap = std::max(lambda_gap, std::abs(d.lambda_p - *fit.lambda));
                c_gap = std::max(c_gap, (d.c - *fit.c).euclidean_norm());
                split = std::max(split, (samples[k].nu - d.c - d.nu_p).euclidean_norm());
            }
            checks.push_back(upper_bound("decomposition_lambda", lambda_gap, 1e-5, basis_of(e, "lambda")));
            checks.push_back(upper_bound("decomposition_c", c_gap, 1e-5, basis_of(e, "lambda")));
            checks.push_back(upper_bound("decomposition_split", split, 1e-8, to_string(Basis::elementary)));
        }
    }

    Json report;
    report["format"] = "psg-report";
    report["version"] = PSG_VERSION;
    report["conventions"] = conventions();
    report["config"] = to_json(cfg);
    report["surface"] = surface_json(imm, summary, expected != nullptr);
    Json stats;
    stats["normalized_curvature"] = curvature.json();
    stats["scalar_curvature"] = scalar.json();
    stats["h_sq"] = h_sq.json();
    stats["hhat_norm"] = hhat_norm.json();
    stats["hhat_inner"] = hhat_sq.json();
    stats["normal_curvature"] = rd.json();
    stats["alpha_hat"] = alpha.json();
    stats["dhhat_norm"] = dh.json();
    report["summary"] = {
        {"grid", counts},
        {"points", count},
        {"held_out", held.size()},
        {"laplacian_sup", lap_sup},
        {"scalars", std::move(stats)},
    };
    report["spectral"] = fit_json(fit);
    if (expected) {
        Json basis = Json::object();
        for (const auto& [field, b] : expected->basis) basis[field] = to_string(b);
        report["expected_basis"] = std::move(basis);
    }
    return finish(std::move(report), checks);
}

Json verify_entry(const CatalogEntry& entry, const RunConfig& cfg)
{
    return verify_immersion(*entry.immersion, entry.summary, &entry.expected, cfg);
}

std::string error_type(const std::exception& e)
{
    if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
    if (dynamic_cast<const ParameterError*>(&e)) return "ParameterError";
    if (dynamic_cast<const DimensionError*>(&e)) return "DimensionError";
    if (dynamic_cast<const NotHypersurface*>(&e)) return "NotHypersurface";
    if (dynamic_cast<const NullPivot*>(&e)) return "NullPivot";
    if (dynamic_cast<const LinearDependence*>(&e)) return "LinearDependence";
    if (dynamic_cast<const DegenerateMetric*>(&e)) return "DegenerateMetric";
    if (dynamic_cast<const DomainSingularity*>(&e)) return "DomainSingularity";
    if (dynamic_cast<const DegenerateInput*>(&e)) return "DegenerateInput";
    if (dynamic_cast<const FlatUmbilical*>(&e)) return "FlatUmbilical";
    if (dynamic_cast<const NullMeanCurvature*>(&e)) return "NullMeanCurvature";
    if (dynamic_cast<const NoOneTypeFit*>(&e)) return "NoOneTypeFit";
    if (dynamic_cast<const Error*>(&e)) return "Error";
    return "InternalError";
}

int exit_code_for(const std::exception& e)
{
    if (dynamic_cast<const ParameterError*>(&e) || dynamic_cast<const ParseError*>(&e) ||
        dynamic_cast<const DimensionError*>(&e) || dynamic_cast<const NotHypersurface*>(&e)) {
        return exit_config_error;
    }
    return exit_numeric_degeneracy;
}

Json error_report(const RunConfig& cfg, const std::exception& e)
{
    Json report;
    report["format"] = "psg-report";
    report["version"] = PSG_VERSION;
    report["conventions"] = conventions();
    report["config"] = to_json(cfg);
    Json err{{"type", error_type(e)}, {"message", e.what()}};
    if (const auto* p = dynamic_cast<const ParseError*>(&e)) err["line"] = p->line();
    if (const auto* p = dynamic_cast<const NullPivot*>(&e)) err["index"] = p->index();
    report["error"] = std::move(err);
    report["checks"] = Json::array();
    report["pass"] = false;
    report["exit_code"] = exit_code_for(e);
    return report;
}

Json run_verify(const RunConfig& cfg)
{
    try {
        cfg.validate();
        const auto names = catalog_names();
        const bool known = std::find(names.begin(), names.end(), cfg.surface) != names.end() ||
            cfg.surface.rfind("horosphere_n", 0) == 0;
        if (known) return verify_entry(catalog_entry(cfg.surface, cfg.n), cfg);
        if (!std::filesystem::exists(cfg.surface)) {
            throw ParameterError("'" + cfg.surface + "' is neither a catalog surface nor a chart file");
        }
        if (cfg.n) throw ParameterError("--n applies to catalog surfaces only");
        const Immersion imm = immersion_from_chart(load_chart_file(cfg.surface));
        return verify_immersion(imm, "chart file " + cfg.surface, nullptr, cfg);
    } catch (const std::exception& e) {
        return error_report(cfg, e);
    }
}

Json run_suite(const RunConfig& cfg)
{
    Json entries = Json::array();
    Json reports = Json::array();
    std::vector<Check> checks;
    int exit_code = exit_pass;
    std::map<std::string, Check> invariants;
    const std::vector<std::string> invariant_names = {
        "route_equivalence", "gauss_map_derivative", "codazzi", "frame_orthonormality", "companion_identity"};

    std::vector<CatalogEntry> catalog;
    try {
        cfg.validate();
        catalog = full_catalog();
    } catch (const std::exception& e) {
        return error_report(cfg, e);
    }
    for (const auto& entry : catalog) {
        RunConfig local = cfg;
        local.surface = entry.name;
        local.n = entry.immersion->n();
        Json report;
        try {
            report = verify_entry(entry, local);
        } catch (const std::exception& e) {
            report = error_report(local, e);
        }
        const int code = report["exit_code"].get<int>();
        exit_code = std::max(exit_code, code);
        int failed = 0;
        for (const auto& c : report["checks"]) {
            failed += !c["pass"].get<bool>();
            const std::string name = c["name"].get<std::string>();
            if (std::find(invariant_names.begin(), invariant_names.end(), name) == invariant_names.end()) continue;
            auto [it, fresh] = invariants.try_emplace(name, make_check(name, true, 0, c["tolerance"].get<double>()));
            Check& agg = it->second;
            agg.pass = agg.pass && c["pass"].get<bool>();
            if (fresh || c["measured"].get<double>() > agg.measured) {
                agg.measured = c["measured"].get<double>();
                agg.detail = "worst: " + entry.name;
            }
        }
        entries.push_back({
            {"name", entry.name},
            {"pass", report["pass"]},
            {"exit_code", code},
            {"failed_checks", failed},
            {"verdict", report.contains("spectral") ? report["spectral"]["verdict"] : Json(nullptr)},
        });
        checks.push_back(make_check(entry.name, report["pass"].get<bool>(), failed, 0, {}, "failed checks"));
        reports.push_back(std::move(report));
    }
    for (const auto& name : invariant_names) {
        if (auto it = invariants.find(name); it != invariants.end()) checks.push_back(it->second);
    }

    Json suite;
    suite["format"] = "psg-suite";
    suite["version"] = PSG_VERSION;
    suite["conventions"] = conventions();
    suite["config"] = to_json(cfg);
    suite["entries"] = std::move(entries);
    suite = finish(std::move(suite), checks);
    suite["exit_code"] = exit_code;
    suite["reports"] = std::move(reports);
    return suite;
}

} // namespace psg
