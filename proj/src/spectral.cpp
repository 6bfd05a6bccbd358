#include <psg/parallel.hpp>
#include <psg/spectral.hpp>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <cmath>
#include <sstream>

namespace psg {

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::harmonic: return "harmonic";
    case Verdict::one_type_through_origin: return "one_type_through_origin";
    case Verdict::one_type_with_constant: return "one_type_with_constant";
    case Verdict::biharmonic: return "biharmonic";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

Verdict verdict_from_string(const std::string& s)
{
    for (Verdict v : {Verdict::harmonic, Verdict::one_type_through_origin, Verdict::one_type_with_constant,
                      Verdict::biharmonic, Verdict::inconclusive}) {
        if (s == to_string(v)) return v;
    }
    throw ParameterError("unknown verdict '" + s + "'");
}

OneTypeFit fit_one_type(const std::vector<MultivectorD>& nu, const std::vector<MultivectorD>& lap)
{
    const std::size_t k = nu.size();
    if (k < 3 || lap.size() != k) throw DegenerateInput("fit_one_type: need at least 3 paired samples");
    MultivectorD mean_nu = nu[0];
    MultivectorD mean_lap = lap[0];
    for (std::size_t i = 1; i < k; ++i) {
        mean_nu += nu[i];
        mean_lap += lap[i];
    }
    mean_nu *= 1.0 / k;
    mean_lap *= 1.0 / k;

    double xx = 0, xy = 0, nu_sq = 0, dev_sup = 0, lap_sup = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const auto x = nu[i].coeffs() - mean_nu.coeffs();
        const auto y = lap[i].coeffs() - mean_lap.coeffs();
        xx += x.squaredNorm();
        xy += x.dot(y);
        nu_sq += nu[i].coeffs().squaredNorm();
        dev_sup = std::max(dev_sup, x.norm());
        lap_sup = std::max(lap_sup, lap[i].euclidean_norm());
    }
    if (xx <= 1e-24 * nu_sq) throw DegenerateInput("fit_one_type: the samples of nu do not vary");

    OneTypeFit fit;
    fit.lambda = xy / xx;
    if (lap_sup == 0.0) {
        fit.lambda = 0;
        fit.c = MultivectorD(mean_nu.space_ptr());
        return fit;
    }
    if (std::abs(fit.lambda) * dev_sup <= 1e-8 * lap_sup) {
        throw NoOneTypeFit(fit.lambda, "fit_one_type: eigenvalue vanishes while the Laplacian does not");
    }
    fit.c = mean_nu - (1.0 / fit.lambda) * mean_lap;
    for (std::size_t i = 0; i < k; ++i) {
        fit.residual = std::max(fit.residual, (lap[i] - fit.lambda * (nu[i] - fit.c)).euclidean_norm());
    }
    return fit;
}

namespace {

struct PointData
{
    GeometryReport report;
    Sample sample;
};

PointData evaluate_point(const Immersion& imm, const Vector& u)
{
    PointData d;
    d.report = geometry_report(imm, u);
    d.sample.u = u;
    d.sample.nu = gauss_map(imm.ambient(), d.report.frame);
    d.sample.lap = laplacian_formula(imm.ambient(), d.report);
    return d;
}

} // namespace

std::vector<Sample> collect_samples(const Immersion& imm, const std::vector<Vector>& points)
{
    auto data = parallel_map<Sample>(points.size(), [&](std::size_t i) { return evaluate_point(imm, points[i]).sample; });
    return data;
}

GeometricCriterion geometric_criterion(const std::vector<GeometryReport>& reports, double tol)
{
    GeometricCriterion g;
    if (reports.empty()) return g;
    for (const auto& r : reports) {
        g.hhat_sup = std::max(g.hhat_sup, r.Hhat.norm());
        g.normal_curvature_sup = std::max(g.normal_curvature_sup, r.RD.sup());
        g.scalar_mean += r.S;
    }
    g.scalar_mean /= reports.size();
    if (reports.size() > 1) {
        double acc = 0;
        for (const auto& r : reports) acc += (r.S - g.scalar_mean) * (r.S - g.scalar_mean);
        g.scalar_std = std::sqrt(acc / (reports.size() - 1));
    }
    const int n = reports.front().n();
    g.minimal_flat_constant = g.hhat_sup < tol && g.scalar_std < tol * (1 + std::abs(g.scalar_mean)) &&
        g.normal_curvature_sup < tol;
    const double target = n * (n - 1);
    g.harmonic_condition = g.minimal_flat_constant && std::abs(g.scalar_mean - target) < tol * (1 + target);
    return g;
}

SpectralFit classify(const Immersion& imm, const std::vector<Vector>& points, const std::vector<Vector>& held_out, const ClassifyOptions& opts)
{
    auto data = parallel_map<PointData>(points.size(), [&](std::size_t i) { return evaluate_point(imm, points[i]); });
    std::vector<Sample> samples;
    std::vector<GeometryReport> reports;
    for (auto& d : data) {
        samples.push_back(std::move(d.sample));
        reports.push_back(std::move(d.report));
    }
    return classify(imm, samples, reports, held_out, opts);
}

namespace {

double bilaplacian_sup(const Immersion& imm, const std::vector<Sample>& samples, double step)
{
    auto norms = parallel_map<double>(samples.size(), [&](std::size_t i) {
        return bilaplacian(imm, samples[i].u, step).euclidean_norm();
    });
    double sup = 0;
    for (double v : norms) sup = std::max(sup, v);
    return sup;
}

std::string format(const char* what, double value)
{
    std::ostringstream os;
    os.precision(3);
    os << what << value;
    return os.str();
}

} // namespace

SpectralFit classify(
    const Immersion& imm,
    const std::vector<Sample>& samples,
    const std::vector<GeometryReport>& reports,
    const std::vector<Vector>& held_out,
    const ClassifyOptions& opts)
{
    SpectralFit out;
    out.samples_used = static_cast<int>(samples.size());
    if (samples.empty()) {
        out.diagnostics.push_back("no samples");
        return out;
    }
    double nu_sup = 0;
    for (const auto& s : samples) {
        nu_sup = std::max(nu_sup, s.nu.euclidean_norm());
        out.laplacian_sup = std::max(out.laplacian_sup, s.lap.euclidean_norm());
    }
    out.scale = std::max(1.0, nu_sup);
    const double tol = opts.tol_analytic * out.scale;

    bool decided = false;
    if (out.laplacian_sup < tol) {
        out.verdict = Verdict::harmonic;
        out.lambda = 0.0;
        decided = true;
    } else {
        std::vector<MultivectorD> nu, lap;
        for (const auto& s : samples) {
            nu.push_back(s.nu);
            lap.push_back(s.lap);
        }
        try {
            const OneTypeFit fit = fit_one_type(nu, lap);
            out.residual = fit.residual;
            if (fit.residual <= tol) {
                out.lambda = fit.lambda;
                out.c = fit.c;
                const bool constant = fit.c.euclidean_norm() > opts.constant_threshold * (1 + nu_sup);
                out.verdict = constant ? Verdict::one_type_with_constant : Verdict::one_type_through_origin;
                decided = true;
            } else {
                out.diagnostics.push_back(format("one-type fit residual ", fit.residual));
            }
        } catch (const NoOneTypeFit& e) {
            out.null_type = e.null_type();
            out.diagnostics.push_back(e.what());
        } catch (const DegenerateInput& e) {
            out.diagnostics.push_back(e.what());
        }
    }

    if (decided && out.lambda && *out.lambda != 0.0 && !held_out.empty()) {
        const auto extra = collect_samples(imm, held_out);
        double worst = 0;
        for (const auto& s : extra) {
            worst = std::max(worst, (s.lap - *out.lambda * (s.nu - *out.c)).euclidean_norm());
        }
        out.held_out_residual = worst;
        if (worst > std::max(2 * out.residual, tol)) {
            out.diagnostics.push_back(format("held-out residual ", worst));
            out.verdict = Verdict::inconclusive;
            out.lambda.reset();
            out.c.reset();
        }
    }

    if (!decided || opts.always_bilaplacian) {
        out.bilaplacian_sup = bilaplacian_sup(imm, samples, opts.bilaplacian_step);
        if (!decided) {
            if (*out.bilaplacian_sup < opts.tol_biharmonic * out.scale) {
                out.verdict = Verdict::biharmonic;
            } else {
                out.diagnostics.push_back(format("bilaplacian sup ", *out.bilaplacian_sup));
            }
        }
    }

    out.criterion = geometric_criterion(reports, opts.tol_analytic);
    const bool through_origin =
        out.verdict == Verdict::harmonic || out.verdict == Verdict::one_type_through_origin;
    if (out.verdict != Verdict::inconclusive && through_origin != out.criterion->minimal_flat_constant) {
        out.diagnostics.push_back("verdict disagrees with the minimal/flat/constant-curvature criterion");
        out.verdict = Verdict::inconclusive;
    } else if (out.verdict == Verdict::harmonic && !out.criterion->harmonic_condition) {
        out.diagnostics.push_back("harmonic verdict but S differs from n(n-1)");
        out.verdict = Verdict::inconclusive;
    }
    return out;
}

Decomposition predicted_decomposition(const Immersion& imm, const GeometryReport& rep, double tol)
{
    if (!imm.is_hypersurface()) throw NotHypersurface(imm.name() + ": decomposition needs a hypersurface");
    const AdaptedFrame& f = rep.frame;
    const int n = f.n();
    const double alpha = *rep.alpha_hat;
    const double eps = f.eps[n];
    double umbilic = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) umbilic = std::max(umbilic, std::abs(rep.h[0](i, j) - (i == j ? alpha * f.eps[i] : 0.0)));
    if (umbilic > tol * (1 + std::abs(alpha))) throw DegenerateInput("predicted_decomposition: hypersurface is not umbilical");
    if (std::abs(alpha) < tol) throw DegenerateInput("predicted_decomposition: totally geodesic hypersurface");
    const double denom = 1 + eps * alpha * alpha;
    if (std::abs(denom) < tol) throw FlatUmbilical("predicted_decomposition: 1 + eps alpha^2 vanishes (flat umbilical hypersurface)");

    const MultivectorD nu = gauss_map(imm.ambient(), f);
    const MultivectorD ebar = companion(imm.ambient(), f);
    Decomposition d;
    d.alpha_hat = alpha;
    d.c = (1.0 / denom) * (nu - (eps * alpha) * ebar);
    d.nu_p = (eps * alpha / denom) * (alpha * nu + ebar);
    d.lambda_p = n * denom;
    return d;
}

AnnihilatingPolynomial annihilating_polynomial(const std::vector<std::vector<MultivectorD>>& levels, int max_deg, double tol)
{
    if (levels.empty() || levels[0].empty()) throw DegenerateInput("annihilating_polynomial: no samples");
    const int available = static_cast<int>(levels.size()) - 1;
    max_deg = std::min(max_deg, available);
    if (max_deg < 1) throw DegenerateInput("annihilating_polynomial: need Delta tau");
    const int rows_per = levels[0][0].space().size();
    const int samples = static_cast<int>(levels[0].size());
    if (samples < max_deg + 1) throw DegenerateInput("annihilating_polynomial: too few samples");

    Matrix stacked(rows_per * samples, max_deg + 1);
    for (int j = 0; j <= max_deg; ++j) {
        if (static_cast<int>(levels[j].size()) != samples) throw DimensionError("annihilating_polynomial: ragged levels");
        for (int k = 0; k < samples; ++k) stacked.block(k * rows_per, j, rows_per, 1) = levels[j][k].coeffs();
    }

    AnnihilatingPolynomial out;
    double tau_sup = 0;
    for (const auto& t : levels[0]) tau_sup = std::max(tau_sup, t.euclidean_norm());
    if (tau_sup <= tol) {
        out.degenerate = true;
        return out;
    }
    const double scale = stacked.colwise().norm().maxCoeff();

    for (int d = 1; d <= max_deg; ++d) {
        const Matrix a = stacked.leftCols(d);
        const Vector b = -stacked.col(d);
        Eigen::ColPivHouseholderQR<Matrix> qr(a);
        qr.setThreshold(1e-10);
        const Vector x = qr.solve(b);
        out.degree = d;
        out.effective_degree = static_cast<int>(qr.rank());
        out.coeffs.assign(x.data(), x.data() + d);
        out.coeffs.push_back(1.0);
        out.residual = (a * x - b).norm() / scale;
        if (out.residual <= tol) break;
    }

    const int d = out.degree;
    Matrix companion_matrix = Matrix::Zero(d, d);
    for (int i = 1; i < d; ++i) companion_matrix(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) companion_matrix(i, d - 1) = -out.coeffs[i];
    Eigen::EigenSolver<Matrix> es(companion_matrix, false);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) out.roots.push_back(es.eigenvalues()[i]);
    std::sort(out.roots.begin(), out.roots.end(), [](auto a, auto b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    for (std::size_t i = 0; i + 1 < out.roots.size(); ++i) {
        if (std::abs(out.roots[i] - out.roots[i + 1]) <= 1e-6 * (1 + std::abs(out.roots[i]))) out.simple_roots = false;
    }
    return out;
}

ConstantComponentResult constant_component_criterion(const Signature& sig, const std::vector<GeometryReport>& reports, double tol)
{
    ConstantComponentResult out;
    out.hhat_min = std::numeric_limits<double>::infinity();
    out.flatness = std::numeric_limits<double>::infinity();
    for (const auto& r : reports) {
        const Causal c = causal_character(sig, r.Hhat, 1e-9);
        if (c == Causal::null) throw NullMeanCurvature("mean curvature vector is lightlike");
        out.hhat_min = std::min(out.hhat_min, r.Hhat.norm());
        out.dh_sup = std::max(out.dh_sup, r.DHhat.cwiseAbs().maxCoeff());
        out.flatness = std::min(out.flatness, std::abs(1 + sig.inner(r.Hhat, r.Hhat)));
        const AdaptedFrame& f = r.frame;
        const int n = f.n();
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                Vector v = Vector::Zero(f.m());
                for (int s = 0; s < f.normal_count(); ++s) v += f.eps[n + s] * r.h[s](i, j) * f.normals.col(s);
                if (i == j) v -= f.eps[i] * r.Hhat;
                out.umbilic_residual = std::max(out.umbilic_residual, v.norm());
            }
        }
    }
    if (reports.empty()) out.hhat_min = out.flatness = 0;
    if (!(out.hhat_min > tol)) out.diagnostics.push_back("mean curvature vanishes");
    if (!(out.dh_sup < tol)) out.diagnostics.push_back("mean curvature is not parallel");
    if (!(out.umbilic_residual < tol)) out.diagnostics.push_back("not umbilical along the mean curvature direction");
    if (!(out.flatness > tol)) out.diagnostics.push_back("1 + <Hhat, Hhat> vanishes");
    out.holds = out.diagnostics.empty();
    return out;
}

} // namespace psg
