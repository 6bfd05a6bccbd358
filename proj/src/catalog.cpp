#include <psg/catalog.hpp>

#include <cmath>
#include <numbers>

namespace psg {

const char* to_string(Basis b)
{
    switch (b) {
    case Basis::published: return "published";
    case Basis::elementary: return "elementary";
    case Basis::computed: return "computed";
    }
    return "computed";
}

const char* to_string(CriterionOutcome c)
{
    switch (c) {
    case CriterionOutcome::holds: return "holds";
    case CriterionOutcome::fails: return "fails";
    case CriterionOutcome::null_mean_curvature: return "null_mean_curvature";
    }
    return "fails";
}

namespace {

constexpr double pi = std::numbers::pi;

using Components = std::vector<std::vector<Term>>;

Vector unit(int n, int i)
{
    return Vector::Unit(n, i);
}

Factor factor(Func f, const Vector& w, int power = 1, double phase = 0.0)
{
    return Factor{f, power, w, phase};
}

Vector vec(std::initializer_list<double> v)
{
    Vector out(static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (double x : v) out[i++] = x;
    return out;
}

/// Unit sphere S^k in angles u[offset .. offset+k-1]: components
/// cos t0, sin t0 cos t1, ..., sin t0 ... sin t_{k-1}.
std::vector<Term> sphere_terms(int k, int vars, int offset)
{
    std::vector<Term> out;
    for (int i = 0; i <= k; ++i) {
        Term t{1.0, {}};
        for (int j = 0; j < i; ++j) t.factors.push_back(factor(Func::sin, unit(vars, offset + j)));
        if (i < k) t.factors.push_back(factor(Func::cos, unit(vars, offset + i)));
        out.push_back(std::move(t));
    }
    return out;
}

void sphere_domain(int k, int offset, Vector& lo, Vector& hi)
{
    for (int j = 0; j < k; ++j) {
        const bool azimuth = j == k - 1;
        lo[offset + j] = azimuth ? 0.0 : 0.5;
        hi[offset + j] = azimuth ? 2 * pi : 2.6;
    }
}

///
/// Chart of {y in E^{n+1}_q : <y, y> = sign}, components ordered spacelike
/// first. sign = +1 uses (cosh r sigma, sinh r theta), sign = -1 uses
/// (sinh r sigma, cosh r theta), sigma in S^{n-q}, theta in S^{q-1}.
///
struct Model
{
    Components comps;
    Vector lo;
    Vector hi;
    int t = 0;
};

Model pseudo_sphere_model(int n, int q, int sign)
{
    Model m;
    m.lo = Vector::Zero(n);
    m.hi = Vector::Zero(n);
    if (q == 0) {
        if (sign < 0) throw ParameterError("pseudo-sphere of radius -1 needs a timelike direction");
        for (auto& t : sphere_terms(n, n, 0)) m.comps.push_back({t});
        sphere_domain(n, 0, m.lo, m.hi);
        return m;
    }
    const Vector r = unit(n, 0);
    const Func outer = sign > 0 ? Func::cosh : Func::sinh;
    const Func inner = sign > 0 ? Func::sinh : Func::cosh;
    for (auto t : sphere_terms(n - q, n, 1)) {
        t.factors.push_back(factor(outer, r));
        m.comps.push_back({t});
    }
    for (auto t : sphere_terms(q - 1, n, 1 + n - q)) {
        t.factors.push_back(factor(inner, r));
        m.comps.push_back({t});
    }
    const bool through_zero = sign > 0 && q == 1;
    m.lo[0] = through_zero ? -1.0 : 0.3;
    m.hi[0] = through_zero ? 1.0 : 1.2;
    sphere_domain(n - q, 1, m.lo, m.hi);
    sphere_domain(q - 1, 1 + n - q, m.lo, m.hi);
    m.t = sign > 0 ? q : q - 1;
    return m;
}

///
/// Orthonormal basis of the image of `project`, completed from the
/// coordinate axes and then pairwise sums of axes; columns spacelike first.
///
OrthonormalSet orthonormal_complement(const Signature& sig, const std::function<Vector(const Vector&)>& project, int count)
{
    const int m = sig.dim();
    std::vector<Vector> candidates;
    for (int i = 0; i < m; ++i) candidates.push_back(unit(m, i));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) candidates.push_back(unit(m, i) + unit(m, j));

    OrthonormalSet set;
    set.vectors.resize(m, 0);
    for (const Vector& c : candidates) {
        if (static_cast<int>(set.signs.size()) == count) break;
        const Vector r = project_out(sig, project(c), set);
        const double norm2 = r.squaredNorm();
        if (norm2 < 1e-12) continue;
        const double q = sig.inner(r, r);
        if (std::abs(q) < 1e-6 * norm2) continue;
        set.vectors.conservativeResize(Eigen::NoChange, set.vectors.cols() + 1);
        set.vectors.col(set.vectors.cols() - 1) = r / std::sqrt(std::abs(q));
        set.signs.push_back(q > 0 ? 1 : -1);
    }
    if (static_cast<int>(set.signs.size()) != count) throw ParameterError("could not complete an orthonormal basis");

    OrthonormalSet sorted;
    sorted.vectors.resize(m, count);
    int k = 0;
    for (int pass : {1, -1}) {
        for (int i = 0; i < count; ++i) {
            if (set.signs[i] != pass) continue;
            sorted.vectors.col(k++) = set.vectors.col(i);
            sorted.signs.push_back(pass);
        }
    }
    return sorted;
}

std::shared_ptr<Immersion> make_immersion(
    const std::string& name,
    const Signature& sig,
    int n,
    int t,
    const Vector& lo,
    const Vector& hi,
    Components comps)
{
    return std::make_shared<Immersion>(name, sig, n, t, lo, hi, std::make_shared<TermChart>(n, std::move(comps)));
}

} // namespace

CatalogEntry clifford_torus()
{
    const double r = 1 / std::sqrt(2.0);
    const Vector u = unit(2, 0), v = unit(2, 1);
    Components comps = {
        {{r, {factor(Func::cos, u)}}},
        {{r, {factor(Func::sin, u)}}},
        {{r, {factor(Func::cos, v)}}},
        {{r, {factor(Func::sin, v)}}},
        {},
    };
    CatalogEntry e;
    e.name = "clifford_torus";
    e.summary = "S^1(2) x S^1(2) in a totally geodesic S^3(1) of S^4_1(1)";
    e.immersion = make_immersion(e.name, Signature(5, 1), 2, 0, Vector::Zero(2), Vector::Constant(2, 2 * pi), comps);
    auto& x = e.expected;
    x.verdict = Verdict::one_type_through_origin;
    x.lambda = 2.0;
    x.hhat_character = Causal::zero;
    x.curvature = 0.0;
    x.normal_curvature = 0.0;
    x.h_sq = 2.0;
    x.constant_component = CriterionOutcome::fails;
    x.basis = {{"verdict", Basis::published}, {"lambda", Basis::published}, {"hhat_character", Basis::published},
               {"curvature", Basis::published}, {"normal_curvature", Basis::computed}, {"h_sq", Basis::computed},
               {"constant_component", Basis::elementary}};
    return e;
}

CatalogEntry pr_clifford_torus()
{
    const double r = 1 / std::sqrt(2.0);
    const Vector u = unit(2, 0), v = unit(2, 1);
    Components comps = {
        {},
        {{r, {factor(Func::cos, u)}}},
        {{r, {factor(Func::sin, u)}}},
        {{r, {factor(Func::cosh, v)}}},
        {{r, {factor(Func::sinh, v)}}},
    };
    CatalogEntry e;
    e.name = "pr_clifford_torus";
    e.summary = "S^1(2) x S^1_1(2) in S^4_1(1)";
    e.immersion = make_immersion(e.name, Signature(5, 1), 2, 1, vec({0.0, -1.0}), vec({2 * pi, 1.0}), comps);
    auto& x = e.expected;
    x.verdict = Verdict::one_type_through_origin;
    x.lambda = 2.0;
    x.hhat_character = Causal::zero;
    x.curvature = 0.0;
    x.normal_curvature = 0.0;
    x.h_sq = 2.0;
    x.constant_component = CriterionOutcome::fails;
    x.basis = {{"verdict", Basis::published}, {"lambda", Basis::published}, {"hhat_character", Basis::published},
               {"curvature", Basis::published}, {"normal_curvature", Basis::published}, {"h_sq", Basis::computed},
               {"constant_component", Basis::elementary}};
    return e;
}

CatalogEntry marginally_trapped_surface()
{
    const Vector u = unit(2, 0), v = unit(2, 1);
    Components comps = {
        {{1.0, {}}},
        {{1.0, {factor(Func::sin, u)}}},
        {{1.0, {factor(Func::cos, u), factor(Func::cos, v)}}},
        {{1.0, {factor(Func::cos, u), factor(Func::sin, v)}}},
        {{1.0, {}}},
    };
    CatalogEntry e;
    e.name = "marginally_trapped";
    e.summary = "spacelike surface (1, sin u, cos u cos v, cos u sin v, 1) in S^4_1(1) with null parallel mean curvature";
    auto imm = make_immersion(e.name, Signature(5, 1), 2, 0, vec({-pi / 2, 0.0}), vec({pi / 2, 2 * pi}), comps);
    imm->add_normal_hint(vec({-2, 0, 0, 0, -1}));
    imm->add_normal_hint(vec({0, 0, 0, 0, 1}));
    e.immersion = imm;
    const double k = -1 / std::sqrt(2.0);
    auto& x = e.expected;
    x.verdict = Verdict::one_type_with_constant;
    x.lambda = 2.0;
    x.hhat_character = Causal::null;
    x.curvature = 1.0;
    x.normal_curvature = 0.0;
    x.h_sq = 0.0;
    x.shape_scalars = std::vector<double>{k, k};
    x.parallel_mean_curvature = true;
    x.constant_component = CriterionOutcome::null_mean_curvature;
    x.basis = {{"verdict", Basis::published}, {"lambda", Basis::published}, {"hhat_character", Basis::published},
               {"curvature", Basis::published}, {"normal_curvature", Basis::published}, {"h_sq", Basis::computed},
               {"shape_scalars", Basis::published}, {"parallel_mean_curvature", Basis::published},
               {"constant_component", Basis::published}};
    return e;
}

CatalogEntry totally_geodesic_equator(int n, int t, Signature ambient)
{
    const int m = ambient.dim();
    if (t < 0 || t > ambient.index() || n + 1 - t > m - ambient.index() || n > m - 2) {
        throw ParameterError("totally_geodesic_equator: S^n_t does not fit in the ambient space");
    }
    const Model model = pseudo_sphere_model(n, t, 1);
    Components comps(m);
    const int spacelike = n + 1 - t;
    for (int i = 0; i < spacelike; ++i) comps[i] = model.comps[i];
    for (int i = 0; i < t; ++i) comps[m - t + i] = model.comps[spacelike + i];

    CatalogEntry e;
    e.name = "totally_geodesic_equator";
    e.summary = "coordinate great pseudo-sphere S^" + std::to_string(n) + "_" + std::to_string(t) + "(1) in S^" +
        std::to_string(m - 1) + "_" + std::to_string(ambient.index()) + "(1)";
    e.immersion = make_immersion(e.name, ambient, n, model.t, model.lo, model.hi, comps);
    auto& x = e.expected;
    x.verdict = Verdict::harmonic;
    x.lambda = 0.0;
    x.hhat_character = Causal::zero;
    x.curvature = 1.0;
    x.normal_curvature = 0.0;
    x.h_sq = 0.0;
    x.shape_scalars = std::vector<double>(m - 1 - n, 0.0);
    x.parallel_mean_curvature = true;
    x.constant_component = CriterionOutcome::fails;
    x.basis = {{"verdict", Basis::published}, {"lambda", Basis::elementary}, {"hhat_character", Basis::elementary},
               {"curvature", Basis::published}, {"normal_curvature", Basis::elementary}, {"h_sq", Basis::elementary},
               {"shape_scalars", Basis::elementary}, {"parallel_mean_curvature", Basis::elementary},
               {"constant_component", Basis::elementary}};
    return e;
}

CatalogEntry horosphere(int n, const Signature& sig, const Vector& a, double tau, const std::string& name)
{
    const int m = sig.dim();
    if (m != n + 2) throw ParameterError("horosphere: ambient must be E^{n+2}_s");
    if (a.size() != m) throw DimensionError("horosphere: a must have m entries");
    if (std::abs(sig.inner(a, a)) > 1e-12 * a.squaredNorm() || a.isZero()) throw ParameterError("horosphere: a must be null");
    if (tau == 0.0) throw ParameterError("horosphere: tau must be nonzero");

    Vector b;
    for (int i = 0; i < m && b.size() == 0; ++i) {
        const Vector v = unit(m, i);
        const double va = sig.inner(v, a);
        if (std::abs(va) < 1e-9) continue;
        b = (v - sig.inner(v, v) / (2 * va) * a) / va;
    }
    const auto project = [&](const Vector& v) -> Vector { return v - sig.inner(v, b) * a - sig.inner(v, a) * b; };
    const OrthonormalSet f = orthonormal_complement(sig, project, n);

    // x = ((1 - <w,w>) / (2 tau)) a + tau b + sum_i w_i f_i
    Components comps(m);
    for (int A = 0; A < m; ++A) {
        const double c0 = a[A] / (2 * tau) + tau * b[A];
        if (c0 != 0.0) comps[A].push_back({c0, {}});
        for (int i = 0; i < n; ++i) {
            const double q = -f.signs[i] * a[A] / (2 * tau);
            if (q != 0.0) comps[A].push_back({q, {factor(Func::poly, unit(n, i), 2)}});
            if (f.vectors(A, i) != 0.0) comps[A].push_back({f.vectors(A, i), {factor(Func::poly, unit(n, i), 1)}});
        }
    }
    int t = 0;
    for (int s : f.signs) t += s < 0;

    CatalogEntry e;
    e.name = name;
    e.summary = "pseudo-horosphere <x, a> = " + std::to_string(tau) + ", a null, in S^" + std::to_string(n + 1) + "_" +
        std::to_string(sig.index()) + "(1)";
    auto imm = make_immersion(e.name, sig, n, t, Vector::Constant(n, -1.0), Vector::Constant(n, 1.0), comps);
    imm->add_normal_hint(Vector((tau > 0 ? 1.0 : -1.0) * a));
    e.immersion = imm;
    auto& x = e.expected;
    x.verdict = Verdict::biharmonic;
    x.hhat_character = Causal::timelike;
    x.curvature = 0.0;
    x.normal_curvature = 0.0;
    x.h_sq = -n;
    x.alpha_hat = 1.0;
    x.shape_scalars = std::vector<double>{1.0};
    x.parallel_mean_curvature = true;
    x.constant_component = CriterionOutcome::fails;
    x.basis = {{"verdict", Basis::published}, {"hhat_character", Basis::computed}, {"curvature", Basis::published},
               {"normal_curvature", Basis::elementary}, {"h_sq", Basis::published}, {"alpha_hat", Basis::published},
               {"shape_scalars", Basis::published}, {"parallel_mean_curvature", Basis::published},
               {"constant_component", Basis::published}};
    return e;
}

CatalogEntry horosphere(int n)
{
    if (n < 2) throw ParameterError("horosphere: n must be at least 2");
    const Signature sig(n + 2, 1);
    return horosphere(n, sig, Vector(unit(n + 2, 0) + unit(n + 2, n + 1)), 1.0, "horosphere_n" + std::to_string(n));
}

CatalogEntry umbilical_hypersurface(const std::string& name, int n, const Signature& sig, const Vector& a, double tau)
{
    const int m = sig.dim();
    if (m != n + 2) throw ParameterError("umbilical_hypersurface: ambient must be E^{n+2}_s");
    if (a.size() != m) throw DimensionError("umbilical_hypersurface: a must have m entries");
    const double aa = sig.inner(a, a);
    if (std::abs(aa) < 1e-12) return horosphere(n, sig, a, tau, name);
    if (std::abs(std::abs(aa) - 1) > 1e-12) throw ParameterError("umbilical_hypersurface: <a, a> must be -1, 0 or 1");
    const double gap = aa - tau * tau;
    if (std::abs(gap) < 1e-12) throw ParameterError("umbilical_hypersurface: <a, a> - tau^2 must be nonzero");

    // x = tau <a,a> a + sqrt|gap| y with y in a^perp, <y, y> = sign(gap) <a,a>... see below
    const int sign = gap * aa > 0 ? 1 : -1;
    const double radius = std::sqrt(std::abs(gap));
    const auto project = [&](const Vector& v) -> Vector { return v - aa * sig.inner(v, a) * a; };
    const OrthonormalSet basis = orthonormal_complement(sig, project, n + 1);
    int q = 0;
    for (int s : basis.signs) q += s < 0;
    const Model model = pseudo_sphere_model(n, q, sign);
    const TermChart y(n, model.comps);
    const TermChart chart = y.transform(radius * basis.vectors, Vector(tau * aa * a));

    CatalogEntry e;
    e.name = name;
    e.summary = "totally umbilical hypersurface <x, a> = " + std::to_string(tau) + " of S^" + std::to_string(n + 1) +
        "_" + std::to_string(sig.index()) + "(1), <a, a> = " + std::to_string(static_cast<int>(std::lround(aa)));
    auto imm = std::make_shared<Immersion>(name, sig, n, model.t, model.lo, model.hi, std::make_shared<TermChart>(chart));
    imm->add_normal_hint(a);
    e.immersion = imm;

    const double alpha = tau / radius;
    const int eps = gap > 0 ? 1 : -1;
    const double denom = 1 + eps * alpha * alpha;
    auto& x = e.expected;
    x.curvature = aa / gap;
    x.normal_curvature = 0.0;
    x.h_sq = eps * n * alpha * alpha;
    x.alpha_hat = alpha;
    x.shape_scalars = std::vector<double>{alpha};
    x.parallel_mean_curvature = true;
    if (tau == 0.0) {
        x.verdict = Verdict::harmonic;
        x.hhat_character = Causal::zero;
        x.constant_component = CriterionOutcome::fails;
    } else {
        x.verdict = Verdict::one_type_with_constant;
        x.lambda = n * denom;
        x.hhat_character = eps > 0 ? Causal::spacelike : Causal::timelike;
        x.constant_component = CriterionOutcome::holds;
    }
    x.basis = {{"verdict", Basis::published}, {"lambda", Basis::published}, {"hhat_character", Basis::computed},
               {"curvature", Basis::published}, {"normal_curvature", Basis::elementary}, {"h_sq", Basis::published},
               {"alpha_hat", Basis::published}, {"shape_scalars", Basis::published},
               {"parallel_mean_curvature", Basis::published}, {"constant_component", Basis::published}};
    return e;
}

CatalogEntry umbilical_setting(int k)
{
    switch (k) {
    case 1: return umbilical_hypersurface("umbilical_sphere", 2, Signature(4, 0), vec({1.0 / 3, 2.0 / 3, 2.0 / 3, 0}), 0.5);
    case 2: return umbilical_hypersurface("umbilical_de_sitter", 2, Signature(4, 1), vec({1, 1, 0, 1}), 0.6);
    case 3: return umbilical_hypersurface("umbilical_hyperbolic", 2, Signature(4, 1), vec({1, 1, 0, 1}), 1.5);
    case 4: return umbilical_hypersurface("umbilical_timelike_axis", 2, Signature(4, 1), vec({1, 1, 1, 2}), 0.7);
    case 5: return umbilical_hypersurface("umbilical_index_two", 3, Signature(5, 2), vec({1, 0, 0, 1, 1}), 0.4);
    case 6: return umbilical_hypersurface("umbilical_null", 2, Signature(4, 1), vec({1, 0, 0, 1}), 0.8);
    default: throw ParameterError("umbilical_setting: k must be 1..6");
    }
}

CatalogEntry umbilical_sphere_codim2()
{
    const double tau = 0.6;
    const double r = std::sqrt(1 - tau * tau);
    const Model model = pseudo_sphere_model(2, 0, 1);
    Components comps(5);
    for (int i = 0; i < 3; ++i) {
        comps[i] = model.comps[i];
        for (auto& t : comps[i]) t.coef *= r;
    }
    comps[3] = {{tau, {}}};

    CatalogEntry e;
    e.name = "umbilical_sphere_codim2";
    e.summary = "round S^2(c) in a totally geodesic S^3(1) of S^4_1(1)";
    auto imm = make_immersion(e.name, Signature(5, 1), 2, 0, model.lo, model.hi, comps);
    imm->add_normal_hint(unit(5, 3));
    e.immersion = imm;
    const double alpha = tau / r;
    auto& x = e.expected;
    x.verdict = Verdict::one_type_with_constant;
    x.lambda = 2 * (1 + alpha * alpha);
    x.hhat_character = Causal::spacelike;
    x.curvature = 1 / (r * r);
    x.normal_curvature = 0.0;
    x.h_sq = 2 * alpha * alpha;
    x.shape_scalars = std::vector<double>{alpha, 0.0};
    x.parallel_mean_curvature = true;
    x.constant_component = CriterionOutcome::holds;
    x.basis = {{"verdict", Basis::published}, {"lambda", Basis::published}, {"hhat_character", Basis::computed},
               {"curvature", Basis::computed}, {"normal_curvature", Basis::elementary}, {"h_sq", Basis::computed},
               {"shape_scalars", Basis::computed}, {"parallel_mean_curvature", Basis::published},
               {"constant_component", Basis::published}};
    return e;
}

NullCurveDiagnostics null_curve_validator(const NullCurve& z, const std::vector<double>& grid)
{
    NullCurveDiagnostics d;
    d.jerk_inf = std::numeric_limits<double>::infinity();
    const Signature& sig = z.ambient;
    for (double u : grid) {
        const ChartJet j = z.z.jet(Vector::Constant(1, u), 3);
        const Vector z0 = j.value(), z1 = j.d1(0), z2 = j.d2(0, 0), z3 = j.d3(0, 0, 0);
        d.null_sup = std::max(d.null_sup, std::abs(sig.inner(z0, z0)));
        d.speed_sup = std::max(d.speed_sup, std::abs(sig.inner(z1, z1) - 4));
        d.acceleration_sup = std::max(d.acceleration_sup, std::abs(sig.inner(z2, z2)));
        d.jerk_inf = std::min(d.jerk_inf, z3.norm());
    }
    if (grid.empty()) d.jerk_inf = 0;
    return d;
}

NullCurve default_null_curve()
{
    const double r = std::sqrt(2.0);
    const Vector u = unit(1, 0);
    Components comps = {
        {{r, {factor(Func::cos, u)}}},
        {{r, {factor(Func::sin, u)}}},
        {{r, {factor(Func::sinh, u)}}},
        {{r, {factor(Func::cosh, u)}}},
        {},
    };
    return {"sqrt2_trig_hyperbolic", Signature(5, 2), TermChart(1, comps)};
}

NullCurve quadratic_null_curve()
{
    const Vector u = unit(1, 0);
    Components comps = {
        {{1.0, {}}, {-1.0, {factor(Func::poly, u, 2)}}},
        {{2.0, {factor(Func::poly, u, 1)}}},
        {},
        {{1.0, {}}, {1.0, {factor(Func::poly, u, 2)}}},
        {},
    };
    return {"quadratic", Signature(5, 2), TermChart(1, comps)};
}

CatalogEntry chen_flat_surface(const NullCurve& z, double lo, double hi)
{
    if (z.ambient.dim() != 5) throw ParameterError("chen_flat_surface: the curve must live in E^5_s");
    if (!(lo < hi)) throw ParameterError("chen_flat_surface: empty domain");
    if (2 * lo <= 1e-6) throw DomainSingularity("chen_flat_surface: the domain reaches u + v = 0");
    std::vector<double> grid;
    for (int i = 0; i <= 40; ++i) grid.push_back(lo + (hi - lo) * i / 40.0);
    if (!null_curve_validator(z, grid).passes()) {
        throw ParameterError("chen_flat_surface: '" + z.name + "' is not a speed-2 null curve with z''' != 0");
    }

    Matrix lift(1, 2);
    lift << 1, 0;
    const TermChart z2 = z.z.substitute(2, lift);
    const TermChart dz2 = z.z.differentiate(0).substitute(2, lift);
    const Factor inverse_sum = factor(Func::poly, vec({1, 1}), -1);
    Components comps(5);
    for (int A = 0; A < 5; ++A) {
        for (Term t : z2.components()[A]) {
            t.factors.push_back(inverse_sum);
            comps[A].push_back(std::move(t));
        }
        for (Term t : dz2.components()[A]) {
            t.coef *= -0.5;
            comps[A].push_back(std::move(t));
        }
    }

    CatalogEntry e;
    e.name = "chen_flat_surface";
    e.summary = "L(u, v) = z(u) / (u + v) - z'(u) / 2 for the light-cone curve '" + z.name + "'";
    auto imm = make_immersion(e.name, z.ambient, 2, 1, Vector::Constant(2, lo), Vector::Constant(2, hi), comps);
    Matrix mix(2, 2);
    mix << 1, -1, 1, 1;
    imm->set_tangent_mix(mix);
    imm->add_normal_hint(unit(5, 4));
    e.immersion = imm;
    auto& x = e.expected;
    x.verdict = Verdict::harmonic;
    x.lambda = 0.0;
    x.hhat_character = Causal::zero;
    x.curvature = 1.0;
    x.normal_curvature = 0.0;
    x.h_sq = 0.0;
    x.constant_component = CriterionOutcome::fails;
    x.basis = {{"verdict", Basis::published}, {"lambda", Basis::elementary}, {"hhat_character", Basis::published},
               {"curvature", Basis::published}, {"normal_curvature", Basis::published}, {"h_sq", Basis::computed},
               {"constant_component", Basis::elementary}};
    return e;
}

std::vector<std::string> catalog_names()
{
    return {"clifford_torus",        "pr_clifford_torus",       "marginally_trapped", "totally_geodesic_equator",
            "horosphere",            "umbilical_sphere",        "umbilical_de_sitter", "umbilical_hyperbolic",
            "umbilical_timelike_axis", "umbilical_index_two",   "umbilical_null",      "umbilical_sphere_codim2",
            "chen_flat_surface"};
}

CatalogEntry catalog_entry(const std::string& name, std::optional<int> n)
{
    auto fixed = [&](int dim) {
        if (n && *n != dim) throw ParameterError(name + " exists only for n = " + std::to_string(dim));
    };
    if (name == "clifford_torus") return fixed(2), clifford_torus();
    if (name == "pr_clifford_torus") return fixed(2), pr_clifford_torus();
    if (name == "marginally_trapped") return fixed(2), marginally_trapped_surface();
    if (name == "totally_geodesic_equator") return totally_geodesic_equator(n.value_or(2), 1, Signature(n.value_or(2) + 3, 1));
    if (name == "horosphere") return horosphere(n.value_or(2));
    if (name.rfind("horosphere_n", 0) == 0) {
        const std::string digits = name.substr(12);
        if (digits.empty() || digits.size() > 2 || digits.find_first_not_of("0123456789") != std::string::npos) {
            throw ParameterError("unknown catalog surface '" + name + "'");
        }
        const int dim = std::stoi(digits);
        fixed(dim);
        return horosphere(dim);
    }
    if (name == "umbilical_sphere_codim2") return fixed(2), umbilical_sphere_codim2();
    if (name == "chen_flat_surface") return fixed(2), chen_flat_surface(default_null_curve());
    for (int k = 1; k <= 6; ++k) {
        CatalogEntry e = umbilical_setting(k);
        if (e.name == name) {
            fixed(e.immersion->n());
            return e;
        }
    }
    throw ParameterError("unknown catalog surface '" + name + "'");
}

std::vector<CatalogEntry> full_catalog()
{
    std::vector<CatalogEntry> out = {clifford_torus(), pr_clifford_torus(), marginally_trapped_surface(),
                                     totally_geodesic_equator(), horosphere(2), horosphere(3)};
    for (int k = 1; k <= 6; ++k) out.push_back(umbilical_setting(k));
    out.push_back(umbilical_sphere_codim2());
    out.push_back(chen_flat_surface(default_null_curve()));
    return out;
}

ChartFile export_chart(const Immersion& imm)
{
    const TermChart* chart = imm.term_chart();
    if (!chart) throw ParameterError(imm.name() + ": only term charts can be exported");
    ChartFile f;
    f.name = imm.name();
    f.m = imm.m();
    f.s = imm.ambient().index();
    f.n = imm.n();
    f.t = imm.t();
    f.domain_lo = imm.domain_lo();
    f.domain_hi = imm.domain_hi();
    if (!imm.tangent_mix().isIdentity(0.0)) f.tangent_mix = imm.tangent_mix();
    for (const auto& h : imm.constant_hints()) {
        if (!h) throw ParameterError(imm.name() + ": position-dependent normal hints cannot be exported");
        f.hints.push_back(*h);
    }
    f.chart = *chart;
    return f;
}

Immersion immersion_from_chart(const ChartFile& file)
{
    if (!file.chart) throw ParseError(0, "chart file has no components");
    Immersion imm(
        file.name.empty() ? "chart" : file.name,
        Signature(file.m, file.s),
        file.n,
        file.t,
        file.domain_lo,
        file.domain_hi,
        std::make_shared<TermChart>(*file.chart));
    if (file.tangent_mix) imm.set_tangent_mix(*file.tangent_mix);
    for (const auto& h : file.hints) imm.add_normal_hint(h);
    return imm;
}

} // namespace psg
