#include "generators.hpp"

#include <psg/chart_text.hpp>

#include <doctest.h>

#include <cmath>

using namespace psg;

namespace {

Vector vec2(double a, double b)
{
    Vector v(2);
    v << a, b;
    return v;
}

/// (cos u cos v, cos u sin v, sin u) with closed-form partials up to second order.
ChartJet sphere_oracle(const Vector& p, int order)
{
    const auto layout = jet_layout(2, order);
    Matrix d = Matrix::Zero(3, layout->size());
    const double u = p[0], v = p[1];
    for (int k = 0; k < layout->size(); ++k) {
        const auto& a = layout->alpha(k);
        if (a[0] == 0 && a[1] == 0) d.col(k) << std::cos(u) * std::cos(v), std::cos(u) * std::sin(v), std::sin(u);
        if (a[0] == 1 && a[1] == 0) d.col(k) << -std::sin(u) * std::cos(v), -std::sin(u) * std::sin(v), std::cos(u);
        if (a[0] == 0 && a[1] == 1) d.col(k) << -std::cos(u) * std::sin(v), std::cos(u) * std::cos(v), 0;
        if (a[0] == 2 && a[1] == 0) d.col(k) << -std::cos(u) * std::cos(v), -std::cos(u) * std::sin(v), -std::sin(u);
        if (a[0] == 1 && a[1] == 1) d.col(k) << std::sin(u) * std::sin(v), -std::sin(u) * std::cos(v), 0;
        if (a[0] == 0 && a[1] == 2) d.col(k) << -std::cos(u) * std::cos(v), -std::cos(u) * std::sin(v), 0;
    }
    return ChartJet(layout, d);
}

} // namespace

TEST_CASE("jets carry exact derivatives")
{
    const auto layout = jet_layout(2, 3);
    const Jet u = Jet::variable(layout, 0, 0.3);
    const Jet v = Jet::variable(layout, 1, -0.2);
    const Jet f = sin(2.0 * u + v) * cosh(v);
    const double a = 2 * 0.3 - 0.2;
    CHECK(f.value() == doctest::Approx(std::sin(a) * std::cosh(-0.2)));
    // d^3/du^2 dv = -4 (cos(a) cosh v + sin(a) sinh v)
    CHECK(f.partial({2, 1}) == doctest::Approx(-4 * (std::cos(a) * std::cosh(-0.2) + std::sin(a) * std::sinh(-0.2))));
    const Jet g = powi(u + 1.0, -1);
    CHECK(g.partial({3, 0}) == doctest::Approx(-6 / std::pow(1.3, 4)));
    const Jet r = sqrt(u + 1.0);
    CHECK(r.partial({2, 0}) == doctest::Approx(-0.25 * std::pow(1.3, -1.5)));
}

TEST_CASE("term, lambda and oracle charts agree")
{
    const Vector u = vec2(0.4, 1.1);
    const Vector e0 = Vector::Unit(2, 0), e1 = Vector::Unit(2, 1);
    TermChart term(2, {
        {{1.0, {{Func::cos, 1, e0, 0.0}, {Func::cos, 1, e1, 0.0}}}},
        {{1.0, {{Func::cos, 1, e0, 0.0}, {Func::sin, 1, e1, 0.0}}}},
        {{1.0, {{Func::sin, 1, e0, 0.0}}}},
    });
    LambdaChart lambda(2, 3, [](std::span<const Jet> p) {
        return std::vector<Jet>{cos(p[0]) * cos(p[1]), cos(p[0]) * sin(p[1]), sin(p[0])};
    });
    OracleChart oracle(2, 3, 2, sphere_oracle);

    const ChartJet a = term.jet(u, 3), b = lambda.jet(u, 3), c = oracle.jet(u, 3);
    CHECK((a.derivs() - b.derivs()).cwiseAbs().maxCoeff() < 1e-14);
    // third order synthesized from one Richardson level
    CHECK((a.derivs() - c.derivs()).cwiseAbs().maxCoeff() < 1e-6);
    CHECK(oracle.exact_order() == 2);

    // closed-form oracle for the mixed third partial d^3 x / du^2 dv
    Vector x_uuv(3);
    x_uuv << std::cos(0.4) * std::sin(1.1), -std::cos(0.4) * std::cos(1.1), 0;
    CHECK((a.d3(0, 0, 1) - x_uuv).norm() < 1e-14);
}

TEST_CASE("symbolic operations on term charts")
{
    gen::Rng rng(31);
    const CatalogEntry e = marginally_trapped_surface();
    const TermChart& chart = *e.immersion->term_chart();
    for (const Vector& u : gen::points(rng, 2, 5, 1.0)) {
        const ChartJet j = chart.jet(u, 2);
        CHECK((chart.differentiate(1).jet(u, 1).value() - j.d1(1)).norm() < 1e-14);
        CHECK((chart.differentiate(0).jet(u, 1).d1(0) - j.d2(0, 0)).norm() < 1e-14);

        // variable swap
        Matrix swap(2, 2);
        swap << 0, 1, 1, 0;
        CHECK((chart.substitute(2, swap).value(Vector(swap * u)) - j.value()).norm() < 1e-14);

        Matrix a = gen::matrix(rng, 5, 5);
        Vector b = gen::vector(rng, 5);
        CHECK((chart.transform(a, b).value(u) - (a * j.value() + b)).norm() < 1e-13);
    }
}

TEST_CASE("chart text round trip reproduces every catalog entry")
{
    gen::Rng rng(32);
    for (const CatalogEntry& e : full_catalog()) {
        CAPTURE(e.name);
        const ChartFile file = export_chart(*e.immersion);
        const std::string text = write_chart_text(file);
        const ChartFile back = parse_chart_text(text);
        const Immersion imm = immersion_from_chart(back);
        CHECK(imm.name() == e.name);
        CHECK(imm.t() == e.immersion->t());
        CHECK(imm.hint_count() == e.immersion->hint_count());
        CHECK((imm.tangent_mix() - e.immersion->tangent_mix()).norm() == 0.0);
        CHECK(write_chart_text(back) == text);
        const Vector lo = imm.domain_lo(), hi = imm.domain_hi();
        for (int k = 0; k < 10; ++k) {
            Vector u(imm.n());
            for (int i = 0; i < imm.n(); ++i) u[i] = rng.uniform(lo[i], hi[i]);
            const Matrix a = imm.jet(u, 2).derivs(), b = e.immersion->jet(u, 2).derivs();
            CHECK((a - b).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("chart text errors carry line numbers")
{
    const std::string head = "ambient 4 1\ndim 2 0\ndomain 0 1 0 1\n";
    auto line_of = [](const std::string& text) -> std::size_t {
        try {
            parse_chart_text(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of(head + "x1 = 1\nx2 = 2 * tan(1, 0; 0)\nx3 = 0\nx4 = 0\n") == 5);
    CHECK(line_of(head + "x1 = 1\nx2 = 0\nx3 = 0\n") != 0);
    CHECK(line_of(head + "x1 = 1 * sin(1; 0)\n") == 4);
    CHECK(line_of("ambient 4 1\nbogus 3\n") == 2);
    CHECK(line_of(head + "x1 = 1\nx2 = 0\nx3 = 0\nx4 = 0\n") == 0);
    CHECK_THROWS_AS(load_chart_file("/nonexistent/chart"), ParameterError);

    const ChartFile f = parse_chart_text(head + "# comment\nx1 = 1\nx2 = -0.5 * poly_-2(1, 1; 0.5) + 3\nx3 = 0\nx4 = 1 * cosh(0, 2; 0)\n");
    Vector u(2);
    u << 0.25, 0.5;
    const Vector x = f.chart->value(u);
    CHECK(x[1] == doctest::Approx(-0.5 / std::pow(1.25, 2) + 3));
    CHECK(x[3] == doctest::Approx(std::cosh(1.0)));
}

TEST_CASE("horosphere metric is the flat metric of w-space")
{
    gen::Rng rng(33);
    for (int n : {2, 3}) {
        const CatalogEntry e = horosphere(n);
        const Immersion& imm = *e.immersion;
        for (const Vector& u : gen::points(rng, n, 5, 0.8)) {
            const Matrix g = induced_metric(imm, u);
            CHECK((g - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("adapted frames are orthonormal, complete and continuous")
{
    gen::Rng rng(34);
    for (int trial = 0; trial < 20; ++trial) {
        const Signature sig = gen::signature(rng, 4, 6);
        const auto s = gen::generic_surface(rng, sig, 2);
        const Immersion& imm = *s.immersion;
        AdaptedFrame previous = adapted_frame(imm, Vector::Zero(2));
        for (int step = 1; step <= 5; ++step) {
            const Vector u = Vector::Constant(2, 0.03 * step);
            const AdaptedFrame f = adapted_frame_like(imm, u, previous);
            CHECK(frame_orthonormality_residual(sig, f) < 1e-12);
            CHECK(frame_completeness_residual(sig, f) < 1e-10);
            CHECK(f.tangent_index() == imm.t());
            CHECK((f.x - imm.position(u)).norm() < 1e-15);
            for (int a = 0; a < f.normal_count(); ++a) CHECK(f.normals.col(a).dot(previous.normals.col(a)) > 0.5);
            previous = f;
        }
    }
}

TEST_CASE("frame respects normal hints and reports null candidates")
{
    const CatalogEntry e = marginally_trapped_surface();
    const AdaptedFrame f = adapted_frame(*e.immersion, vec2(0.3, 1.0));
    CHECK(f.normal_sources[0] == 0);
    CHECK(f.normal_sources[1] == 1);
    CHECK(f.eps[2] == 1);
    CHECK(f.eps[3] == -1);

    // (1, 0, 0, 0, 1) is a null normal of this surface
    const Immersion& imm = *e.immersion;
    Immersion bad("null_hint", Signature(5, 1), 2, 0, imm.domain_lo(), imm.domain_hi(), imm.chart_ptr());
    Vector null(5);
    null << 1, 0, 0, 0, 1;
    bad.add_normal_hint(null);
    try {
        adapted_frame(bad, vec2(0.3, 1.0));
        FAIL("expected NullPivot");
    } catch (const NullPivot& err) {
        CHECK(err.index() == 0);
    }
}

TEST_CASE("degenerate charts are rejected")
{
    const Vector w = Vector::Ones(2);
    auto chart = std::make_shared<TermChart>(2, std::vector<std::vector<Term>>{
        {{1.0, {{Func::cos, 1, w, 0.0}}}},
        {{1.0, {{Func::sin, 1, w, 0.0}}}},
        {},
        {},
    });
    Immersion imm("curve", Signature(4, 0), 2, 0, Vector::Zero(2), Vector::Ones(2), chart);
    CHECK_THROWS_AS(induced_metric(imm, vec2(0.5, 0.5)), DegenerateMetric);
    CHECK_THROWS_AS(adapted_frame(imm, vec2(0.5, 0.5)), DegenerateMetric);
    CHECK_THROWS_AS(Immersion("x", Signature(4, 0), 3, 0, Vector::Zero(3), Vector::Ones(3), chart), ParameterError);
}

TEST_CASE("connection forms are antisymmetric")
{
    gen::Rng rng(35);
    for (int trial = 0; trial < 10; ++trial) {
        const auto s = gen::generic_surface(rng, gen::signature(rng, 4, 6), 2);
        const AdaptedFrame f = adapted_frame(*s.immersion, gen::vector(rng, 2, 0.2));
        CHECK(frame_connection(*s.immersion, f).antisymmetry_residual() < 1e-8);
    }
}

TEST_CASE("marginally trapped frame rotates with -tan u")
{
    const CatalogEntry e = marginally_trapped_surface();
    for (double u : {-0.9, -0.2, 0.4, 1.1}) {
        const AdaptedFrame f = adapted_frame(*e.immersion, vec2(u, 2.0));
        const ConnectionForms w = frame_connection(*e.immersion, f);
        CHECK(w(0, 1, 1) == doctest::Approx(-std::tan(u)).epsilon(1e-8));
    }
}
