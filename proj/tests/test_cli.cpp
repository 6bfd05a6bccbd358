#include <psg/verify.hpp>

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace psg;

namespace {

RunConfig config(const std::string& surface)
{
    RunConfig cfg;
    cfg.surface = surface;
    return cfg;
}

std::string temp_file(const std::string& name, const std::string& text)
{
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path.string();
}

} // namespace

TEST_CASE("configuration validation")
{
    RunConfig cfg = config("clifford_torus");
    CHECK_NOTHROW(cfg.validate());
    cfg.grid = {2, 9};
    CHECK_THROWS_AS(cfg.validate(), ParameterError);
    cfg = config("clifford_torus");
    cfg.margin = 0.5;
    CHECK_THROWS_AS(cfg.validate(), ParameterError);
    cfg.margin = 0.1;
    cfg.tol_fd = 0;
    CHECK_THROWS_AS(cfg.validate(), ParameterError);
    cfg.tol_fd = 1e-4;
    cfg.fd_step = -1;
    CHECK_THROWS_AS(cfg.validate(), ParameterError);
    cfg.fd_step = 1e-3;
    cfg.held_out = -1;
    CHECK_THROWS_AS(cfg.validate(), ParameterError);
}

TEST_CASE("grids and held-out points")
{
    const CatalogEntry e = horosphere(3);
    RunConfig cfg = config("horosphere");
    CHECK(effective_grid(*e.immersion, cfg) == std::vector<int>{5, 5, 5});
    cfg.grid = {4};
    CHECK(effective_grid(*e.immersion, cfg) == std::vector<int>{4, 4, 4});
    cfg.grid = {4, 5};
    CHECK_THROWS_AS(effective_grid(*e.immersion, cfg), ParameterError);

    const CatalogEntry torus = clifford_torus();
    const Immersion& imm = *torus.immersion;
    const auto points = grid_points(imm, {3, 4}, 0.1);
    CHECK(points.size() == 12);
    const Vector width = imm.domain_hi() - imm.domain_lo();
    for (const Vector& u : points) {
        for (int i = 0; i < 2; ++i) {
            CHECK(u[i] >= imm.domain_lo()[i] + 0.1 * width[i] - 1e-12);
            CHECK(u[i] <= imm.domain_hi()[i] - 0.1 * width[i] + 1e-12);
        }
    }

    const auto a = held_out_points(imm, 0.1, 5, 7), b = held_out_points(imm, 0.1, 5, 7), c = held_out_points(imm, 0.1, 5, 8);
    CHECK(a.size() == 5);
    for (int k = 0; k < 5; ++k) CHECK(a[k] == b[k]);
    CHECK(a[0] != c[0]);
}

TEST_CASE("exit codes")
{
    CHECK(run_verify(config("clifford_torus"))["exit_code"] == exit_pass);
    const Json unknown = run_verify(config("no_such_surface"));
    CHECK(unknown["exit_code"] == exit_config_error);
    CHECK(unknown["error"]["type"] == "ParameterError");
    CHECK(run_verify(config("horosphere_nx"))["exit_code"] == exit_config_error);

    RunConfig bad = config("clifford_torus");
    bad.n = 3;
    CHECK(run_verify(bad)["exit_code"] == exit_config_error);

    const std::string broken = temp_file("psg_broken.chart", "ambient 4 1\ndim 2 0\ndomain 0 1 0 1\nx1 = 1\nx2 = ?\n");
    const Json parse = run_verify(config(broken));
    CHECK(parse["exit_code"] == exit_config_error);
    CHECK(parse["error"]["type"] == "ParseError");
    CHECK(parse["error"]["line"] == 5);

    // a curve, not a surface: the induced metric is degenerate
    const std::string curve = temp_file("psg_curve.chart",
                                        "ambient 4 0\ndim 2 0\ndomain 0 1 0 1\nx1 = 1 * cos(1, 1; 0)\nx2 = 1 * sin(1, 1; 0)\nx3 = 0\nx4 = 0\n");
    const Json degenerate = run_verify(config(curve));
    CHECK(degenerate["exit_code"] == exit_numeric_degeneracy);
    CHECK(degenerate["error"]["type"] == "DegenerateMetric");

    // the Chen surface over a box crossing u + v = 0
    CHECK(exit_code_for(DomainSingularity("u + v = 0")) == exit_numeric_degeneracy);

    // a coarse finite-difference step breaks the route checks
    RunConfig coarse = config("marginally_trapped");
    coarse.fd_step = 0.5;
    const Json r = run_verify(coarse);
    CHECK(r["exit_code"] == exit_check_failure);
    bool route_failed = false;
    for (const auto& c : r["checks"]) route_failed |= c["name"] == "route_equivalence" && !c["pass"].get<bool>();
    CHECK(route_failed);
}

TEST_CASE("reports are deterministic")
{
    RunConfig cfg = config("marginally_trapped");
    cfg.grid = {5};
    CHECK(run_verify(cfg).dump() == run_verify(cfg).dump());
    const Json report = run_verify(cfg);
    CHECK(report["format"] == "psg-report");
    CHECK(report["spectral"]["verdict"] == "one_type_with_constant");
}

TEST_CASE("suite aggregates every entry")
{
    const Json suite = run_suite(RunConfig{});
    CHECK(suite["format"] == "psg-suite");
    CHECK(suite["entries"].size() == 14);
    CHECK(suite["reports"].size() == 14);
    CHECK(suite["pass"].get<bool>());
    CHECK(suite["exit_code"] == exit_pass);
}
