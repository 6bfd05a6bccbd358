#pragma once

#include <psg/catalog.hpp>

#include <json.hpp>

#include <cstdint>
#include <exception>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace psg {

using Json = nlohmann::ordered_json;

enum ExitCode { exit_pass = 0, exit_check_failure = 1, exit_config_error = 2, exit_numeric_degeneracy = 3 };

struct RunConfig
{
    /// Catalog name or path to a chart text file.
    std::string surface;
    std::optional<int> n;
    /// Points per axis; empty selects 9 for surfaces and 5 otherwise.
    std::vector<int> grid;
    /// Fraction of each parameter interval trimmed at both ends.
    double margin = 0.1;
    double tol_analytic = 1e-6;
    /// Relative tolerance of the finite-difference route checks.
    double tol_fd = 1e-4;
    double tol_biharmonic = 1e-3;
    /// Step of the numeric Laplace-Beltrami operator.
    double fd_step = 1e-3;
    int held_out = 5;
    std::uint64_t seed = 1;

    /// Throws ParameterError.
    void validate() const;
};

Json to_json(const RunConfig& cfg);
Json to_json(const MultivectorD& mv);

/// Tensor grid over the trimmed domain, first axis fastest.
std::vector<Vector> grid_points(const Immersion& imm, const std::vector<int>& counts, double margin);

/// Uniform points of the trimmed domain from a seeded generator.
std::vector<Vector> held_out_points(const Immersion& imm, double margin, int count, std::uint64_t seed);

/// Per-axis counts actually used for `imm` under `cfg`.
std::vector<int> effective_grid(const Immersion& imm, const RunConfig& cfg);

struct Check
{
    std::string name;
    bool pass = false;
    double measured = 0;
    double tolerance = 0;
    /// published, elementary or computed; empty for structural checks.
    std::string basis;
    std::string detail;
};

Json to_json(const Check& c);

///
/// Runs the pipeline on one immersion and compares against `expected` when
/// given. The report always carries "pass" and "exit_code".
///
Json verify_immersion(const Immersion& imm, const std::string& summary, const Expected* expected, const RunConfig& cfg);

Json verify_entry(const CatalogEntry& entry, const RunConfig& cfg);

/// Resolves cfg.surface (catalog first, then chart file) and verifies it.
/// Library errors become an error report with exit code 2 or 3.
Json run_verify(const RunConfig& cfg);

/// Every catalog entry on its default grid, aggregated.
Json run_suite(const RunConfig& cfg);

/// Exit code of a library error: 2 for configuration, 3 for numeric degeneracy.
int exit_code_for(const std::exception& e);

/// Report body for a failed run.
Json error_report(const RunConfig& cfg, const std::exception& e);

std::string error_type(const std::exception& e);

} // namespace psg
