#include <psg/verify.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using psg::Json;

std::vector<int> parse_grid(const std::string& text)
{
    std::vector<int> out;
    std::string token;
    std::string normalized = text;
    for (const std::string sep : {"×", "x", "X", ","}) {
        for (auto pos = normalized.find(sep); pos != std::string::npos; pos = normalized.find(sep)) {
            normalized.replace(pos, sep.size(), " ");
        }
    }
    std::istringstream in(normalized);
    while (in >> token) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size()) throw psg::ParameterError("bad grid '" + text + "', expected e.g. 9x9");
        out.push_back(v);
    }
    if (out.empty()) throw psg::ParameterError("empty grid");
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out) throw psg::ParameterError("cannot write '" + path.string() + "'");
    out << text;
    if (!out) throw psg::ParameterError("write to '" + path.string() + "' failed");
}

void print_checks(const Json& report, std::ostream& os)
{
    if (report.contains("error")) {
        os << report["error"]["type"].get<std::string>() << ": " << report["error"]["message"].get<std::string>() << "\n";
        return;
    }
    if (report.contains("spectral")) {
        const auto& s = report["spectral"];
        os << "verdict " << s["verdict"].get<std::string>();
        if (!s["lambda"].is_null()) os << ", lambda " << s["lambda"].get<double>();
        os << "\n";
    }
    for (const auto& c : report["checks"]) {
        os << (c["pass"].get<bool>() ? "  pass  " : "  FAIL  ") << std::left << std::setw(36) << c["name"].get<std::string>()
           << std::right << std::setw(12) << std::setprecision(3) << c["measured"].get<double>() << " <= "
           << c["tolerance"].get<double>() << "\n";
    }
}

void print_expected(const psg::CatalogEntry& e, std::ostream& os)
{
    const auto& x = e.expected;
    const auto basis = [&](const std::string& f) {
        const auto it = x.basis.find(f);
        return it == x.basis.end() ? std::string() : std::string(" (") + psg::to_string(it->second) + ")";
    };
    os << "name      " << e.name << "\n" << "summary   " << e.summary << "\n";
    if (x.verdict) os << "verdict   " << psg::to_string(*x.verdict) << basis("verdict") << "\n";
    if (x.lambda) os << "lambda    " << *x.lambda << basis("lambda") << "\n";
    if (x.hhat_character) os << "hhat      " << psg::to_string(*x.hhat_character) << basis("hhat_character") << "\n";
    if (x.curvature) os << "K         " << *x.curvature << basis("curvature") << "\n";
    if (x.normal_curvature) os << "K^D       " << *x.normal_curvature << basis("normal_curvature") << "\n";
    if (x.h_sq) os << "|hhat|^2  " << *x.h_sq << basis("h_sq") << "\n";
    if (x.alpha_hat) os << "alpha     " << *x.alpha_hat << basis("alpha_hat") << "\n";
    if (x.shape_scalars) {
        os << "shape    ";
        for (double k : *x.shape_scalars) os << " " << k;
        os << basis("shape_scalars") << "\n";
    }
    if (x.parallel_mean_curvature) os << "parallel  yes" << basis("parallel_mean_curvature") << "\n";
    if (x.constant_component) os << "criterion " << psg::to_string(*x.constant_component) << basis("constant_component") << "\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Pseudo-spherical Gauss map verification toolkit"};
    app.set_version_flag("--version", std::string(PSG_VERSION));
    app.require_subcommand(1);

    psg::RunConfig cfg;
    std::string grid;
    std::string out;
    std::optional<int> n;

    auto* verify = app.add_subcommand("verify", "Verify a catalog surface or a chart file");
    verify->add_option("surface", cfg.surface, "Catalog name or chart file")->required();
    verify->add_option("--grid", grid, "Points per axis, e.g. 9x9");
    verify->add_option("--margin", cfg.margin, "Fraction of each interval trimmed at both ends");
    verify->add_option("--tol-analytic", cfg.tol_analytic, "Tolerance of the spectral fit");
    verify->add_option("--tol-fd", cfg.tol_fd, "Relative tolerance of the finite-difference checks");
    verify->add_option("--tol-biharmonic", cfg.tol_biharmonic, "Tolerance of the bilaplacian test");
    verify->add_option("--fd-step", cfg.fd_step, "Step of the numeric Laplace-Beltrami operator");
    verify->add_option("--held-out", cfg.held_out, "Number of held-out points");
    verify->add_option("--seed", cfg.seed, "Seed of the held-out points");
    verify->add_option("--n", n, "Dimension, for surfaces that have one");
    verify->add_option("--out", out, "Write the JSON report here instead of stdout");

    auto* suite = app.add_subcommand("suite", "Verify every catalog surface");
    suite->add_option("--out", out, "Directory for suite.json and one report per surface");
    suite->add_option("--fd-step", cfg.fd_step, "Step of the numeric Laplace-Beltrami operator");
    suite->add_option("--margin", cfg.margin, "Fraction of each interval trimmed at both ends");
    suite->add_option("--seed", cfg.seed, "Seed of the held-out points");

    auto* catalog = app.add_subcommand("catalog", "Inspect the built-in surfaces");
    catalog->require_subcommand(1);
    auto* list = catalog->add_subcommand("list", "List catalog names");
    std::string name;
    auto* show = catalog->add_subcommand("show", "Expected record and chart of a surface");
    show->add_option("name", name)->required();
    show->add_option("--n", n, "Dimension, for surfaces that have one");
    auto* exporter = catalog->add_subcommand("export", "Chart text of a surface");
    exporter->add_option("name", name)->required();
    exporter->add_option("--n", n, "Dimension, for surfaces that have one");
    exporter->add_option("--out", out, "Write the chart here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : psg::exit_config_error;
    }

    try {
        if (*verify) {
            cfg.n = n;
            if (!grid.empty()) cfg.grid = parse_grid(grid);
            const Json report = psg::run_verify(cfg);
            const std::string text = report.dump(2) + "\n";
            if (out.empty()) {
                std::cout << text;
            } else {
                write_file(out, text);
                print_checks(report, std::cout);
            }
            return report["exit_code"].get<int>();
        }
        if (*suite) {
            const Json report = psg::run_suite(cfg);
            if (out.empty()) {
                std::cout << report.dump(2) << "\n";
            } else {
                std::filesystem::create_directories(out);
                write_file(std::filesystem::path(out) / "suite.json", report.dump(2) + "\n");
                for (const auto& r : report["reports"]) {
                    const std::string file = r["config"]["surface"].get<std::string>() + ".json";
                    write_file(std::filesystem::path(out) / file, r.dump(2) + "\n");
                }
                for (const auto& e : report["entries"]) {
                    std::cout << (e["pass"].get<bool>() ? "pass  " : "FAIL  ") << std::left << std::setw(28)
                              << e["name"].get<std::string>() << " "
                              << (e["verdict"].is_null() ? std::string("-") : e["verdict"].get<std::string>()) << "\n";
                }
            }
            return report["exit_code"].get<int>();
        }
        if (*list) {
            for (const auto& entry : psg::catalog_names()) std::cout << entry << "\n";
            return 0;
        }
        if (*show) {
            const auto entry = psg::catalog_entry(name, n);
            print_expected(entry, std::cout);
            std::cout << "\n" << psg::write_chart_text(psg::export_chart(*entry.immersion));
            return 0;
        }
        if (*exporter) {
            const auto entry = psg::catalog_entry(name, n);
            const std::string text = psg::write_chart_text(psg::export_chart(*entry.immersion));
            if (out.empty()) std::cout << text;
            else write_file(out, text);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "psg: " << psg::error_type(e) << ": " << e.what() << "\n";
        return psg::exit_code_for(e);
    }
    return 0;
}
