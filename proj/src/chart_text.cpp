#include <psg/chart_text.hpp>

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace psg {

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double to_double(const std::string& tok, std::size_t line)
{
    const std::string t = trim(tok);
    try {
        std::size_t used = 0;
        const double v = std::stod(t, &used);
        if (used != t.size()) throw ParseError(line, "trailing characters in number '" + t + "'");
        return v;
    } catch (const std::logic_error&) {
        throw ParseError(line, "expected a number, got '" + t + "'");
    }
}

int to_int(const std::string& tok, std::size_t line)
{
    const std::string t = trim(tok);
    int v = 0;
    const auto* end = t.data() + t.size();
    auto [ptr, ec] = std::from_chars(t.data(), end, v);
    if (ec != std::errc() || ptr != end) throw ParseError(line, "expected an integer, got '" + t + "'");
    return v;
}

std::vector<double> numbers(std::istringstream& ss, std::size_t line)
{
    std::vector<double> out;
    std::string tok;
    while (ss >> tok) out.push_back(to_double(tok, line));
    return out;
}

/// Split on `sep` at parenthesis depth zero.
std::vector<std::string> split_top(const std::string& s, const std::string& sep)
{
    std::vector<std::string> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (depth == 0 && s.compare(i, sep.size(), sep) == 0) {
            parts.push_back(s.substr(start, i - start));
            start = i + sep.size();
            i += sep.size() - 1;
        }
    }
    parts.push_back(s.substr(start));
    return parts;
}

Factor parse_factor(const std::string& text, int vars, std::size_t line)
{
    const auto open = text.find('(');
    const auto close = text.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open) {
        throw ParseError(line, "malformed factor '" + text + "'");
    }
    const std::string name = trim(text.substr(0, open));
    const std::string args = text.substr(open + 1, close - open - 1);
    if (!trim(text.substr(close + 1)).empty()) throw ParseError(line, "text after factor '" + text + "'");

    Factor f;
    f.weights = Vector::Zero(vars);
    if (name == "const") {
        f.func = Func::constant;
        if (!trim(args).empty()) throw ParseError(line, "const() takes no arguments");
        return f;
    }
    if (name.rfind("poly_", 0) == 0) {
        f.func = Func::poly;
        f.power = to_int(name.substr(5), line);
    } else if (name == "sin") {
        f.func = Func::sin;
    } else if (name == "cos") {
        f.func = Func::cos;
    } else if (name == "sinh") {
        f.func = Func::sinh;
    } else if (name == "cosh") {
        f.func = Func::cosh;
    } else {
        throw ParseError(line, "unknown function '" + name + "'");
    }
    const auto semi = args.find(';');
    if (semi == std::string::npos) throw ParseError(line, "factor arguments need '; phase'");
    std::stringstream ws(args.substr(0, semi));
    std::string tok;
    int i = 0;
    while (std::getline(ws, tok, ',')) {
        if (i >= vars) throw ParseError(line, "too many weights in '" + text + "'");
        f.weights[i++] = to_double(tok, line);
    }
    if (i != vars) throw ParseError(line, "expected " + std::to_string(vars) + " weights in '" + text + "'");
    f.phase = to_double(args.substr(semi + 1), line);
    return f;
}

std::vector<Term> parse_terms(const std::string& text, int vars, std::size_t line)
{
    std::vector<Term> terms;
    for (const auto& raw : split_top(text, " + ")) {
        const auto pieces = split_top(trim(raw), "*");
        if (pieces.empty() || trim(pieces.front()).empty()) throw ParseError(line, "empty term");
        Term t;
        t.coef = to_double(pieces.front(), line);
        for (std::size_t j = 1; j < pieces.size(); ++j) {
            Factor f = parse_factor(trim(pieces[j]), vars, line);
            if (f.func != Func::constant) t.factors.push_back(std::move(f));
        }
        if (t.coef != 0.0) terms.push_back(std::move(t));
    }
    return terms;
}

const char* func_name(Func f)
{
    switch (f) {
    case Func::constant: return "const";
    case Func::poly: return "poly_";
    case Func::sin: return "sin";
    case Func::cos: return "cos";
    case Func::sinh: return "sinh";
    case Func::cosh: return "cosh";
    }
    return "?";
}

} // namespace

std::string write_terms(const std::vector<Term>& terms)
{
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (k) out += " + ";
        out += fmt(terms[k].coef);
        for (const auto& f : terms[k].factors) {
            out += " * ";
            out += func_name(f.func);
            if (f.func == Func::poly) out += std::to_string(f.power);
            out += "(";
            for (Eigen::Index i = 0; i < f.weights.size(); ++i) {
                if (i) out += ", ";
                out += fmt(f.weights[i]);
            }
            out += "; " + fmt(f.phase) + ")";
        }
    }
    return out;
}

ChartFile parse_chart_text(std::istream& in)
{
    ChartFile file;
    std::vector<std::vector<Term>> comps;
    std::vector<bool> seen;
    std::string raw;
    std::size_t line = 0;
    bool have_ambient = false;
    bool have_dim = false;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        const std::string text = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (text.empty()) continue;

        if (text[0] == 'x' && text.size() > 1 && std::isdigit(static_cast<unsigned char>(text[1]))) {
            if (!have_ambient || !have_dim) throw ParseError(line, "components must follow 'ambient' and 'dim'");
            const auto eq = text.find('=');
            if (eq == std::string::npos) throw ParseError(line, "component line needs '='");
            const int a = to_int(text.substr(1, eq - 1), line);
            if (a < 1 || a > file.m) throw ParseError(line, "component index out of range");
            if (seen[a - 1]) throw ParseError(line, "component x" + std::to_string(a) + " given twice");
            seen[a - 1] = true;
            comps[a - 1] = parse_terms(trim(text.substr(eq + 1)), file.n, line);
            continue;
        }

        std::istringstream ss(text);
        std::string key;
        ss >> key;
        if (key == "name") {
            ss >> file.name;
        } else if (key == "ambient") {
            const auto v = numbers(ss, line);
            if (v.size() != 2) throw ParseError(line, "ambient needs m s");
            file.m = static_cast<int>(v[0]);
            file.s = static_cast<int>(v[1]);
            if (file.m < 2 || file.s < 0 || file.s > file.m) throw ParseError(line, "invalid ambient signature");
            comps.assign(file.m, {});
            seen.assign(file.m, false);
            have_ambient = true;
        } else if (key == "dim") {
            const auto v = numbers(ss, line);
            if (v.size() != 2) throw ParseError(line, "dim needs n t");
            file.n = static_cast<int>(v[0]);
            file.t = static_cast<int>(v[1]);
            if (file.n < 1 || file.t < 0 || file.t > file.n) throw ParseError(line, "invalid intrinsic dimension/index");
            have_dim = true;
        } else if (key == "domain") {
            const auto v = numbers(ss, line);
            if (!have_dim || static_cast<int>(v.size()) != 2 * file.n) throw ParseError(line, "domain needs 2n numbers after 'dim'");
            file.domain_lo.resize(file.n);
            file.domain_hi.resize(file.n);
            for (int i = 0; i < file.n; ++i) {
                file.domain_lo[i] = v[2 * i];
                file.domain_hi[i] = v[2 * i + 1];
                if (!(file.domain_lo[i] < file.domain_hi[i])) throw ParseError(line, "empty domain interval");
            }
        } else if (key == "tangent_mix") {
            const auto v = numbers(ss, line);
            if (!have_dim || static_cast<int>(v.size()) != file.n * file.n) throw ParseError(line, "tangent_mix needs n*n numbers");
            Matrix t(file.n, file.n);
            for (int i = 0; i < file.n; ++i)
                for (int j = 0; j < file.n; ++j) t(i, j) = v[i * file.n + j];
            file.tangent_mix = t;
        } else if (key == "hint") {
            const auto v = numbers(ss, line);
            if (!have_ambient || static_cast<int>(v.size()) != file.m) throw ParseError(line, "hint needs m numbers");
            file.hints.push_back(Eigen::Map<const Vector>(v.data(), file.m));
        } else {
            throw ParseError(line, "unknown directive '" + key + "'");
        }
    }
    if (!have_ambient || !have_dim) throw ParseError(line, "missing 'ambient' or 'dim'");
    if (file.domain_lo.size() != file.n) throw ParseError(line, "missing 'domain'");
    for (int a = 0; a < file.m; ++a) {
        if (!seen[a]) throw ParseError(line, "missing component x" + std::to_string(a + 1));
    }
    file.chart.emplace(file.n, std::move(comps));
    return file;
}

ChartFile parse_chart_text(const std::string& text)
{
    std::istringstream in(text);
    return parse_chart_text(in);
}

ChartFile load_chart_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open chart file '" + path + "'");
    return parse_chart_text(in);
}

std::string write_chart_text(const ChartFile& file)
{
    if (!file.chart) throw ParameterError("write_chart_text: no chart");
    std::ostringstream out;
    out << "# psg chart v1\n";
    if (!file.name.empty()) out << "name " << file.name << "\n";
    out << "ambient " << file.m << " " << file.s << "\n";
    out << "dim " << file.n << " " << file.t << "\n";
    out << "domain";
    for (int i = 0; i < file.n; ++i) out << " " << fmt(file.domain_lo[i]) << " " << fmt(file.domain_hi[i]);
    out << "\n";
    if (file.tangent_mix) {
        out << "tangent_mix";
        for (int i = 0; i < file.n; ++i)
            for (int j = 0; j < file.n; ++j) out << " " << fmt((*file.tangent_mix)(i, j));
        out << "\n";
    }
    for (const auto& h : file.hints) {
        out << "hint";
        for (Eigen::Index a = 0; a < h.size(); ++a) out << " " << fmt(h[a]);
        out << "\n";
    }
    const auto& comps = file.chart->components();
    for (std::size_t a = 0; a < comps.size(); ++a) {
        out << "x" << (a + 1) << " = " << write_terms(comps[a]) << "\n";
    }
    return out.str();
}

} // namespace psg
