#pragma once

#include <psg/chart.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace psg {

///
/// Contents of a chart text file.
///
/// Format (one directive per line, '#' starts a comment):
///
///     name <identifier>
///     ambient <m> <s>
///     dim <n> <t>
///     domain <lo_1> <hi_1> ... <lo_n> <hi_n>
///     tangent_mix <n*n numbers, row-major>     (optional)
///     hint <m numbers>                         (optional, repeatable)
///     x<A> = <term> + <term> + ...             (one line per component A = 1..m)
///
/// A term is `coef` or `coef * f(w_1, ..., w_n; phase) * g(...) ...` with f in
/// {const, poly_<k>, sin, cos, sinh, cosh} evaluated at w . u + phase.
/// `poly_<k>` is (w . u + phase)^k for an integer k, negative k allowed.
/// Terms are separated by " + " at parenthesis depth zero; negative
/// coefficients carry their own sign.
///
struct ChartFile
{
    std::string name;
    int m = 0;
    int s = 0;
    int n = 0;
    int t = 0;
    Vector domain_lo;
    Vector domain_hi;
    std::optional<Matrix> tangent_mix;
    std::vector<Vector> hints;
    std::optional<TermChart> chart;
};

ChartFile parse_chart_text(std::istream& in);
ChartFile parse_chart_text(const std::string& text);
ChartFile load_chart_file(const std::string& path);

std::string write_chart_text(const ChartFile& file);

/// Text of a single component; exposed for tests.
std::string write_terms(const std::vector<Term>& terms);

} // namespace psg
