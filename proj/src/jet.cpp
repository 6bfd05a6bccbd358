#include <psg/jet.hpp>

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

namespace psg {

namespace {

void enumerate(int vars, int degree, int pos, std::vector<int>& current, std::vector<std::vector<int>>& out)
{
    if (pos == vars - 1) {
        current[pos] = degree;
        out.push_back(current);
        return;
    }
    for (int d = degree; d >= 0; --d) {
        current[pos] = d;
        enumerate(vars, degree - d, pos + 1, current, out);
    }
}

double factorial(int k)
{
    double f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

} // namespace

JetLayout::JetLayout(int vars, int order)
    : m_vars(vars)
    , m_order(order)
{
    if (vars < 1 || order < 0) throw ParameterError("JetLayout: need vars >= 1 and order >= 0");
    std::vector<int> current(vars, 0);
    for (int d = 0; d <= order; ++d) enumerate(vars, d, 0, current, m_alphas);
    for (const auto& a : m_alphas) {
        m_degree.push_back(std::accumulate(a.begin(), a.end(), 0));
        double f = 1;
        for (int ai : a) f *= psg::factorial(ai);
        m_factorial.push_back(f);
    }
    std::vector<int> sum(vars);
    for (int a = 0; a < size(); ++a) {
        for (int b = 0; b < size(); ++b) {
            if (m_degree[a] + m_degree[b] > order) continue;
            for (int i = 0; i < vars; ++i) sum[i] = m_alphas[a][i] + m_alphas[b][i];
            m_products.push_back({a, b, find(sum)});
        }
    }
}

int JetLayout::find(const std::vector<int>& alpha) const
{
    if (static_cast<int>(alpha.size()) != m_vars) return -1;
    const int d = std::accumulate(alpha.begin(), alpha.end(), 0);
    if (d > m_order) return -1;
    for (int k = 0; k < size(); ++k) {
        if (m_degree[k] == d && m_alphas[k] == alpha) return k;
    }
    return -1;
}

LayoutPtr jet_layout(int vars, int order)
{
    static std::mutex mutex;
    static std::map<std::pair<int, int>, LayoutPtr> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{vars, order}];
    if (!slot) slot = std::make_shared<const JetLayout>(vars, order);
    return slot;
}

Jet::Jet(LayoutPtr layout, double value)
    : m_layout(std::move(layout))
    , m_coeffs(Vector::Zero(m_layout->size()))
{
    m_coeffs[0] = value;
}

Jet Jet::variable(LayoutPtr layout, int var, double value)
{
    Jet j(layout, value);
    if (layout->order() >= 1) {
        std::vector<int> e(layout->vars(), 0);
        e[var] = 1;
        j.m_coeffs[layout->find(e)] = 1.0;
    }
    return j;
}

double Jet::partial(const std::vector<int>& alpha) const
{
    const int k = m_layout->find(alpha);
    if (k < 0) return 0.0;
    return m_coeffs[k] * m_layout->factorial(k);
}

Jet& Jet::operator+=(const Jet& o)
{
    m_coeffs += o.m_coeffs;
    return *this;
}

Jet& Jet::operator-=(const Jet& o)
{
    m_coeffs -= o.m_coeffs;
    return *this;
}

Jet& Jet::operator*=(const Jet& o)
{
    Vector out = Vector::Zero(m_coeffs.size());
    for (const auto& p : m_layout->products()) out[p.c] += m_coeffs[p.a] * o.m_coeffs[p.b];
    m_coeffs = std::move(out);
    return *this;
}

Jet Jet::compose(std::span<const double> derivatives) const
{
    const int order = m_layout->order();
    Jet delta = *this;
    delta.m_coeffs[0] = 0.0;
    Jet out(m_layout, derivatives[0]);
    Jet power(m_layout, 1.0);
    double fact = 1.0;
    for (int k = 1; k <= order; ++k) {
        power *= delta;
        fact *= k;
        out.m_coeffs += (derivatives[k] / fact) * power.m_coeffs;
    }
    return out;
}

namespace {

std::vector<double> periodic(double f, double fp, int order, bool hyperbolic)
{
    // sin/cos cycle with signs; sinh/cosh alternate without signs.
    std::vector<double> d(order + 1);
    for (int k = 0; k <= order; ++k) {
        const bool even = (k % 2) == 0;
        double v = even ? f : fp;
        if (!hyperbolic && (k % 4 == 2 || k % 4 == 3)) v = -v;
        d[k] = v;
    }
    return d;
}

std::vector<double> real_power(double x, double p, int order)
{
    std::vector<double> d(order + 1);
    double coef = 1.0;
    for (int k = 0; k <= order; ++k) {
        d[k] = coef * std::pow(x, p - k);
        coef *= (p - k);
    }
    return d;
}

} // namespace

Jet sin(const Jet& x)
{
    const double v = x.value();
    return x.compose(periodic(std::sin(v), std::cos(v), x.layout()->order(), false));
}

Jet cos(const Jet& x)
{
    const double v = x.value();
    return x.compose(periodic(std::cos(v), -std::sin(v), x.layout()->order(), false));
}

Jet sinh(const Jet& x)
{
    const double v = x.value();
    return x.compose(periodic(std::sinh(v), std::cosh(v), x.layout()->order(), true));
}

Jet cosh(const Jet& x)
{
    const double v = x.value();
    return x.compose(periodic(std::cosh(v), std::sinh(v), x.layout()->order(), true));
}

Jet exp(const Jet& x)
{
    std::vector<double> d(x.layout()->order() + 1, std::exp(x.value()));
    return x.compose(d);
}

Jet log(const Jet& x)
{
    const int order = x.layout()->order();
    std::vector<double> d(order + 1);
    d[0] = std::log(x.value());
    for (int k = 1; k <= order; ++k) {
        d[k] = ((k % 2) ? 1.0 : -1.0) * psg::factorial(k - 1) / std::pow(x.value(), k);
    }
    return x.compose(d);
}

Jet sqrt(const Jet& x)
{
    return x.compose(real_power(x.value(), 0.5, x.layout()->order()));
}

Jet powi(const Jet& x, int k)
{
    const int order = x.layout()->order();
    if (k >= 0 && k <= order) {
        Jet out(x.layout(), 1.0);
        for (int i = 0; i < k; ++i) out *= x;
        return out;
    }
    std::vector<double> d(order + 1);
    double coef = 1.0;
    for (int j = 0; j <= order; ++j) {
        d[j] = coef * std::pow(x.value(), k - j);
        coef *= (k - j);
    }
    return x.compose(d);
}

Jet operator/(double a, const Jet& b)
{
    return a * powi(b, -1);
}

Jet operator/(const Jet& a, const Jet& b)
{
    return a * powi(b, -1);
}

} // namespace psg
