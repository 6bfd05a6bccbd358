#include <psg/chart.hpp>

#include <numeric>

namespace psg {

ChartJet::ChartJet(LayoutPtr layout, Matrix derivs)
    : m_layout(std::move(layout))
    , m_derivs(std::move(derivs))
{
    if (m_derivs.cols() != m_layout->size()) {
        throw DimensionError("ChartJet: derivative table does not match the layout");
    }
}

Vector ChartJet::partial(const std::vector<int>& alpha) const
{
    const int k = m_layout->find(alpha);
    if (k < 0) {
        throw DimensionError("ChartJet: derivative order exceeds the evaluated order");
    }
    return m_derivs.col(k);
}

Vector ChartJet::d1(int i) const
{
    std::vector<int> a(vars(), 0);
    a[i] += 1;
    return partial(a);
}

Vector ChartJet::d2(int i, int j) const
{
    std::vector<int> a(vars(), 0);
    a[i] += 1;
    a[j] += 1;
    return partial(a);
}

Vector ChartJet::d3(int i, int j, int k) const
{
    std::vector<int> a(vars(), 0);
    a[i] += 1;
    a[j] += 1;
    a[k] += 1;
    return partial(a);
}

Matrix ChartJet::tangents() const
{
    Matrix t(ambient_dim(), vars());
    for (int i = 0; i < vars(); ++i) t.col(i) = d1(i);
    return t;
}

ChartJet JetChart::jet(const Vector& u, int order) const
{
    if (u.size() != vars()) throw DimensionError("chart: parameter dimension mismatch");
    auto layout = jet_layout(vars(), order);
    std::vector<Jet> args;
    args.reserve(vars());
    for (int i = 0; i < vars(); ++i) args.push_back(Jet::variable(layout, i, u[i]));
    const auto comps = evaluate(args);
    if (static_cast<int>(comps.size()) != ambient_dim()) {
        throw DimensionError("chart: evaluator returned the wrong number of components");
    }
    Matrix derivs(ambient_dim(), layout->size());
    for (int a = 0; a < ambient_dim(); ++a) {
        for (int k = 0; k < layout->size(); ++k) {
            derivs(a, k) = comps[a].coeffs()[k] * layout->factorial(k);
        }
    }
    return ChartJet(layout, std::move(derivs));
}

// ---------------------------------------------------------------------------

TermChart::TermChart(int vars, std::vector<std::vector<Term>> components)
    : m_vars(vars)
    , m_components(std::move(components))
{
    for (const auto& comp : m_components) {
        for (const auto& term : comp) {
            for (const auto& f : term.factors) {
                if (f.weights.size() != vars) {
                    throw DimensionError("TermChart: factor weights must have one entry per variable");
                }
            }
        }
    }
}

namespace {

Jet apply(const Factor& f, std::span<const Jet> u)
{
    const auto& layout = u.front().layout();
    Jet arg(layout, f.phase);
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (f.weights[i] != 0.0) arg += f.weights[i] * u[i];
    }
    switch (f.func) {
    case Func::constant: return Jet(layout, 1.0);
    case Func::poly: return powi(arg, f.power);
    case Func::sin: return sin(arg);
    case Func::cos: return cos(arg);
    case Func::sinh: return sinh(arg);
    case Func::cosh: return cosh(arg);
    }
    return Jet(layout, 0.0);
}

/// Derivative of a single factor as a list of (coef, factor) pairs.
Term factor_derivative(const Factor& f, int axis)
{
    const double w = f.weights[axis];
    Term t;
    t.coef = w;
    Factor g = f;
    switch (f.func) {
    case Func::constant: t.coef = 0.0; break;
    case Func::poly:
        t.coef = w * f.power;
        if (f.power == 1) {
            g.func = Func::constant;
        } else {
            g.power = f.power - 1;
        }
        break;
    case Func::sin: g.func = Func::cos; break;
    case Func::cos:
        g.func = Func::sin;
        t.coef = -w;
        break;
    case Func::sinh: g.func = Func::cosh; break;
    case Func::cosh: g.func = Func::sinh; break;
    }
    if (g.func != Func::constant) t.factors.push_back(g);
    return t;
}

} // namespace

std::vector<Jet> TermChart::evaluate(std::span<const Jet> u) const
{
    const auto& layout = u.front().layout();
    std::vector<Jet> out;
    out.reserve(m_components.size());
    for (const auto& comp : m_components) {
        Jet sum(layout, 0.0);
        for (const auto& term : comp) {
            Jet prod(layout, term.coef);
            for (const auto& f : term.factors) {
                if (f.func == Func::constant) continue;
                prod *= apply(f, u);
            }
            sum += prod;
        }
        out.push_back(std::move(sum));
    }
    return out;
}

TermChart TermChart::differentiate(int axis) const
{
    std::vector<std::vector<Term>> comps;
    for (const auto& comp : m_components) {
        std::vector<Term> out;
        for (const auto& term : comp) {
            for (std::size_t j = 0; j < term.factors.size(); ++j) {
                const Term d = factor_derivative(term.factors[j], axis);
                if (d.coef == 0.0) continue;
                Term t;
                t.coef = term.coef * d.coef;
                for (std::size_t l = 0; l < term.factors.size(); ++l) {
                    if (l != j) t.factors.push_back(term.factors[l]);
                }
                t.factors.insert(t.factors.end(), d.factors.begin(), d.factors.end());
                out.push_back(std::move(t));
            }
        }
        comps.push_back(std::move(out));
    }
    return TermChart(m_vars, std::move(comps));
}

TermChart TermChart::substitute(int vars, const Matrix& map) const
{
    if (map.rows() != m_vars || map.cols() != vars) {
        throw DimensionError("TermChart::substitute: map must be (old vars) x (new vars)");
    }
    auto comps = m_components;
    for (auto& comp : comps) {
        for (auto& term : comp) {
            for (auto& f : term.factors) {
                f.weights = map.transpose() * f.weights;
            }
        }
    }
    return TermChart(vars, std::move(comps));
}

TermChart TermChart::transform(const Matrix& a, const Vector& b) const
{
    if (a.cols() != ambient_dim() || a.rows() != b.size()) {
        throw DimensionError("TermChart::transform: shape mismatch");
    }
    std::vector<std::vector<Term>> comps(a.rows());
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < ambient_dim(); ++c) {
            if (a(r, c) == 0.0) continue;
            for (const auto& term : m_components[c]) {
                Term t = term;
                t.coef *= a(r, c);
                comps[r].push_back(std::move(t));
            }
        }
        if (b[r] != 0.0) comps[r].push_back(Term{b[r], {}});
    }
    return TermChart(m_vars, std::move(comps));
}

// ---------------------------------------------------------------------------

OracleChart::OracleChart(int vars, int ambient_dim, int exact_order, Oracle oracle, double step)
    : m_vars(vars)
    , m_dim(ambient_dim)
    , m_exact(exact_order)
    , m_oracle(std::move(oracle))
    , m_step(step)
{
    if (exact_order < 2) throw ParameterError("OracleChart: the oracle must supply at least second partials");
}

Vector OracleChart::partial(const Vector& u, const std::vector<int>& alpha) const
{
    const int degree = std::accumulate(alpha.begin(), alpha.end(), 0);
    if (degree <= m_exact) return m_oracle(u, degree).partial(alpha);

    int axis = m_vars - 1;
    while (alpha[axis] == 0) --axis;
    std::vector<int> lower = alpha;
    lower[axis] -= 1;

    auto central = [&](double h) {
        Vector up = u, down = u;
        up[axis] += h;
        down[axis] -= h;
        return Vector((partial(up, lower) - partial(down, lower)) / (2 * h));
    };
    return (4.0 * central(m_step / 2) - central(m_step)) / 3.0;
}

ChartJet OracleChart::jet(const Vector& u, int order) const
{
    if (order <= m_exact) return m_oracle(u, order);
    auto layout = jet_layout(m_vars, order);
    const ChartJet exact = m_oracle(u, m_exact);
    Matrix derivs(m_dim, layout->size());
    for (int k = 0; k < layout->size(); ++k) {
        const auto& alpha = layout->alpha(k);
        derivs.col(k) = layout->degree(k) <= m_exact ? exact.partial(alpha) : partial(u, alpha);
    }
    return ChartJet(layout, std::move(derivs));
}

} // namespace psg
