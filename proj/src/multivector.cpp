#include <psg/multivector.hpp>

#include <Eigen/LU>

#include <map>
#include <mutex>
#include <tuple>

namespace psg {

std::int64_t binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::int64_t subset_rank(int m, const std::vector<int>& subset)
{
    const int k = static_cast<int>(subset.size());
    std::int64_t acc = 0;
    int prev = -1;
    for (int j = 0; j < k; ++j) {
        const int i = subset[j];
        if (i <= prev || i >= m) throw DimensionError("subset_rank: subset must be increasing in [0, m)");
        acc += binomial(m - 1 - i, k - j);
        prev = i;
    }
    return binomial(m, k) - 1 - acc;
}

std::vector<int> subset_unrank(int m, int k, std::int64_t rank)
{
    if (rank < 0 || rank >= binomial(m, k)) throw DimensionError("subset_unrank: rank out of range");
    // Walk the lex order: at each slot skip the blocks of subsets starting lower.
    std::vector<int> out;
    out.reserve(k);
    int next = 0;
    for (int j = 0; j < k; ++j) {
        for (int v = next;; ++v) {
            const std::int64_t block = binomial(m - 1 - v, k - 1 - j);
            if (rank < block) {
                out.push_back(v);
                next = v + 1;
                break;
            }
            rank -= block;
        }
    }
    return out;
}

MultivectorSpace::MultivectorSpace(Signature ambient, int grade)
    : m_ambient(ambient)
    , m_grade(grade)
{
    const int m = ambient.dim();
    if (grade < 1 || grade > m) throw DimensionError("MultivectorSpace: grade must be in [1, m]");
    const auto n = binomial(m, grade);
    m_subsets.reserve(n);
    m_signs.reserve(n);
    m_diag.resize(n);
    for (std::int64_t r = 0; r < n; ++r) {
        auto s = subset_unrank(m, grade, r);
        int sign = 1;
        for (int a : s) sign *= ambient.eps(a);
        m_signs.push_back(sign);
        m_diag[r] = sign;
        if (sign < 0) ++m_index;
        m_subsets.push_back(std::move(s));
    }
}

SpacePtr multivector_space(const Signature& ambient, int grade)
{
    static std::mutex mutex;
    static std::map<std::tuple<int, int, int>, SpacePtr> cache;
    const auto key = std::make_tuple(ambient.dim(), ambient.index(), grade);
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto space = std::make_shared<const MultivectorSpace>(ambient, grade);
    cache.emplace(key, space);
    return space;
}

MultivectorD wedge(const Signature& sig, const Matrix& vectors)
{
    if (vectors.rows() != sig.dim()) throw DimensionError("wedge: vectors must have m rows");
    const int k = static_cast<int>(vectors.cols());
    auto space = multivector_space(sig, k);
    MultivectorD out(space);
    Matrix minor(k, k);
    for (int r = 0; r < space->size(); ++r) {
        const auto& s = space->subset(r);
        for (int i = 0; i < k; ++i) minor.row(i) = vectors.row(s[i]);
        switch (k) {
        case 1: out.coeffs()[r] = minor(0, 0); break;
        case 2: out.coeffs()[r] = minor(0, 0) * minor(1, 1) - minor(0, 1) * minor(1, 0); break;
        default: out.coeffs()[r] = minor.determinant(); break;
        }
    }
    return out;
}

MultivectorD wedge(const std::vector<AmbientVector<double>>& vectors)
{
    if (vectors.empty()) throw DimensionError("wedge: empty vector list");
    const Signature sig = vectors.front().space;
    Matrix cols(sig.dim(), static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t j = 0; j < vectors.size(); ++j) {
        if (!(vectors[j].space == sig)) throw DimensionError("wedge: vectors live in different spaces");
        cols.col(static_cast<Eigen::Index>(j)) = vectors[j].coords;
    }
    return wedge(sig, cols);
}

double mv_inner_decomposable(const Signature& sig, const Matrix& f, const Matrix& g)
{
    if (f.cols() != g.cols()) throw DimensionError("mv_inner_decomposable: grade mismatch");
    return sig.gram(f, g).determinant();
}

} // namespace psg
