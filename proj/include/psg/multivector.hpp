#pragma once

#include <psg/signature.hpp>

#include <cstdint>
#include <memory>
#include <vector>

namespace psg {

/// Binomial coefficient C(n, k), zero outside 0 <= k <= n.
std::int64_t binomial(int n, int k);

///
/// Rank of a strictly increasing k-subset of {0, ..., m-1} in lexicographic
/// order, via the combinatorial number system:
///   rank(I) = C(m,k) - 1 - sum_j C(m-1-i_j, k-j).
///
std::int64_t subset_rank(int m, const std::vector<int>& subset);
std::vector<int> subset_unrank(int m, int k, std::int64_t rank);

///
/// Lambda^k E^m_s with the basis of lexicographically ordered k-subsets. The
/// induced inner product is diagonal on that basis with entries
/// eps_{i_1} ... eps_{i_k}.
///
class MultivectorSpace
{
public:
    MultivectorSpace(Signature ambient, int grade);

    const Signature& ambient() const { return m_ambient; }
    int grade() const { return m_grade; }
    int size() const { return static_cast<int>(m_subsets.size()); }

    /// Index q of the identification Lambda^k E^m_s = E^N_q.
    int index() const { return m_index; }

    const std::vector<int>& subset(int rank) const { return m_subsets[rank]; }
    int basis_sign(int rank) const { return m_signs[rank]; }
    const Vector& metric_diagonal() const { return m_diag; }

    friend bool operator==(const MultivectorSpace& a, const MultivectorSpace& b)
    {
        return a.m_ambient == b.m_ambient && a.m_grade == b.m_grade;
    }

private:
    Signature m_ambient;
    int m_grade;
    int m_index = 0;
    std::vector<std::vector<int>> m_subsets;
    std::vector<int> m_signs;
    Vector m_diag;
};

using SpacePtr = std::shared_ptr<const MultivectorSpace>;

/// Shared, immutable space descriptor (cached per (m, s, k)).
SpacePtr multivector_space(const Signature& ambient, int grade);

///
/// Grade-k element of Lambda^k E^m_s stored densely in lex-subset order.
///
template <typename Scalar>
class Multivector
{
public:
    using Coeffs = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    Multivector() = default;

    explicit Multivector(SpacePtr space)
        : m_space(std::move(space))
        , m_coeffs(Coeffs::Zero(m_space->size()))
    {}

    Multivector(SpacePtr space, Coeffs coeffs)
        : m_space(std::move(space))
        , m_coeffs(std::move(coeffs))
    {
        if (m_coeffs.size() != m_space->size()) {
            throw DimensionError("Multivector: coefficient count does not match C(m, k)");
        }
    }

    const MultivectorSpace& space() const { return *m_space; }
    const SpacePtr& space_ptr() const { return m_space; }
    const Coeffs& coeffs() const { return m_coeffs; }
    Coeffs& coeffs() { return m_coeffs; }

    Scalar euclidean_norm() const { return m_coeffs.norm(); }

    Multivector& operator+=(const Multivector& o)
    {
        check_same(o);
        m_coeffs += o.m_coeffs;
        return *this;
    }
    Multivector& operator-=(const Multivector& o)
    {
        check_same(o);
        m_coeffs -= o.m_coeffs;
        return *this;
    }
    Multivector& operator*=(Scalar a)
    {
        m_coeffs *= a;
        return *this;
    }

    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator*(Scalar s, Multivector a) { return a *= s; }
    friend Multivector operator*(Multivector a, Scalar s) { return a *= s; }
    friend Multivector operator-(Multivector a) { return a *= Scalar(-1); }

    void check_same(const Multivector& o) const
    {
        if (!m_space || !o.m_space || !(*m_space == *o.m_space)) {
            throw DimensionError("Multivector: operands live in different spaces");
        }
    }

private:
    SpacePtr m_space;
    Coeffs m_coeffs;
};

using MultivectorD = Multivector<double>;

/// Indefinite inner product <<A, B>>: diagonal in the lex basis.
template <typename Scalar>
Scalar mv_inner(const Multivector<Scalar>& a, const Multivector<Scalar>& b)
{
    a.check_same(b);
    return (a.coeffs().array() * b.coeffs().array() *
            a.space().metric_diagonal().template cast<Scalar>().array())
        .sum();
}

///
/// Exterior product of the columns of `vectors` (m x k). The coefficient on
/// the subset I is the k x k minor with rows I.
///
MultivectorD wedge(const Signature& sig, const Matrix& vectors);

MultivectorD wedge(const std::vector<AmbientVector<double>>& vectors);

///
/// <<f_1 ^ ... ^ f_k, g_1 ^ ... ^ g_k>> = det(<f_i, g_j>), evaluated without
/// expanding in the basis.
///
double mv_inner_decomposable(const Signature& sig, const Matrix& f, const Matrix& g);

} // namespace psg
