#pragma once

#include <psg/errors.hpp>

#include <Eigen/Core>

#include <string>
#include <vector>

namespace psg {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

///
/// Pseudo-Euclidean space E^m_s: R^m with the diagonal metric whose last s
/// entries are -1.
///
class Signature
{
public:
    Signature() = default;
    Signature(int m, int s);

    int dim() const { return m_dim; }
    int index() const { return m_index; }

    /// eps_A for the 0-based coordinate A.
    int eps(int axis) const { return axis < m_dim - m_index ? 1 : -1; }

    /// Diagonal of the metric as a vector of +-1.
    Vector metric_diagonal() const;

    /// Indefinite inner product sum_A eps_A v_A w_A.
    template <typename DerivedA, typename DerivedB>
    typename DerivedA::Scalar inner(
        const Eigen::MatrixBase<DerivedA>& v,
        const Eigen::MatrixBase<DerivedB>& w) const
    {
        const Eigen::Index space = m_dim - m_index;
        return v.head(space).dot(w.head(space)) - v.tail(m_index).dot(w.tail(m_index));
    }

    /// Gram matrix F^T eta G of two column sets.
    Matrix gram(const Matrix& f, const Matrix& g) const;

    std::string to_string() const;

    friend bool operator==(const Signature& a, const Signature& b)
    {
        return a.m_dim == b.m_dim && a.m_index == b.m_index;
    }

private:
    int m_dim = 0;
    int m_index = 0;
};

///
/// Vector of E^m_s carrying its space; the checked counterpart of a raw
/// coordinate vector for public APIs.
///
template <typename Scalar>
struct AmbientVector
{
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> coords;
    Signature space;

    AmbientVector(Eigen::Matrix<Scalar, Eigen::Dynamic, 1> c, Signature sig)
        : coords(std::move(c))
        , space(sig)
    {
        if (coords.size() != space.dim()) {
            throw DimensionError("AmbientVector: coordinate count does not match the signature");
        }
    }
};

template <typename Scalar>
Scalar inner(const AmbientVector<Scalar>& v, const AmbientVector<Scalar>& w)
{
    if (!(v.space == w.space)) {
        throw DimensionError(
            "inner: signatures differ (" + v.space.to_string() + " vs " + w.space.to_string() +
            ")");
    }
    return v.space.inner(v.coords, w.coords);
}

enum class Causal { spacelike, timelike, null, zero };

const char* to_string(Causal c);

///
/// Causal character of v. Zero when the Euclidean norm is below tol, null when
/// |<v,v>| < tol * |v|^2_euclid.
///
Causal causal_character(const Signature& sig, const Vector& v, double tol = 1e-9);

inline Causal causal_character(const AmbientVector<double>& v, double tol = 1e-9)
{
    return causal_character(v.space, v.coords, tol);
}

struct OrthonormalSet
{
    Matrix vectors; ///< columns e_1..e_k
    std::vector<int> signs; ///< eps_i = <e_i, e_i>
};

///
/// Gram-Schmidt for an indefinite metric.
///
/// Each residual is normalized by sqrt|<r,r>|, so the change of basis is upper
/// triangular with positive diagonal and orientation is preserved. Uses two
/// projection passes per vector.
///
/// Throws NullPivot when |<r,r>| < pivot_tol * |r|^2_euclid and
/// LinearDependence when the residual vanishes.
///
OrthonormalSet gram_schmidt_indefinite(
    const Signature& sig,
    const Matrix& vectors,
    double pivot_tol = 1e-9);

/// Project v onto the orthogonal complement of an orthonormal set.
Vector project_out(const Signature& sig, const Vector& v, const OrthonormalSet& basis);

} // namespace psg
