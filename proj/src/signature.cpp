#include <psg/signature.hpp>

#include <cmath>

namespace psg {

Signature::Signature(int m, int s)
    : m_dim(m)
    , m_index(s)
{
    if (m <= 0 || s < 0 || s > m) {
        throw ParameterError(
            "Signature: need 0 <= s <= m and m > 0, got m=" + std::to_string(m) +
            " s=" + std::to_string(s));
    }
}

Vector Signature::metric_diagonal() const
{
    Vector d(m_dim);
    for (int a = 0; a < m_dim; ++a) d[a] = eps(a);
    return d;
}

Matrix Signature::gram(const Matrix& f, const Matrix& g) const
{
    if (f.rows() != m_dim || g.rows() != m_dim) {
        throw DimensionError("Signature::gram: row count does not match the ambient dimension");
    }
    return f.transpose() * metric_diagonal().asDiagonal() * g;
}

std::string Signature::to_string() const
{
    return "E^" + std::to_string(m_dim) + "_" + std::to_string(m_index);
}

const char* to_string(Causal c)
{
    switch (c) {
    case Causal::spacelike: return "spacelike";
    case Causal::timelike: return "timelike";
    case Causal::null: return "null";
    case Causal::zero: return "zero";
    }
    return "unknown";
}

Causal causal_character(const Signature& sig, const Vector& v, double tol)
{
    if (v.size() != sig.dim()) throw DimensionError("causal_character: dimension mismatch");
    const double norm2 = v.squaredNorm();
    if (std::sqrt(norm2) < tol) return Causal::zero;
    const double q = sig.inner(v, v);
    if (std::abs(q) < tol * norm2) return Causal::null;
    return q > 0 ? Causal::spacelike : Causal::timelike;
}

Vector project_out(const Signature& sig, const Vector& v, const OrthonormalSet& basis)
{
    Vector r = v;
    for (int pass = 0; pass < 2; ++pass) {
        for (Eigen::Index j = 0; j < basis.vectors.cols(); ++j) {
            const auto e = basis.vectors.col(j);
            r -= (basis.signs[j] * sig.inner(r, e)) * e;
        }
    }
    return r;
}

OrthonormalSet gram_schmidt_indefinite(const Signature& sig, const Matrix& vectors, double pivot_tol)
{
    if (vectors.rows() != sig.dim()) {
        throw DimensionError("gram_schmidt_indefinite: vectors must have m rows");
    }
    OrthonormalSet out;
    out.vectors.resize(sig.dim(), 0);
    for (Eigen::Index k = 0; k < vectors.cols(); ++k) {
        const Vector v = vectors.col(k);
        const Vector r = project_out(sig, v, out);
        const double norm2 = r.squaredNorm();
        if (norm2 <= 1e-24 * std::max(1.0, v.squaredNorm())) {
            throw LinearDependence(
                static_cast<std::size_t>(k),
                "gram_schmidt_indefinite: vector " + std::to_string(k) + " is linearly dependent");
        }
        const double q = sig.inner(r, r);
        if (std::abs(q) < pivot_tol * norm2) {
            throw NullPivot(
                static_cast<std::size_t>(k),
                "gram_schmidt_indefinite: null pivot at vector " + std::to_string(k));
        }
        out.vectors.conservativeResize(Eigen::NoChange, out.vectors.cols() + 1);
        out.vectors.col(out.vectors.cols() - 1) = r / std::sqrt(std::abs(q));
        out.signs.push_back(q > 0 ? 1 : -1);
    }
    return out;
}

} // namespace psg
