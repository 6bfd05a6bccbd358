#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace psg {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different spaces (dimension, index or grade mismatch).
class DimensionError : public Error
{
public:
    using Error::Error;
};

/// Invalid construction parameters (catalog data, chart files, run configuration).
class ParameterError : public Error
{
public:
    using Error::Error;
};

/// Gram-Schmidt met a (numerically) null direction that cannot be normalized.
class NullPivot : public Error
{
public:
    NullPivot(std::size_t index, const std::string& what)
        : Error(what)
        , m_index(index)
    {}

    /// Position of the offending vector in the input list.
    std::size_t index() const { return m_index; }

private:
    std::size_t m_index;
};

/// Gram-Schmidt input vectors are linearly dependent.
class LinearDependence : public Error
{
public:
    LinearDependence(std::size_t index, const std::string& what)
        : Error(what)
        , m_index(index)
    {}

    std::size_t index() const { return m_index; }

private:
    std::size_t m_index;
};

/// Induced metric is (numerically) degenerate at the evaluation point.
class DegenerateMetric : public Error
{
public:
    using Error::Error;
};

/// Operation defined only for hypersurfaces of S^{n+1}_s(1), i.e. m = n + 2.
class NotHypersurface : public Error
{
public:
    using Error::Error;
};

/// Least-squares eigenvalue vanished although the Laplacian does not.
class NoOneTypeFit : public Error
{
public:
    NoOneTypeFit(double lambda, const std::string& what)
        : Error(what)
        , m_lambda(lambda)
    {}

    double lambda() const { return m_lambda; }

    /// The fitted eigenvalue is zero: null-type or higher-type behaviour.
    bool null_type() const { return true; }

private:
    double m_lambda;
};

/// Totally umbilical hypersurface with 1 + eps * alpha^2 = 0 (pseudo-horosphere).
class FlatUmbilical : public Error
{
public:
    using Error::Error;
};

/// Input is outside the hypotheses of the requested decomposition.
class DegenerateInput : public Error
{
public:
    using Error::Error;
};

/// Mean curvature vector is lightlike (or vanishes) where it must be non-null.
class NullMeanCurvature : public Error
{
public:
    using Error::Error;
};

/// Chart domain touches a singular locus of the parametrization.
class DomainSingularity : public Error
{
public:
    using Error::Error;
};

/// Malformed chart text.
class ParseError : public Error
{
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what)
        , m_line(line)
    {}

    std::size_t line() const { return m_line; }

private:
    std::size_t m_line;
};

} // namespace psg
