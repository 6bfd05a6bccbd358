#include "generators.hpp"

#include <doctest.h>

using namespace psg;

TEST_CASE("inner product follows the signature")
{
    const Signature sig(4, 1);
    Vector v(4), w(4);
    v << 1, 2, 3, 4;
    w << 2, 0, 1, 1;
    CHECK(sig.inner(v, w) == doctest::Approx(2 + 0 + 3 - 4));
    CHECK(sig.eps(0) == 1);
    CHECK(sig.eps(3) == -1);
    CHECK(sig.metric_diagonal()[3] == -1);
    CHECK(sig.to_string() == "E^4_1");
    CHECK_THROWS_AS(Signature(3, 4), ParameterError);
}

TEST_CASE("ambient vectors refuse mixed spaces")
{
    AmbientVector<double> a(Vector::Ones(3), Signature(3, 1));
    AmbientVector<double> b(Vector::Ones(3), Signature(3, 0));
    CHECK(inner(a, a) == doctest::Approx(1));
    CHECK_THROWS_AS(inner(a, b), DimensionError);
    CHECK_THROWS_AS(AmbientVector<double>(Vector::Ones(2), Signature(3, 1)), DimensionError);
}

TEST_CASE("causal character")
{
    const Signature sig(3, 1);
    Vector v(3);
    v << 1, 0, 0;
    CHECK(causal_character(sig, v) == Causal::spacelike);
    v << 0, 0, 2;
    CHECK(causal_character(sig, v) == Causal::timelike);
    v << 1, 0, 1;
    CHECK(causal_character(sig, v) == Causal::null);
    CHECK(causal_character(sig, Vector::Zero(3)) == Causal::zero);
}

TEST_CASE("Gram-Schmidt yields an orthonormal basis with the input orientation")
{
    gen::Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Signature sig = gen::signature(rng, 2, 6);
        const int m = sig.dim();
        const Matrix a = gen::matrix(rng, m, m);
        OrthonormalSet e;
        try {
            e = gram_schmidt_indefinite(sig, a, 1e-3);
        } catch (const NullPivot&) {
            continue;
        }
        // <e_i, e_j> = eps_i delta_ij
        const Matrix g = e.vectors.transpose() * sig.metric_diagonal().asDiagonal() * e.vectors;
        Matrix expected = Matrix::Zero(m, m);
        for (int i = 0; i < m; ++i) expected(i, i) = e.signs[i];
        CHECK((g - expected).cwiseAbs().maxCoeff() < 1e-10);

        // change of basis is upper triangular with a positive diagonal
        const Matrix r = e.vectors.fullPivLu().solve(a);
        for (int i = 0; i < m; ++i) {
            CHECK(r(i, i) > 0);
            for (int j = 0; j < i; ++j) CHECK(std::abs(r(i, j)) < 1e-8);
        }
        int timelike = 0;
        for (int s : e.signs) timelike += s < 0;
        CHECK(timelike == sig.index());
    }
}

TEST_CASE("Gram-Schmidt failures")
{
    const Signature sig(3, 1);
    Matrix null(3, 2);
    null << 1, 0, 0, 1, 1, 0;
    try {
        gram_schmidt_indefinite(sig, null);
        FAIL("expected NullPivot");
    } catch (const NullPivot& e) {
        CHECK(e.index() == 0);
    }

    Matrix dependent(3, 2);
    dependent << 1, 2, 0, 0, 0, 0;
    try {
        gram_schmidt_indefinite(sig, dependent);
        FAIL("expected LinearDependence");
    } catch (const LinearDependence& e) {
        CHECK(e.index() == 1);
    }
    CHECK_THROWS_AS(gram_schmidt_indefinite(sig, Matrix::Identity(2, 2)), DimensionError);
}

TEST_CASE("projection removes the span of an orthonormal set")
{
    gen::Rng rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const Signature sig(5, rng.integer(0, 3));
        OrthonormalSet e;
        try {
            e = gram_schmidt_indefinite(sig, gen::matrix(rng, 5, 3), 1e-3);
        } catch (const NullPivot&) {
            continue;
        }
        const Vector r = project_out(sig, gen::vector(rng, 5), e);
        for (int i = 0; i < 3; ++i) CHECK(std::abs(sig.inner(r, Vector(e.vectors.col(i)))) < 1e-12);
    }
}
