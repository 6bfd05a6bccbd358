#include "generators.hpp"

#include <psg/multivector.hpp>

#include <doctest.h>

using namespace psg;

TEST_CASE("binomials and subset ranks")
{
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(3, 4) == 0);
    for (int m = 1; m <= 7; ++m) {
        for (int k = 0; k <= m; ++k) {
            for (std::int64_t r = 0; r < binomial(m, k); ++r) CHECK(subset_rank(m, subset_unrank(m, k, r)) == r);
        }
    }
    // lexicographic order
    CHECK(subset_unrank(5, 3, 0) == std::vector<int>{0, 1, 2});
    CHECK(subset_unrank(5, 3, 1) == std::vector<int>{0, 1, 3});
    CHECK(subset_unrank(5, 3, 9) == std::vector<int>{2, 3, 4});
}

TEST_CASE("multivector space carries the induced metric")
{
    // E^5_1 grade 3: the timelike subsets are those containing axis 4
    const auto space = multivector_space(Signature(5, 1), 3);
    CHECK(space->size() == 10);
    int timelike = 0;
    for (int r = 0; r < space->size(); ++r) {
        const auto& s = space->subset(r);
        const bool has_time = std::find(s.begin(), s.end(), 4) != s.end();
        CHECK(space->basis_sign(r) == (has_time ? -1 : 1));
        timelike += has_time;
    }
    CHECK(space->index() == timelike);
    CHECK(timelike == 6);
}

TEST_CASE("wedge of coordinate axes is a basis element")
{
    const Signature sig(4, 1);
    Matrix e = Matrix::Zero(4, 2);
    e(1, 0) = 1;
    e(3, 1) = 1;
    const MultivectorD w = wedge(sig, e);
    const std::int64_t r = subset_rank(4, {1, 3});
    for (int k = 0; k < w.space().size(); ++k) CHECK(w.coeffs()[k] == (k == r ? 1.0 : 0.0));
    CHECK(mv_inner(w, w) == -1.0);
}

TEST_CASE("wedge is alternating and multilinear")
{
    gen::Rng rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        const Signature sig = gen::signature(rng, 3, 6);
        const int m = sig.dim();
        const int k = rng.integer(1, m - 1);
        Matrix f = gen::matrix(rng, m, k);
        const MultivectorD w = wedge(sig, f);
        if (k >= 2) {
            Matrix swapped = f;
            swapped.col(0).swap(swapped.col(1));
            CHECK((wedge(sig, swapped) + w).euclidean_norm() < 1e-12);
            Matrix repeated = f;
            repeated.col(1) = f.col(0);
            CHECK(wedge(sig, repeated).euclidean_norm() < 1e-12);
        }
        Matrix scaled = f;
        scaled.col(k - 1) *= 3.0;
        CHECK((wedge(sig, scaled) - 3.0 * w).euclidean_norm() < 1e-11);
    }
}

TEST_CASE("inner product of decomposables is the Gram determinant")
{
    gen::Rng rng(22);
    for (int trial = 0; trial < 100; ++trial) {
        const Signature sig = gen::signature(rng, 2, 7);
        const int m = sig.dim();
        const int k = rng.integer(1, m);
        const Matrix f = gen::matrix(rng, m, k);
        const Matrix g = gen::matrix(rng, m, k);
        const Matrix gram = f.transpose() * sig.metric_diagonal().asDiagonal() * g;
        const double expected = gram.determinant();
        CHECK(mv_inner(wedge(sig, f), wedge(sig, g)) == doctest::Approx(expected).epsilon(1e-10).scale(1));
        CHECK(mv_inner_decomposable(sig, f, g) == doctest::Approx(expected).epsilon(1e-10).scale(1));
    }
}

TEST_CASE("decomposable 2-vectors satisfy the Plucker relation")
{
    gen::Rng rng(23);
    const Signature sig(4, 1);
    for (int trial = 0; trial < 50; ++trial) {
        const MultivectorD w = wedge(sig, gen::matrix(rng, 4, 2));
        auto p = [&](int i, int j) { return w.coeffs()[subset_rank(4, {i, j})]; };
        CHECK(std::abs(p(0, 1) * p(2, 3) - p(0, 2) * p(1, 3) + p(0, 3) * p(1, 2)) < 1e-12);
    }
}

TEST_CASE("operands from different spaces are rejected")
{
    const MultivectorD a = wedge(Signature(4, 1), Matrix::Identity(4, 2));
    const MultivectorD b = wedge(Signature(4, 0), Matrix::Identity(4, 2));
    CHECK_THROWS_AS(a + b, DimensionError);
    CHECK_THROWS_AS(mv_inner(a, b), DimensionError);
    CHECK_THROWS_AS(MultivectorD(multivector_space(Signature(4, 1), 2), Vector::Zero(5)), DimensionError);
}
