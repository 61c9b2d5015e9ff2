#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "moddef/errors.hpp"
#include "moddef/linalg.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace moddef;

namespace {

oracle::RatMatrix to_rat(const Matrix& m) {
    oracle::RatMatrix out(m.rows(), std::vector<mpq_class>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = *m(r, c).as_rational();
    return out;
}

Vector ints(const Field& f, std::initializer_list<long> xs) { return gen::ints(f, xs); }

}  // namespace

TEST_CASE("rref of small matrices") {
    Field q;
    auto id = rref(Matrix::identity(q, 2));
    CHECK(id.reduced == Matrix::identity(q, 2));
    CHECK(id.pivots == std::vector<std::size_t>{0, 1});

    auto e = rref(Matrix::from_ints(q, {{1, 2}, {2, 4}}));
    CHECK(e.reduced == Matrix::from_ints(q, {{1, 2}, {0, 0}}));
    CHECK(e.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rref agrees with the fraction-free elimination oracle") {
    gen::Rng rng(5);
    Field q;
    for (int trial = 0; trial < 40; ++trial) {
        Matrix m = gen::random_matrix(rng, q, 5, 7, trial % 2 ? 0.4 : 0.8);
        if (trial % 5 == 0) {  // force dependent rows
            for (std::size_t c = 0; c < 7; ++c) m(4, c) = m(0, c) * q.from_int(3) - m(1, c);
        }
        auto mine = rref(m);
        auto [ref, pivots] = oracle::fraction_free_rref(to_rat(m));
        CHECK(mine.pivots == pivots);
        CHECK(to_rat(mine.reduced) == ref);
    }
}

TEST_CASE("rank") {
    Field q;
    CHECK(rank(Matrix(q, 3, 3)) == 0);
    CHECK(rank(Matrix::identity(q, 4)) == 4);

    gen::Rng rng(17);
    for (int trial = 0; trial < 15; ++trial) {
        Matrix a = gen::random_matrix(rng, q, 3, 3, 0.5);
        Matrix b = gen::random_matrix(rng, q, 3, 3, 0.5);
        Matrix k = kronecker(a, b);
        CHECK(rank(k) == oracle::rank(to_rat(k)));
        CHECK(rank(k) == rank(a) * rank(b));
    }
}

TEST_CASE("kernel basis") {
    Field q;
    CHECK(kernel_basis(Matrix::identity(q, 3)).empty());

    auto all = kernel_basis(Matrix(q, 2, 3));
    CHECK(all.size() == 3);
    CHECK(rank(Matrix::from_rows(q, all)) == 3);

    auto k = kernel_basis(Matrix::from_ints(q, {{1, 1, 0}}));
    REQUIRE(k.size() == 2);
    for (const auto& v : k) CHECK((v[0] + v[1]).is_zero());
    CHECK(rank(Matrix::from_rows(q, k)) == 2);
}

TEST_CASE("solve") {
    Field q;
    Vector b = ints(q, {3, -4, 5});
    auto s = solve(Matrix::identity(q, 3), b);
    REQUIRE(s.particular);
    CHECK(*s.particular == b);
    CHECK(s.kernel_basis.empty());

    CHECK_FALSE(solve(Matrix::from_ints(q, {{1, 2}, {2, 4}}), ints(q, {1, 3})).particular);
    CHECK_THROWS_AS(solve(Matrix::identity(q, 2), ints(q, {1, 2, 3})), InputError);

    // canonical: free variables are zero
    auto c = solve(Matrix::from_ints(q, {{1, 2}, {2, 4}}), ints(q, {1, 2}));
    REQUIRE(c.particular);
    CHECK(*c.particular == ints(q, {1, 0}));
    CHECK(c.kernel_basis.size() == 1);
}

TEST_CASE("linear algebra invariants on random matrices") {
    gen::Rng rng(23);
    for (Field field : {Field::rationals(), Field::prime(13)}) {
        for (int trial = 0; trial < 60; ++trial) {
            const auto rows = static_cast<std::size_t>(gen::uniform(rng, 1, 6));
            const auto cols = static_cast<std::size_t>(gen::uniform(rng, 1, 6));
            Matrix m = gen::random_matrix(rng, field, rows, cols, 0.5);
            auto once = rref(m);
            CHECK(rref(once.reduced).reduced == once.reduced);
            auto kernel = kernel_basis(m);
            CHECK(rank(m) + kernel.size() == cols);
            for (const auto& v : kernel) CHECK(is_zero(m * std::span<const Scalar>(v)));

            // consistent system: b in the column span
            Vector x(cols, field.zero());
            for (auto& e : x) e = gen::small_scalar(rng, field);
            Vector b = m * std::span<const Scalar>(x);
            auto s = solve(m, b);
            REQUIRE(s.particular);
            CHECK(m * std::span<const Scalar>(*s.particular) == b);
            CHECK(s.kernel_basis.size() == kernel.size());

            // arbitrary right-hand side: solvable iff rank([m|b]) = rank(m)
            Vector rhs(rows, field.zero());
            for (auto& e : rhs) e = gen::small_scalar(rng, field);
            Matrix aug(field, rows, cols + 1);
            for (std::size_t r = 0; r < rows; ++r) {
                for (std::size_t c = 0; c < cols; ++c) aug(r, c) = m(r, c);
                aug(r, cols) = rhs[r];
            }
            CHECK(solve(m, rhs).particular.has_value() == (rank(aug) == rank(m)));
        }
    }
}
