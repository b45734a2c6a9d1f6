#include "coxring/exact.hpp"

#include <doctest.h>

#include <random>

using namespace coxring;

namespace {

RatMatrix rat_rows(const std::vector<std::vector<long>>& rows) {
    RatMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

IntMatrix int_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

IntMatrix random_int_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound) {
    std::uniform_int_distribution<int> entry(-bound, bound);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = entry(rng);
        }
    }
    return m;
}

void check_smith(const IntMatrix& a) {
    const SmithDecomposition s = smith_normal_form(a);
    CHECK(s.U * a * s.V == s.D);
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    const auto diag = s.diagonal();
    for (std::size_t i = 0; i < s.D.rows(); ++i) {
        for (std::size_t j = 0; j < s.D.cols(); ++j) {
            if (i != j) {
                CHECK(s.D(i, j) == 0);
            }
        }
    }
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
        CHECK(diag[i] >= 0);
        if (diag[i] != 0) {
            CHECK(diag[i + 1] % diag[i] == 0);
        } else {
            CHECK(diag[i + 1] == 0);
        }
    }
}

}  // namespace

TEST_CASE("rationals parse and print in lowest terms") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-7") == -7);
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
    CHECK(to_string(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("rref of a rank-one 2x2") {
    const RrefResult r = rref(rat_rows({{1, 2}, {2, 4}}));
    CHECK(r.matrix == rat_rows({{1, 2}, {0, 0}}));
    CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("kernel of a single row") {
    const RatMatrix m = rat_rows({{1, 1, 1}});
    CHECK(kernel_dim(m) == 2);
    const auto basis = kernel_basis(m);
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis) {
        CHECK(v[0] + v[1] + v[2] == 0);
    }
    RatMatrix stacked(2, 3);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            stacked(i, j) = basis[i][j];
        }
    }
    CHECK(rank(stacked) == 2);
}

TEST_CASE("rref, rank and kernel on random matrices") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> shape(1, 6);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = shape(rng), cols = shape(rng);
        RatMatrix m = to_rational(random_int_matrix(rng, rows, cols, 4));
        if (trial % 3 == 0 && rows > 1) {
            // force a dependent row
            for (std::size_t j = 0; j < cols; ++j) {
                m(rows - 1, j) = m(0, j) * Rational(-2, 3);
            }
        }
        const RrefResult once = rref(m);
        CHECK(rref(once.matrix).matrix == once.matrix);
        CHECK(rank(m) + kernel_dim(m) == cols);
        for (const auto& v : kernel_basis(m)) {
            for (const Rational& x : m * v) {
                CHECK(x == 0);
            }
        }
    }
}

TEST_CASE("Smith normal form examples") {
    SUBCASE("diag(2,3) has invariant factors 1, 6") {
        const SmithDecomposition s = smith_normal_form(int_rows({{2, 0}, {0, 3}}));
        CHECK(s.diagonal() == std::vector<Integer>{1, 6});
        check_smith(int_rows({{2, 0}, {0, 3}}));
    }
    SUBCASE("projective-plane ray matrix") {
        const IntMatrix a = int_rows({{1, 0}, {0, 1}, {-1, -1}});
        const SmithDecomposition s = smith_normal_form(a);
        CHECK(s.diagonal() == std::vector<Integer>{1, 1});
        CHECK(s.D(2, 0) == 0);
        CHECK(s.D(2, 1) == 0);
        check_smith(a);
    }
    SUBCASE("zero and empty matrices") {
        check_smith(IntMatrix(2, 3));
        CHECK(smith_normal_form(IntMatrix(2, 3)).rank() == 0);
    }
}

TEST_CASE("Smith normal form invariants on random integer matrices") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> shape(1, 5);
    for (int trial = 0; trial < 80; ++trial) {
        const IntMatrix a = random_int_matrix(rng, shape(rng), shape(rng), 9);
        check_smith(a);
        CHECK(smith_normal_form(a).rank() == rank(to_rational(a)));
    }
}

TEST_CASE("determinant by fraction-free elimination") {
    CHECK(determinant(int_rows({{2, 0}, {0, 3}})) == 6);
    CHECK(determinant(int_rows({{0, 1}, {1, 0}})) == -1);
    CHECK(determinant(int_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 0);
    CHECK(determinant(int_rows({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}})) == 4);
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(-1, 2) == 0);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(60, 30) == 118264581564861424LL);
    CHECK_THROWS_AS(binomial(200, 100), std::overflow_error);
}
