#include "coxring/poly.hpp"

#include <doctest.h>

#include <random>

using namespace coxring;

namespace {

const Field Q = Field::rationals();

MultiPoly P(const std::string& text, std::size_t nvars = 3, Field field = Q) {
    return parse_poly(text, field, nvars);
}

MultiPoly random_poly(std::mt19937& rng, std::size_t nvars, int max_exp, int terms) {
    std::uniform_int_distribution<int> e(0, max_exp), c(-5, 5), d(1, 3);
    MultiPoly p(Q, nvars);
    for (int t = 0; t < terms; ++t) {
        Exponents ex(nvars);
        for (int& x : ex) {
            x = e(rng);
        }
        p.add_term(ex, Rational(c(rng), d(rng)));
    }
    return p;
}

MultiPoly random_form(std::mt19937& rng, std::size_t r, int degree) {
    std::uniform_int_distribution<int> c(-3, 3);
    MultiPoly p(Q, r + 1);
    for (const Exponents& e : monomials_of_degree(r, degree)) {
        p.add_term(e, c(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("parse and format round trip") {
    const MultiPoly p = P("3/2*Z0^2*Z1 - Z2^3");
    CHECK(format_poly(p) == "3/2*Z0^2*Z1 - Z2^3");
    CHECK(P(" ( Z0 + Z1 ) ^ 2 ") == P("Z0^2 + 2*Z0*Z1 + Z1^2"));
    CHECK(format_poly(MultiPoly(Q, 2)) == "0");
    CHECK(format_poly(P("-Z1 + 1/3", 2)) == "-Z1 + 1/3");
    CHECK(parse_poly(format_poly(P("Z0*Z2 - 4*Z1^5 + 7")), Q, 3) == P("Z0*Z2 - 4*Z1^5 + 7"));
}

TEST_CASE("parse errors carry a position") {
    try {
        (void)P("Z0 + * Z1");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);
    }
    CHECK_THROWS_AS(P("Z7"), ParseError);
    CHECK_THROWS_AS(P("Z0^"), ParseError);
    CHECK_THROWS_AS(P("(Z0"), ParseError);
}

TEST_CASE("custom variable names") {
    const std::vector<std::string> names{"x", "y", "z"};
    const MultiPoly p = parse_poly("x^2*y - z", Q, names);
    CHECK(format_poly(p, names) == "x^2*y - z");
}

TEST_CASE("characteristic two squares are additive") {
    const Field f2 = Field::prime(2);
    const MultiPoly lhs = P("Z0 + Z1", 2, f2).pow(2);
    CHECK(lhs == P("Z0^2 + Z1^2", 2, f2));
    CHECK(format_poly(P("3*Z0 - Z1", 2, Field::prime(5))) == "3*Z0 + 4*Z1");
    CHECK_THROWS_AS(Field::prime(6), std::invalid_argument);
    CHECK(Field::parse("fp:7") == Field::prime(7));
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const MultiPoly a = random_poly(rng, 3, 3, 4);
        const MultiPoly b = random_poly(rng, 3, 3, 4);
        const MultiPoly c = random_poly(rng, 3, 3, 4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
        CHECK(a.pow(3) == a * a * a);
    }
}

TEST_CASE("degrees of products of forms add") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const MultiPoly p = random_form(rng, 2, 1 + trial % 3);
        const MultiPoly q = random_form(rng, 2, 2 + trial % 2);
        if (p.is_zero() || q.is_zero()) {
            continue;
        }
        CHECK((p * q).is_homogeneous());
        CHECK((p * q).total_degree() == p.total_degree() + q.total_degree());
    }
}

TEST_CASE("monomial enumeration") {
    CHECK(monomials_of_degree(3, 2).size() == 10);
    CHECK(monomials_of_degree(2, -1).empty());
    CHECK(monomials_of_degree(2, 0).size() == 1);
    for (std::size_t r = 1; r <= 4; ++r) {
        for (int d = 0; d <= 6; ++d) {
            CHECK(monomials_of_degree(r, d).size() == static_cast<std::size_t>(binomial(d + r, r)));
        }
    }
    const auto lex = monomials_of_degree(2, 2);
    CHECK(lex.front() == Exponents{2, 0, 0});
    CHECK(lex.back() == Exponents{0, 0, 2});
    // 3i + 4j + 5k = 15: x^5, x*y^3, x^2*y*z, z^3
    const auto weighted = monomials_of_weighted_degree({3, 4, 5}, 15);
    CHECK(weighted.size() == 4);
    for (const Exponents& e : weighted) {
        CHECK(weighted_degree(e, {3, 4, 5}) == 15);
    }
}

TEST_CASE("derivatives and evaluation") {
    CHECK(partial_derivative(P("Z0^2*Z1"), {1, 1, 0}) == P("2*Z0"));
    CHECK(partial_derivative(P("Z0^2*Z1"), {0, 2, 0}).is_zero());
    CHECK(evaluate(P("Z0^2 - Z1*Z2"), {2, 1, 4}) == 0);
    CHECK(evaluate(P("Z0 + 1/2*Z1"), {Rational(1, 3), 1, 0}) == Rational(5, 6));
    CHECK_THROWS_AS(partial_derivative(P("Z0^2", 3, Field::prime(3)), {1, 0, 0}), std::domain_error);
}

TEST_CASE("coefficient vectors round trip") {
    const auto monos = monomials_of_degree(2, 2);
    const MultiPoly p = P("Z0^2 - 3*Z1*Z2 + 1/2*Z2^2");
    const auto v = coefficient_vector(p, monos);
    CHECK(from_coefficients(Q, monos, v) == p);
    CHECK_THROWS(coefficient_vector(P("Z0"), monos));
}

TEST_CASE("mismatched rings are rejected") {
    CHECK_THROWS_AS(P("Z0", 2) + P("Z0", 3), std::invalid_argument);
    CHECK_THROWS_AS(P("Z0", 2, Field::prime(3)) * P("Z0", 2), std::invalid_argument);
}

TEST_CASE("multidegrees and Laurent terms") {
    const MultiDegree d{2, {1, -1}};
    CHECK(d + MultiDegree{1, {0, 2}} == MultiDegree{3, {1, 1}});
    CHECK(d * 3 == MultiDegree{6, {3, -3}});
    CHECK(MultiDegree::from_flat(d.flat()) == d);
    const LaurentTerm t{P("Z0"), {1, 0}};
    const LaurentTerm inv{P("1"), {-1, 0}};
    // Z0*T1 has degree A - E1; T1^-1 has degree E1
    CHECK(t.multidegree() == MultiDegree{1, {1, 0}});
    CHECK(inv.multidegree() == MultiDegree{0, {-1, 0}});
    CHECK((t * inv).multidegree() == MultiDegree{1, {0, 0}});
}
