#pragma once

#include "coxring/exact.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxring {

/// Coefficient field: the rationals, or the prime field F_p.
/// Elements of F_p are carried as integers in [0, p).
class Field {
public:
    Field() = default;
    static Field rationals() { return Field(); }
    static Field prime(std::uint32_t p);

    bool is_rational() const { return p_ == 0; }
    std::uint32_t characteristic() const { return p_; }

    Rational normalize(const Rational& q) const;
    Rational inverse(const Rational& q) const;

    /// "Q" or "F_p".
    std::string name() const;
    /// Accepts "q" / "Q" or "fp:<p>".
    static Field parse(const std::string& text);

    bool operator==(const Field&) const = default;

private:
    std::uint32_t p_ = 0;
};

/// Rank of a matrix whose entries are field elements, by Gaussian elimination in the field.
std::size_t rank_over(const Field& field, std::vector<std::vector<Rational>> rows);

using Exponents = std::vector<int>;

int total_degree(const Exponents& e);
int weighted_degree(const Exponents& e, const std::vector<int>& weights);

/// Variable names used for printing and parsing; defaults to Z0..Z{n-1}.
std::vector<std::string> default_variable_names(std::size_t nvars, const std::string& stem = "Z",
                                                std::size_t first_index = 0);

/// Sparse polynomial over a Field in a fixed number of variables. Terms are keyed by
/// exponent vector (lexicographic map order); zero coefficients are never stored.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational>;

    MultiPoly() = default;
    MultiPoly(Field field, std::size_t nvars) : field_(field), nvars_(nvars) {}

    static MultiPoly constant(Field field, std::size_t nvars, const Rational& c);
    static MultiPoly variable(Field field, std::size_t nvars, std::size_t index);
    static MultiPoly monomial(Field field, Exponents e, const Rational& c = 1);

    const Field& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Exponents& e) const;
    void add_term(const Exponents& e, const Rational& c);

    /// -1 for the zero polynomial.
    int total_degree() const;
    /// True for zero and for polynomials whose terms all share one (weighted) degree.
    bool is_homogeneous() const;
    bool is_homogeneous(const std::vector<int>& weights) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly& operator*=(const MultiPoly& other);
    MultiPoly scaled(const Rational& c) const;
    MultiPoly pow(unsigned n) const;

    /// Re-indexes the variables: variable i maps to new index map[i] of a ring with nvars variables.
    MultiPoly remapped(const std::vector<std::size_t>& map, std::size_t nvars) const;

    bool operator==(const MultiPoly& other) const;

private:
    void check_compatible(const MultiPoly& other) const;

    Field field_;
    std::size_t nvars_ = 0;
    TermMap terms_;
};

MultiPoly operator+(MultiPoly a, const MultiPoly& b);
MultiPoly operator-(MultiPoly a, const MultiPoly& b);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

/// All exponent vectors of total degree d in r+1 variables, in descending lexicographic
/// order (Z0^d first). Empty for d < 0.
std::vector<Exponents> monomials_of_degree(std::size_t r, int d);

/// All exponent vectors with sum(weights[i] * e[i]) == d, descending lexicographic.
std::vector<Exponents> monomials_of_weighted_degree(const std::vector<int>& weights, int d);

/// Iterated partial derivative d^alpha p. Characteristic 0 only: throws std::domain_error over F_p.
MultiPoly partial_derivative(const MultiPoly& p, const Exponents& alpha);

Rational evaluate(const MultiPoly& p, const std::vector<Rational>& point);

/// Coefficients of p against an ordered list of monomials; throws if p has a term outside it.
std::vector<Rational> coefficient_vector(const MultiPoly& p, const std::vector<Exponents>& monomials);
MultiPoly from_coefficients(Field field, const std::vector<Exponents>& monomials,
                            const std::vector<Rational>& coeffs);

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses expressions like "3/2*Z0^2*Z1 - Z2^3" or "(Z0 + Z1)^2"; whitespace-insensitive.
MultiPoly parse_poly(const std::string& text, Field field, const std::vector<std::string>& names);
MultiPoly parse_poly(const std::string& text, Field field, std::size_t nvars);

/// Deterministic text form, terms in descending lexicographic exponent order.
std::string format_poly(const MultiPoly& p, const std::vector<std::string>& names);
std::string format_poly(const MultiPoly& p);

/// Grading index (a; b1..bm) standing for the divisor class aA - b1 E1 - ... - bm Em.
struct MultiDegree {
    int a = 0;
    std::vector<int> b;

    MultiDegree operator+(const MultiDegree& other) const;
    MultiDegree operator*(int n) const;
    bool operator==(const MultiDegree&) const = default;
    auto operator<=>(const MultiDegree&) const = default;

    /// Flattened form [a, b1, ..., bm].
    std::vector<int> flat() const;
    static MultiDegree from_flat(const std::vector<int>& v);
};

/// g * T1^b1 ... Tm^bm with g a form in the Z-variables.
struct LaurentTerm {
    MultiPoly base;
    std::vector<int> tdegree;

    MultiDegree multidegree() const;
    LaurentTerm operator*(const LaurentTerm& other) const;
    std::string to_string() const;
    bool operator==(const LaurentTerm&) const = default;
};

}  // namespace coxring
