#pragma once

#include "coxring/exact.hpp"
#include "coxring/poly.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace coxring {

enum class OrderKind { GradedReverseLex, Lex, BlockElimination };

/// Monomial order. Graded orders use the optional positive weights (default all 1);
/// a block-elimination order compares the first `block` variables by weighted grevlex,
/// then the remaining variables the same way.
struct TermOrder {
    OrderKind kind = OrderKind::GradedReverseLex;
    std::size_t block = 0;
    std::vector<int> weights;

    static TermOrder grevlex(std::vector<int> weights = {});
    static TermOrder lex();
    static TermOrder elimination(std::size_t block, std::vector<int> weights = {});

    /// Negative, zero or positive as a < b, a == b, a > b.
    int compare(const Exponents& a, const Exponents& b) const;
    int degree(const Exponents& e) const;
    std::string name() const;

    bool operator==(const TermOrder&) const = default;
};

/// A Groebner basis over one field in a fixed number of variables. Bases returned by
/// buchberger() are reduced: monic, interreduced and sorted by increasing leading monomial.
struct GroebnerBasis {
    Field field;
    std::size_t nvars = 0;
    TermOrder order;
    std::vector<MultiPoly> generators;
    bool reduced = false;

    bool operator==(const GroebnerBasis&) const = default;
};

/// Collects every basis produced by the engine, for certificate checks.
struct GroebnerTrace {
    std::vector<GroebnerBasis> bases;
};

Exponents leading_monomial(const MultiPoly& f, const TermOrder& order);
Rational leading_coefficient(const MultiPoly& f, const TermOrder& order);

/// Reduced Groebner basis. Pairs are processed smallest lcm first (ties by index) with
/// the product and chain criteria. Zero generators are ignored; gens must share field
/// and variable count.
GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, const TermOrder& order,
                         GroebnerTrace* trace = nullptr);

/// Full remainder of f on division by the basis elements.
MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& g);

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const TermOrder& order);

/// Every S-polynomial of the basis reduces to zero, and so does every given input.
bool verify_certificate(const GroebnerBasis& g, const std::vector<MultiPoly>& inputs = {});
/// Monic, and no term of any element divisible by another element's leading monomial.
bool is_reduced(const GroebnerBasis& g);

/// Polynomial ideal held through its reduced Groebner basis.
class Ideal {
public:
    Ideal(Field field, std::size_t nvars, const std::vector<MultiPoly>& gens,
          const TermOrder& order = TermOrder::grevlex(), GroebnerTrace* trace = nullptr);

    static Ideal unit(Field field, std::size_t nvars, const TermOrder& order = TermOrder::grevlex());
    static Ideal zero(Field field, std::size_t nvars, const TermOrder& order = TermOrder::grevlex());

    const GroebnerBasis& basis() const { return basis_; }
    const std::vector<MultiPoly>& generators() const { return basis_.generators; }
    const Field& field() const { return basis_.field; }
    std::size_t nvars() const { return basis_.nvars; }
    const TermOrder& order() const { return basis_.order; }

    bool contains(const MultiPoly& f) const;
    bool contains(const Ideal& other) const;
    bool is_unit() const;
    bool is_zero() const { return basis_.generators.empty(); }

    bool operator==(const Ideal& other) const;

private:
    explicit Ideal(GroebnerBasis basis) : basis_(std::move(basis)) {}
    GroebnerBasis basis_;
};

Ideal ideal_sum(const Ideal& i, const Ideal& j, GroebnerTrace* trace = nullptr);
Ideal ideal_product(const Ideal& i, const Ideal& j, GroebnerTrace* trace = nullptr);
Ideal ideal_power(const Ideal& i, unsigned n, GroebnerTrace* trace = nullptr);

/// I cap J by eliminating t from t*I + (1 - t)*J.
Ideal intersect(const Ideal& i, const Ideal& j, GroebnerTrace* trace = nullptr);
/// I : J as the intersection of the single-generator quotients I : (g).
Ideal ideal_quotient(const Ideal& i, const Ideal& j, GroebnerTrace* trace = nullptr);
/// I : J^infinity, iterating quotients until the chain stabilizes.
Ideal saturation(const Ideal& i, const Ideal& j, GroebnerTrace* trace = nullptr);

/// Exact quotient f / g; throws std::invalid_argument when g does not divide f.
MultiPoly divide_exact(const MultiPoly& f, const MultiPoly& g, const TermOrder& order);

/// dim_k of the degree-d part of I (degree measured with the ideal's order weights),
/// for an ideal homogeneous for those weights.
std::size_t hilbert_function(const Ideal& i, int degree);

/// First degree in [0, max_degree] where the graded dimensions of I and J differ.
std::optional<int> first_hilbert_difference(const Ideal& i, const Ideal& j, int max_degree);

/// Homogeneous prime ideal of a point of P^{n-1}: Z_j - p_j Z_k for the chart index k.
Ideal point_ideal(const std::vector<Rational>& point, Field field = Field::rationals());

/// Intersection of the fat points I_i^{max(b_i, 0)}, kept as one Groebner basis so that
/// several degrees can be queried.
class FatPointScheme {
public:
    FatPointScheme(const std::vector<Ideal>& points, const std::vector<int>& powers,
                   GroebnerTrace* trace = nullptr);

    const Ideal& ideal() const { return ideal_; }
    /// dim of [cap_i F_{i b_i}]_a.
    std::size_t degree_dim(int a) const;

private:
    Ideal ideal_;
};

std::size_t hilbert_of_intersection(const std::vector<Ideal>& points, const std::vector<int>& powers, int a,
                                    GroebnerTrace* trace = nullptr);

/// Kernel of k[x,y,z] -> k[t], x -> t^a, y -> t^b, z -> t^c, held in weighted grevlex
/// for the weights (a, b, c).
struct MonomialCurveIdeal {
    std::array<int, 3> weights{};
    Ideal ideal;
};

MonomialCurveIdeal monomial_curve_ideal(int a, int b, int c, Field field = Field::rationals(),
                                        GroebnerTrace* trace = nullptr);

/// True if f(t^a, t^b, t^c) is identically zero.
bool vanishes_on_curve(const MultiPoly& f, const std::array<int, 3>& weights);

/// p^(n) = saturation of p^n at (x, y, z).
Ideal symbolic_power(const MonomialCurveIdeal& p, int n, GroebnerTrace* trace = nullptr);

struct ReesLevel {
    int n = 0;
    /// True when p^(n) is not generated by the products p^(i) p^(n-i), 0 < i < n.
    bool new_generator = false;
    /// Smallest weighted degree where p^(n) exceeds the product part (unset when equal or n == 1).
    std::optional<int> witness_degree;
    std::size_t generator_count = 0;
};

std::vector<ReesLevel> rees_generation_degrees(const MonomialCurveIdeal& p, int n_max,
                                               GroebnerTrace* trace = nullptr);

}  // namespace coxring
