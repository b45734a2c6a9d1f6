#pragma once

#include "coxring/blowup.hpp"
#include "coxring/groebner.hpp"
#include "coxring/poly.hpp"

#include <vector>

namespace coxring {

/// m points on the line Z2 = ... = Zr = 0 of P^r, point i being the zero of the linear
/// form f_i in Z0, Z1. Any two forms are linearly independent.
class CollinearConfig {
public:
    CollinearConfig(std::size_t r, std::vector<MultiPoly> forms);

    std::size_t r() const { return r_; }
    std::size_t m() const { return forms_.size(); }
    const std::vector<MultiPoly>& forms() const { return forms_; }
    const Field& field() const { return forms_.front().field(); }

    /// Coefficients (alpha, beta) of f_i = alpha Z0 + beta Z1.
    std::pair<Rational, Rational> form_coefficients(std::size_t i) const;

    /// The blow-up model with p_i = (beta_i : -alpha_i : 0 : ... : 0). Rationals only.
    BlowupModel blowup_model() const;
    /// Point ideals (f_i, Z2, ..., Zr).
    std::vector<Ideal> point_ideals() const;

private:
    std::size_t r_;
    std::vector<MultiPoly> forms_;
};

/// sum_{j=0}^{a} C(j+r-2, r-2) * max(0, a - j - sum_i max(0, b_i - j) + 1); zero when a < 0.
std::size_t collinear_dim(const CollinearConfig& cfg, const MultiDegree& d);

/// Coefficient-divisibility membership of a form g of degree d.a in the piece d.
/// Throws std::invalid_argument when g is not homogeneous.
bool membership(const CollinearConfig& cfg, const MultiPoly& g, const MultiDegree& d);

/// True when the binary form `divisor` divides `form`; both homogeneous in Z0, Z1.
bool binary_form_divides(const std::vector<Rational>& divisor, const std::vector<Rational>& form,
                         const Field& field);

/// Generators of the total coordinate ring: Z_j, T_i^-1, Z_j T_1...T_m (j >= 2), f_i T_i.
/// Reduced mode drops Z0 and Z1 (requires m >= 2).
std::vector<LaurentTerm> generator_set(const CollinearConfig& cfg, bool reduced);

struct SpanCheck {
    MultiDegree multidegree;
    bool spanned = false;
    std::size_t piece_dim = 0;
    std::size_t span_dim = 0;
    std::size_t products = 0;
    /// Per-generator exponent cap a + sum|b_i| + m used by the product search.
    int exponent_bound = 0;
};

struct GeneratorReport {
    bool reduced = false;
    std::vector<SpanCheck> checks;

    bool all_spanned() const;
    std::vector<MultiDegree> failures() const;
};

/// All monomials in the generators of multidegree exactly d.
std::vector<LaurentTerm> generator_products(const CollinearConfig& cfg, const MultiDegree& d, bool reduced);

SpanCheck check_span(const CollinearConfig& cfg, const MultiDegree& d, bool reduced);

/// Checks every multidegree with 0 <= a <= a_max and |b_i| <= b_max.
GeneratorReport verify_generators(const CollinearConfig& cfg, int a_max, int b_max, bool reduced);

}  // namespace coxring
