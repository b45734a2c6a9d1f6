#include "coxring/collinear.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace coxring {

CollinearConfig::CollinearConfig(std::size_t r, std::vector<MultiPoly> forms) : r_(r), forms_(std::move(forms)) {
    if (r < 2) {
        throw std::invalid_argument("collinear configurations need r >= 2");
    }
    if (forms_.empty()) {
        throw std::invalid_argument("at least one linear form is required");
    }
    for (const MultiPoly& f : forms_) {
        if (f.nvars() != r + 1 || !(f.field() == forms_.front().field())) {
            throw std::invalid_argument("linear forms must share a field and live in k[Z0..Zr]");
        }
        if (f.is_zero() || !f.is_homogeneous() || f.total_degree() != 1) {
            throw std::invalid_argument("'" + format_poly(f) + "' is not a nonzero linear form");
        }
        for (const auto& [e, c] : f.terms()) {
            if (e[0] + e[1] != 1) {
                throw std::invalid_argument("'" + format_poly(f) + "' involves variables other than Z0, Z1");
            }
        }
    }
    for (std::size_t i = 0; i < forms_.size(); ++i) {
        for (std::size_t j = i + 1; j < forms_.size(); ++j) {
            const auto [ai, bi] = form_coefficients(i);
            const auto [aj, bj] = form_coefficients(j);
            if (field().normalize(ai * bj - aj * bi) == 0) {
                throw std::invalid_argument("forms " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                            " are linearly dependent");
            }
        }
    }
}

std::pair<Rational, Rational> CollinearConfig::form_coefficients(std::size_t i) const {
    Exponents z0(r_ + 1, 0), z1(r_ + 1, 0);
    z0[0] = 1;
    z1[1] = 1;
    return {forms_.at(i).coefficient(z0), forms_.at(i).coefficient(z1)};
}

BlowupModel CollinearConfig::blowup_model() const {
    if (!field().is_rational()) {
        throw std::domain_error("the interpolation model needs rational coefficients");
    }
    std::vector<ProjectivePoint> points;
    for (std::size_t i = 0; i < m(); ++i) {
        const auto [alpha, beta] = form_coefficients(i);
        ProjectivePoint p(r_ + 1, Rational(0));
        p[0] = beta;
        p[1] = -alpha;
        points.push_back(std::move(p));
    }
    return BlowupModel(r_, std::move(points));
}

std::vector<Ideal> CollinearConfig::point_ideals() const {
    std::vector<Ideal> out;
    for (const MultiPoly& f : forms_) {
        std::vector<MultiPoly> gens{f};
        for (std::size_t j = 2; j <= r_; ++j) {
            gens.push_back(MultiPoly::variable(field(), r_ + 1, j));
        }
        out.emplace_back(field(), r_ + 1, gens);
    }
    return out;
}

namespace {

void check_shape(const CollinearConfig& cfg, const MultiDegree& d) {
    if (d.b.size() != cfg.m()) {
        throw std::invalid_argument("multidegree has " + std::to_string(d.b.size()) + " point entries for " +
                                    std::to_string(cfg.m()) + " forms");
    }
}

int clamped_sum(const MultiDegree& d, int j) {
    int s = 0;
    for (int b : d.b) {
        s += std::max(0, b - j);
    }
    return s;
}

// Binary form of degree n as coefficients of Z0^(n-k) Z1^k, k = 0..n.
using BinaryForm = std::vector<Rational>;

BinaryForm binary_product(const BinaryForm& a, const BinaryForm& b, const Field& field) {
    BinaryForm out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = field.normalize(out[i + j] + a[i] * b[j]);
        }
    }
    return out;
}

}  // namespace

std::size_t collinear_dim(const CollinearConfig& cfg, const MultiDegree& d) {
    check_shape(cfg, d);
    if (d.a < 0) {
        return 0;
    }
    const auto r = static_cast<std::int64_t>(cfg.r());
    std::int64_t total = 0;
    for (int j = 0; j <= d.a; ++j) {
        const std::int64_t free_part = std::max(0, d.a - j - clamped_sum(d, j) + 1);
        total += binomial(j + r - 2, r - 2) * free_part;
    }
    return static_cast<std::size_t>(total);
}

bool binary_form_divides(const std::vector<Rational>& divisor, const std::vector<Rational>& form,
                         const Field& field) {
    auto actual_degree = [&](const BinaryForm& f) {
        for (std::size_t k = f.size(); k > 0; --k) {
            if (field.normalize(f[k - 1]) != 0) {
                return static_cast<int>(k - 1);
            }
        }
        return -1;
    };
    const int g_deg = actual_degree(form);
    if (g_deg < 0) {
        return true;
    }
    const int f_deg = actual_degree(divisor);
    if (f_deg < 0 || divisor.size() > form.size()) {
        return false;
    }
    // Dehomogenize at Z0 = 1 (variable Z1): F | G iff f | g and ord_Z0(F) <= ord_Z0(G).
    const int f_ord = static_cast<int>(divisor.size()) - 1 - f_deg;
    const int g_ord = static_cast<int>(form.size()) - 1 - g_deg;
    if (f_ord > g_ord) {
        return false;
    }
    BinaryForm rem(form.begin(), form.begin() + g_deg + 1);
    const Rational lead_inv = field.inverse(divisor[static_cast<std::size_t>(f_deg)]);
    for (int k = g_deg; k >= f_deg; --k) {
        const Rational c = field.normalize(rem[static_cast<std::size_t>(k)] * lead_inv);
        if (c == 0) {
            continue;
        }
        for (int i = 0; i <= f_deg; ++i) {
            auto& slot = rem[static_cast<std::size_t>(k - f_deg + i)];
            slot = field.normalize(slot - c * divisor[static_cast<std::size_t>(i)]);
        }
    }
    return std::all_of(rem.begin(), rem.end(), [&](const Rational& x) { return field.normalize(x) == 0; });
}

bool membership(const CollinearConfig& cfg, const MultiPoly& g, const MultiDegree& d) {
    check_shape(cfg, d);
    if (g.nvars() != cfg.r() + 1 || !(g.field() == cfg.field())) {
        throw std::invalid_argument("polynomial does not live in k[Z0..Zr] over the configuration field");
    }
    if (!g.is_homogeneous()) {
        throw std::invalid_argument("membership needs a homogeneous polynomial");
    }
    if (g.is_zero()) {
        return true;
    }
    if (g.total_degree() != d.a) {
        return false;
    }
    const Field& field = cfg.field();
    std::vector<BinaryForm> linear;
    for (std::size_t i = 0; i < cfg.m(); ++i) {
        const auto [alpha, beta] = cfg.form_coefficients(i);
        linear.push_back({alpha, beta});
    }
    // Group by the exponent pattern c of Z2..Zr; g_c is a binary form of degree a - |c|.
    std::map<Exponents, BinaryForm> parts;
    for (const auto& [e, coeff] : g.terms()) {
        const Exponents c(e.begin() + 2, e.end());
        const int deg = e[0] + e[1];
        auto& part = parts.try_emplace(c, BinaryForm(static_cast<std::size_t>(deg) + 1)).first->second;
        part[static_cast<std::size_t>(e[1])] = coeff;
    }
    for (const auto& [c, part] : parts) {
        const int used = total_degree(c);
        BinaryForm divisor{Rational(1)};
        for (std::size_t i = 0; i < cfg.m(); ++i) {
            for (int k = 0; k < d.b[i] - used; ++k) {
                divisor = binary_product(divisor, linear[i], field);
            }
        }
        if (!binary_form_divides(divisor, part, field)) {
            return false;
        }
    }
    return true;
}

std::vector<LaurentTerm> generator_set(const CollinearConfig& cfg, bool reduced) {
    if (reduced && cfg.m() < 2) {
        throw std::invalid_argument("the reduced generator set needs m >= 2");
    }
    const std::size_t n = cfg.r() + 1;
    const std::size_t m = cfg.m();
    const Field& field = cfg.field();
    std::vector<LaurentTerm> gens;
    for (std::size_t j = reduced ? 2 : 0; j < n; ++j) {
        gens.push_back({MultiPoly::variable(field, n, j), std::vector<int>(m, 0)});
    }
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<int> t(m, 0);
        t[i] = -1;
        gens.push_back({MultiPoly::constant(field, n, 1), t});
    }
    for (std::size_t j = 2; j < n; ++j) {
        gens.push_back({MultiPoly::variable(field, n, j), std::vector<int>(m, 1)});
    }
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<int> t(m, 0);
        t[i] = 1;
        gens.push_back({cfg.forms()[i], t});
    }
    return gens;
}

namespace {

// Exponent vectors k over `count` slots with sum exactly `total`.
void compositions(std::size_t count, int total, std::vector<int>& current, std::size_t index,
                  std::vector<std::vector<int>>& out) {
    if (index + 1 == count) {
        current[index] = total;
        out.push_back(current);
        return;
    }
    for (int k = total; k >= 0; --k) {
        current[index] = k;
        compositions(count, total - k, current, index + 1, out);
    }
}

int exponent_bound(const MultiDegree& d, std::size_t m) {
    int bound = d.a + static_cast<int>(m);
    for (int b : d.b) {
        bound += std::abs(b);
    }
    return bound;
}

}  // namespace

std::vector<LaurentTerm> generator_products(const CollinearConfig& cfg, const MultiDegree& d, bool reduced) {
    check_shape(cfg, d);
    std::vector<LaurentTerm> out;
    if (d.a < 0) {
        return out;
    }
    const std::vector<LaurentTerm> gens = generator_set(cfg, reduced);
    const std::size_t m = cfg.m();
    const std::size_t n = cfg.r() + 1;
    const Field& field = cfg.field();
    const int bound = exponent_bound(d, m);

    // Generators of A-degree 1; the T_i^-1 exponents are then forced by the b-coordinates.
    std::vector<std::size_t> degree_one;
    for (std::size_t g = 0; g < gens.size(); ++g) {
        if (gens[g].base.total_degree() == 1) {
            degree_one.push_back(g);
        }
    }
    std::vector<std::vector<int>> choices;
    if (degree_one.empty()) {
        if (d.a == 0) {
            choices.emplace_back();
        }
    } else {
        std::vector<int> current(degree_one.size(), 0);
        compositions(degree_one.size(), d.a, current, 0, choices);
    }

    std::map<std::pair<std::size_t, int>, MultiPoly> power_cache;
    auto power = [&](std::size_t g, int k) -> const MultiPoly& {
        auto it = power_cache.find({g, k});
        if (it == power_cache.end()) {
            it = power_cache.emplace(std::make_pair(g, k), gens[g].base.pow(static_cast<unsigned>(k))).first;
        }
        return it->second;
    };

    for (const std::vector<int>& k : choices) {
        std::vector<int> tdeg(m, 0);
        for (std::size_t s = 0; s < degree_one.size(); ++s) {
            for (std::size_t i = 0; i < m; ++i) {
                tdeg[i] += k[s] * gens[degree_one[s]].tdegree[i];
            }
        }
        bool feasible = true;
        std::vector<int> inverse_exponents(m);
        for (std::size_t i = 0; i < m; ++i) {
            inverse_exponents[i] = tdeg[i] - d.b[i];
            feasible = feasible && inverse_exponents[i] >= 0 && inverse_exponents[i] <= bound;
        }
        if (!feasible) {
            continue;
        }
        MultiPoly base = MultiPoly::constant(field, n, 1);
        for (std::size_t s = 0; s < degree_one.size(); ++s) {
            if (k[s] > 0) {
                base *= power(degree_one[s], k[s]);
            }
        }
        out.push_back(LaurentTerm{std::move(base), d.b});
    }
    return out;
}

SpanCheck check_span(const CollinearConfig& cfg, const MultiDegree& d, bool reduced) {
    SpanCheck check{d, false, collinear_dim(cfg, d), 0, 0, exponent_bound(d, cfg.m())};
    const std::vector<LaurentTerm> products = generator_products(cfg, d, reduced);
    check.products = products.size();
    bool contained = true;
    std::vector<std::vector<Rational>> rows;
    if (d.a >= 0) {
        const std::vector<Exponents> columns = monomials_of_degree(cfg.r(), d.a);
        for (const LaurentTerm& t : products) {
            contained = contained && membership(cfg, t.base, d);
            rows.push_back(coefficient_vector(t.base, columns));
        }
    }
    check.span_dim = rank_over(cfg.field(), std::move(rows));
    check.spanned = contained && check.span_dim == check.piece_dim;
    return check;
}

GeneratorReport verify_generators(const CollinearConfig& cfg, int a_max, int b_max, bool reduced) {
    GeneratorReport report{reduced, {}};
    const std::size_t m = cfg.m();
    std::vector<int> b(m, -b_max);
    for (int a = 0; a <= a_max; ++a) {
        std::fill(b.begin(), b.end(), -b_max);
        while (true) {
            report.checks.push_back(check_span(cfg, MultiDegree{a, b}, reduced));
            std::size_t i = 0;
            while (i < m && b[i] == b_max) {
                b[i] = -b_max;
                ++i;
            }
            if (i == m) {
                break;
            }
            ++b[i];
        }
    }
    return report;
}

bool GeneratorReport::all_spanned() const {
    return std::all_of(checks.begin(), checks.end(), [](const SpanCheck& c) { return c.spanned; });
}

std::vector<MultiDegree> GeneratorReport::failures() const {
    std::vector<MultiDegree> out;
    for (const SpanCheck& c : checks) {
        if (!c.spanned) {
            out.push_back(c.multidegree);
        }
    }
    return out;
}

}  // namespace coxring
