#include "coxring/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace coxring {

TermOrder TermOrder::grevlex(std::vector<int> weights) {
    return TermOrder{OrderKind::GradedReverseLex, 0, std::move(weights)};
}

TermOrder TermOrder::lex() { return TermOrder{OrderKind::Lex, 0, {}}; }

TermOrder TermOrder::elimination(std::size_t block, std::vector<int> weights) {
    return TermOrder{OrderKind::BlockElimination, block, std::move(weights)};
}

namespace {

int weight_of(const TermOrder& o, std::size_t i) { return o.weights.empty() ? 1 : o.weights.at(i); }

// Weighted grevlex restricted to variables [begin, end).
int grevlex_range(const TermOrder& o, const Exponents& a, const Exponents& b, std::size_t begin, std::size_t end) {
    long da = 0, db = 0;
    for (std::size_t i = begin; i < end; ++i) {
        da += static_cast<long>(a[i]) * weight_of(o, i);
        db += static_cast<long>(b[i]) * weight_of(o, i);
    }
    if (da != db) {
        return da < db ? -1 : 1;
    }
    for (std::size_t i = end; i > begin; --i) {
        if (a[i - 1] != b[i - 1]) {
            return a[i - 1] > b[i - 1] ? -1 : 1;
        }
    }
    return 0;
}

}  // namespace

int TermOrder::compare(const Exponents& a, const Exponents& b) const {
    switch (kind) {
    case OrderKind::Lex:
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) {
                return a[i] < b[i] ? -1 : 1;
            }
        }
        return 0;
    case OrderKind::GradedReverseLex:
        return grevlex_range(*this, a, b, 0, a.size());
    case OrderKind::BlockElimination: {
        const std::size_t k = std::min(block, a.size());
        const int first = grevlex_range(*this, a, b, 0, k);
        return first != 0 ? first : grevlex_range(*this, a, b, k, a.size());
    }
    }
    return 0;
}

int TermOrder::degree(const Exponents& e) const {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        d += e[i] * weight_of(*this, i);
    }
    return d;
}

std::string TermOrder::name() const {
    std::string w;
    if (!weights.empty()) {
        w = "(";
        for (std::size_t i = 0; i < weights.size(); ++i) {
            w += (i ? "," : "") + std::to_string(weights[i]);
        }
        w += ")";
    }
    switch (kind) {
    case OrderKind::Lex:
        return "lex";
    case OrderKind::GradedReverseLex:
        return "grevlex" + w;
    case OrderKind::BlockElimination:
        return "block:" + std::to_string(block) + w;
    }
    return "";
}

namespace {

struct Term {
    Exponents exp;
    Rational coeff;
};

// Terms sorted by decreasing monomial order; leading term first.
using SortedTerms = std::vector<Term>;

struct Greater {
    const TermOrder* order;
    bool operator()(const Exponents& a, const Exponents& b) const { return order->compare(a, b) > 0; }
};

using WorkPoly = std::map<Exponents, Rational, Greater>;

SortedTerms sorted_terms(const MultiPoly& f, const TermOrder& order) {
    SortedTerms out;
    out.reserve(f.size());
    for (const auto& [e, c] : f.terms()) {
        out.push_back(Term{e, c});
    }
    std::sort(out.begin(), out.end(),
              [&](const Term& a, const Term& b) { return order.compare(a.exp, b.exp) > 0; });
    return out;
}

bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
    }
    return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = std::max(a[i], b[i]);
    }
    return out;
}

bool coprime(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > 0 && b[i] > 0) {
            return false;
        }
    }
    return true;
}

// Basis element prepared for reduction: monic, terms sorted.
struct Reducer {
    SortedTerms terms;
    const Exponents& lead() const { return terms.front().exp; }
};

Reducer make_reducer(const MultiPoly& f, const TermOrder& order) {
    Reducer r{sorted_terms(f, order)};
    const Rational inv = f.field().inverse(r.terms.front().coeff);
    for (Term& t : r.terms) {
        t.coeff = f.field().normalize(t.coeff * inv);
    }
    return r;
}

void subtract_multiple(WorkPoly& work, const Reducer& g, const Exponents& shift, const Rational& c,
                       const Field& field) {
    Exponents e(shift.size());
    for (const Term& t : g.terms) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] = t.exp[i] + shift[i];
        }
        auto [it, inserted] = work.try_emplace(e, 0);
        it->second = field.normalize(it->second - c * t.coeff);
        if (it->second == 0) {
            work.erase(it);
        }
    }
}

// Full reduction of f against the reducers; returns the remainder as a MultiPoly.
MultiPoly reduce_full(const MultiPoly& f, const std::vector<Reducer>& basis, const TermOrder& order,
                      const std::vector<bool>* active = nullptr) {
    WorkPoly work{Greater{&order}};
    for (const auto& [e, c] : f.terms()) {
        work.emplace(e, c);
    }
    MultiPoly remainder(f.field(), f.nvars());
    Exponents shift(f.nvars());
    while (!work.empty()) {
        auto lead = work.begin();
        const Reducer* divisor = nullptr;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if ((active == nullptr || (*active)[k]) && divides(basis[k].lead(), lead->first)) {
                divisor = &basis[k];
                break;
            }
        }
        if (divisor == nullptr) {
            remainder.add_term(lead->first, lead->second);
            work.erase(lead);
            continue;
        }
        for (std::size_t i = 0; i < shift.size(); ++i) {
            shift[i] = lead->first[i] - divisor->lead()[i];
        }
        const Rational c = lead->second;
        subtract_multiple(work, *divisor, shift, c, f.field());
    }
    return remainder;
}

MultiPoly s_poly_of(const Reducer& f, const Reducer& g, const Field& field, std::size_t nvars) {
    const Exponents l = lcm(f.lead(), g.lead());
    MultiPoly out(field, nvars);
    Exponents e(nvars);
    for (const Term& t : f.terms) {
        for (std::size_t i = 0; i < nvars; ++i) {
            e[i] = t.exp[i] + l[i] - f.lead()[i];
        }
        out.add_term(e, t.coeff);
    }
    for (const Term& t : g.terms) {
        for (std::size_t i = 0; i < nvars; ++i) {
            e[i] = t.exp[i] + l[i] - g.lead()[i];
        }
        out.add_term(e, -t.coeff);
    }
    return out;
}

void check_uniform(const std::vector<MultiPoly>& gens, const Field& field, std::size_t nvars) {
    for (const MultiPoly& g : gens) {
        if (!(g.field() == field) || g.nvars() != nvars) {
            throw std::invalid_argument("generators must share one field and variable count");
        }
    }
}

GroebnerBasis reduce_basis(const std::vector<Reducer>& gens, const TermOrder& order, const Field& field,
                           std::size_t nvars) {
    // Minimalize: drop elements whose leading monomial is divisible by another's (first wins on ties).
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (i == j || !divides(gens[j].lead(), gens[i].lead())) {
                continue;
            }
            redundant = gens[j].lead() != gens[i].lead() || j < i;
        }
        if (!redundant) {
            keep.push_back(i);
        }
    }
    std::vector<Reducer> minimal;
    for (std::size_t i : keep) {
        minimal.push_back(gens[i]);
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const Reducer& a, const Reducer& b) { return order.compare(a.lead(), b.lead()) < 0; });

    GroebnerBasis out{field, nvars, order, {}, true};
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<bool> active(minimal.size(), true);
        active[i] = false;
        MultiPoly tail(field, nvars);
        for (std::size_t k = 1; k < minimal[i].terms.size(); ++k) {
            tail.add_term(minimal[i].terms[k].exp, minimal[i].terms[k].coeff);
        }
        MultiPoly g = reduce_full(tail, minimal, order, &active);
        g.add_term(minimal[i].lead(), 1);
        out.generators.push_back(std::move(g));
    }
    return out;
}

}  // namespace

Exponents leading_monomial(const MultiPoly& f, const TermOrder& order) {
    if (f.is_zero()) {
        throw std::invalid_argument("zero polynomial has no leading monomial");
    }
    auto best = f.terms().begin();
    for (auto it = f.terms().begin(); it != f.terms().end(); ++it) {
        if (order.compare(it->first, best->first) > 0) {
            best = it;
        }
    }
    return best->first;
}

Rational leading_coefficient(const MultiPoly& f, const TermOrder& order) {
    return f.coefficient(leading_monomial(f, order));
}

GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, const TermOrder& order, GroebnerTrace* trace) {
    std::vector<MultiPoly> nonzero;
    for (const MultiPoly& g : gens) {
        if (!g.is_zero()) {
            nonzero.push_back(g);
        }
    }
    if (nonzero.empty()) {
        if (gens.empty()) {
            throw std::invalid_argument("buchberger needs at least one generator to fix the ring");
        }
        GroebnerBasis empty{gens.front().field(), gens.front().nvars(), order, {}, true};
        if (trace) {
            trace->bases.push_back(empty);
        }
        return empty;
    }
    const Field field = nonzero.front().field();
    const std::size_t nvars = nonzero.front().nvars();
    check_uniform(nonzero, field, nvars);
    if (!order.weights.empty() && order.weights.size() != nvars) {
        throw std::invalid_argument("order weights do not match the variable count");
    }

    std::vector<Reducer> basis;
    for (const MultiPoly& g : nonzero) {
        basis.push_back(make_reducer(g, order));
    }

    struct Pair {
        Exponents lcm;
        std::size_t i, j;
    };
    auto pair_less = [&order](const Pair& a, const Pair& b) {
        const int c = order.compare(a.lcm, b.lcm);
        if (c != 0) {
            return c < 0;
        }
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    };
    std::set<Pair, decltype(pair_less)> queue(pair_less);
    std::set<std::pair<std::size_t, std::size_t>> pending;
    auto add_pairs_for = [&](std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) {
            queue.insert(Pair{lcm(basis[i].lead(), basis[n].lead()), i, n});
            pending.emplace(i, n);
        }
    };
    for (std::size_t n = 1; n < basis.size(); ++n) {
        add_pairs_for(n);
    }

    auto is_pending = [&](std::size_t a, std::size_t b) {
        return pending.count({std::min(a, b), std::max(a, b)}) > 0;
    };

    while (!queue.empty()) {
        const Pair p = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({p.i, p.j});

        if (coprime(basis[p.i].lead(), basis[p.j].lead())) {
            continue;
        }
        bool chain = false;
        for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
            if (k == p.i || k == p.j) {
                continue;
            }
            chain = divides(basis[k].lead(), p.lcm) && !is_pending(p.i, k) && !is_pending(p.j, k);
        }
        if (chain) {
            continue;
        }
        MultiPoly h = reduce_full(s_poly_of(basis[p.i], basis[p.j], field, nvars), basis, order);
        if (h.is_zero()) {
            continue;
        }
        basis.push_back(make_reducer(h, order));
        add_pairs_for(basis.size() - 1);
    }

    GroebnerBasis out = reduce_basis(basis, order, field, nvars);
    if (trace) {
        trace->bases.push_back(out);
    }
    return out;
}

MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& g) {
    if (!(f.field() == g.field) || f.nvars() != g.nvars) {
        throw std::invalid_argument("polynomial does not live in the basis ring");
    }
    std::vector<Reducer> reducers;
    for (const MultiPoly& p : g.generators) {
        reducers.push_back(make_reducer(p, g.order));
    }
    return reduce_full(f, reducers, g.order);
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const TermOrder& order) {
    return s_poly_of(make_reducer(f, order), make_reducer(g, order), f.field(), f.nvars());
}

bool verify_certificate(const GroebnerBasis& g, const std::vector<MultiPoly>& inputs) {
    std::vector<Reducer> reducers;
    for (const MultiPoly& p : g.generators) {
        if (p.is_zero()) {
            return false;
        }
        reducers.push_back(make_reducer(p, g.order));
    }
    for (std::size_t i = 0; i < reducers.size(); ++i) {
        for (std::size_t j = i + 1; j < reducers.size(); ++j) {
            if (!reduce_full(s_poly_of(reducers[i], reducers[j], g.field, g.nvars), reducers, g.order).is_zero()) {
                return false;
            }
        }
    }
    for (const MultiPoly& f : inputs) {
        if (!reduce_full(f, reducers, g.order).is_zero()) {
            return false;
        }
    }
    return true;
}

bool is_reduced(const GroebnerBasis& g) {
    std::vector<Exponents> leads;
    for (const MultiPoly& p : g.generators) {
        if (p.is_zero() || leading_coefficient(p, g.order) != 1) {
            return false;
        }
        leads.push_back(leading_monomial(p, g.order));
    }
    for (std::size_t i = 0; i < g.generators.size(); ++i) {
        for (const auto& [e, c] : g.generators[i].terms()) {
            for (std::size_t j = 0; j < leads.size(); ++j) {
                if (j != i && divides(leads[j], e)) {
                    return false;
                }
            }
        }
    }
    return true;
}

Ideal::Ideal(Field field, std::size_t nvars, const std::vector<MultiPoly>& gens, const TermOrder& order,
             GroebnerTrace* trace) {
    check_uniform(gens, field, nvars);
    std::vector<MultiPoly> all = gens;
    if (all.empty()) {
        all.emplace_back(field, nvars);
    }
    basis_ = buchberger(all, order, trace);
}

Ideal Ideal::unit(Field field, std::size_t nvars, const TermOrder& order) {
    return Ideal(GroebnerBasis{field, nvars, order, {MultiPoly::constant(field, nvars, 1)}, true});
}

Ideal Ideal::zero(Field field, std::size_t nvars, const TermOrder& order) {
    return Ideal(GroebnerBasis{field, nvars, order, {}, true});
}

bool Ideal::contains(const MultiPoly& f) const { return normal_form(f, basis_).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
    return std::all_of(other.generators().begin(), other.generators().end(),
                       [&](const MultiPoly& f) { return contains(f); });
}

bool Ideal::is_unit() const {
    return basis_.generators.size() == 1 && basis_.generators.front().total_degree() == 0;
}

bool Ideal::operator==(const Ideal& other) const {
    if (basis_.order == other.basis_.order) {
        return basis_.generators == other.basis_.generators && basis_.field == other.basis_.field &&
               basis_.nvars == other.basis_.nvars;
    }
    return contains(other) && other.contains(*this);
}

namespace {

void check_same_ring(const Ideal& i, const Ideal& j) {
    if (!(i.field() == j.field()) || i.nvars() != j.nvars()) {
        throw std::invalid_argument("ideals live in different rings");
    }
}

}  // namespace

Ideal ideal_sum(const Ideal& i, const Ideal& j, GroebnerTrace* trace) {
    check_same_ring(i, j);
    std::vector<MultiPoly> gens = i.generators();
    gens.insert(gens.end(), j.generators().begin(), j.generators().end());
    return Ideal(i.field(), i.nvars(), gens, i.order(), trace);
}

Ideal ideal_product(const Ideal& i, const Ideal& j, GroebnerTrace* trace) {
    check_same_ring(i, j);
    std::vector<MultiPoly> gens;
    for (const MultiPoly& f : i.generators()) {
        for (const MultiPoly& g : j.generators()) {
            gens.push_back(f * g);
        }
    }
    return Ideal(i.field(), i.nvars(), gens, i.order(), trace);
}

Ideal ideal_power(const Ideal& i, unsigned n, GroebnerTrace* trace) {
    if (n == 0) {
        return Ideal::unit(i.field(), i.nvars(), i.order());
    }
    Ideal acc = i;
    for (unsigned k = 1; k < n; ++k) {
        acc = ideal_product(acc, i, trace);
    }
    return acc;
}

Ideal intersect(const Ideal& i, const Ideal& j, GroebnerTrace* trace) {
    check_same_ring(i, j);
    if (i.is_zero() || j.is_zero()) {
        return Ideal::zero(i.field(), i.nvars(), i.order());
    }
    if (i.is_unit()) {
        return j;
    }
    if (j.is_unit()) {
        return i;
    }
    const std::size_t n = i.nvars();
    const Field field = i.field();
    std::vector<std::size_t> shift(n);
    for (std::size_t k = 0; k < n; ++k) {
        shift[k] = k + 1;
    }
    std::vector<int> weights{1};
    for (std::size_t k = 0; k < n; ++k) {
        weights.push_back(i.order().weights.empty() ? 1 : i.order().weights[k]);
    }
    const MultiPoly t = MultiPoly::variable(field, n + 1, 0);
    const MultiPoly one_minus_t = MultiPoly::constant(field, n + 1, 1) - t;
    std::vector<MultiPoly> gens;
    for (const MultiPoly& f : i.generators()) {
        gens.push_back(t * f.remapped(shift, n + 1));
    }
    for (const MultiPoly& g : j.generators()) {
        gens.push_back(one_minus_t * g.remapped(shift, n + 1));
    }
    const GroebnerBasis gb = buchberger(gens, TermOrder::elimination(1, weights), trace);

    std::vector<MultiPoly> kept;
    for (const MultiPoly& g : gb.generators) {
        const bool t_free = std::all_of(g.terms().begin(), g.terms().end(),
                                        [](const auto& term) { return term.first[0] == 0; });
        if (!t_free) {
            continue;
        }
        MultiPoly h(field, n);
        for (const auto& [e, c] : g.terms()) {
            h.add_term(Exponents(e.begin() + 1, e.end()), c);
        }
        kept.push_back(std::move(h));
    }
    return Ideal(field, n, kept, i.order(), trace);
}

MultiPoly divide_exact(const MultiPoly& f, const MultiPoly& g, const TermOrder& order) {
    if (g.is_zero()) {
        throw std::invalid_argument("division by zero polynomial");
    }
    const Reducer divisor = make_reducer(g, order);
    const Rational lc_inv = g.field().inverse(leading_coefficient(g, order));
    WorkPoly work{Greater{&order}};
    for (const auto& [e, c] : f.terms()) {
        work.emplace(e, c);
    }
    MultiPoly quotient(f.field(), f.nvars());
    Exponents shift(f.nvars());
    while (!work.empty()) {
        auto lead = work.begin();
        if (!divides(divisor.lead(), lead->first)) {
            throw std::invalid_argument("divisor does not divide the polynomial");
        }
        for (std::size_t k = 0; k < shift.size(); ++k) {
            shift[k] = lead->first[k] - divisor.lead()[k];
        }
        const Rational c = lead->second;
        quotient.add_term(shift, c * lc_inv);
        subtract_multiple(work, divisor, shift, c, f.field());
    }
    return quotient;
}

Ideal ideal_quotient(const Ideal& i, const Ideal& j, GroebnerTrace* trace) {
    check_same_ring(i, j);
    std::optional<Ideal> acc;
    for (const MultiPoly& g : j.generators()) {
        const Ideal principal(i.field(), i.nvars(), {g}, i.order(), trace);
        const Ideal meet = intersect(i, principal, trace);
        std::vector<MultiPoly> quotients;
        for (const MultiPoly& h : meet.generators()) {
            quotients.push_back(divide_exact(h, g, i.order()));
        }
        Ideal q(i.field(), i.nvars(), quotients, i.order(), trace);
        acc = acc ? intersect(*acc, q, trace) : q;
    }
    return acc ? *acc : Ideal::unit(i.field(), i.nvars(), i.order());
}

Ideal saturation(const Ideal& i, const Ideal& j, GroebnerTrace* trace) {
    Ideal current = i;
    while (true) {
        Ideal next = ideal_quotient(current, j, trace);
        if (next == current) {
            return current;
        }
        current = std::move(next);
    }
}

std::size_t hilbert_function(const Ideal& i, int degree) {
    std::vector<int> weights = i.order().weights;
    if (weights.empty()) {
        weights.assign(i.nvars(), 1);
    }
    const std::vector<Exponents> monos = monomials_of_weighted_degree(weights, degree);
    if (monos.empty()) {
        return 0;
    }
    std::map<Exponents, std::size_t> column;
    std::vector<MultiPoly> forms;
    for (const Exponents& e : monos) {
        MultiPoly nf = normal_form(MultiPoly::monomial(i.field(), e), i.basis());
        for (const auto& [m, c] : nf.terms()) {
            column.try_emplace(m, column.size());
        }
        forms.push_back(std::move(nf));
    }
    if (column.empty()) {
        return monos.size();
    }
    // Rank of the normal-form coefficient matrix is dim (B/I)_degree.
    std::vector<std::vector<Rational>> rows;
    for (const MultiPoly& f : forms) {
        std::vector<Rational> row(column.size());
        for (const auto& [e, c] : f.terms()) {
            row[column.at(e)] = c;
        }
        rows.push_back(std::move(row));
    }
    const std::size_t quotient_dim = rank_over(i.field(), std::move(rows));
    return monos.size() - quotient_dim;
}

std::optional<int> first_hilbert_difference(const Ideal& i, const Ideal& j, int max_degree) {
    for (int d = 0; d <= max_degree; ++d) {
        if (hilbert_function(i, d) != hilbert_function(j, d)) {
            return d;
        }
    }
    return std::nullopt;
}

Ideal point_ideal(const std::vector<Rational>& point, Field field) {
    std::vector<Rational> p;
    for (const Rational& x : point) {
        p.push_back(field.normalize(x));
    }
    const auto chart = std::find_if(p.begin(), p.end(), [](const Rational& x) { return x != 0; });
    if (chart == p.end()) {
        throw std::invalid_argument("the zero vector is not a projective point");
    }
    const std::size_t k = static_cast<std::size_t>(chart - p.begin());
    const Rational inv = field.inverse(p[k]);
    const std::size_t n = p.size();
    std::vector<MultiPoly> gens;
    for (std::size_t j = 0; j < n; ++j) {
        if (j == k) {
            continue;
        }
        gens.push_back(MultiPoly::variable(field, n, j) - MultiPoly::variable(field, n, k).scaled(p[j] * inv));
    }
    if (gens.empty()) {
        return Ideal::zero(field, n);
    }
    return Ideal(field, n, gens);
}

FatPointScheme::FatPointScheme(const std::vector<Ideal>& points, const std::vector<int>& powers,
                               GroebnerTrace* trace)
    : ideal_(points.empty() ? throw std::invalid_argument("fat point scheme needs the ambient ring from a point")
                            : Ideal::unit(points.front().field(), points.front().nvars())) {
    if (points.size() != powers.size()) {
        throw std::invalid_argument("one power per point required");
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (powers[i] <= 0) {
            continue;
        }
        ideal_ = intersect(ideal_, ideal_power(points[i], static_cast<unsigned>(powers[i]), trace), trace);
    }
}

std::size_t FatPointScheme::degree_dim(int a) const {
    if (a < 0) {
        return 0;
    }
    return hilbert_function(ideal_, a);
}

std::size_t hilbert_of_intersection(const std::vector<Ideal>& points, const std::vector<int>& powers, int a,
                                    GroebnerTrace* trace) {
    return FatPointScheme(points, powers, trace).degree_dim(a);
}

MonomialCurveIdeal monomial_curve_ideal(int a, int b, int c, Field field, GroebnerTrace* trace) {
    if (a < 1 || b < 1 || c < 1) {
        throw std::invalid_argument("monomial curve weights must be positive");
    }
    const std::size_t n = 4;  // t, x, y, z
    auto var = [&](std::size_t k) { return MultiPoly::variable(field, n, k); };
    const MultiPoly t = var(0);
    const std::vector<MultiPoly> gens{var(1) - t.pow(static_cast<unsigned>(a)),
                                      var(2) - t.pow(static_cast<unsigned>(b)),
                                      var(3) - t.pow(static_cast<unsigned>(c))};
    const GroebnerBasis gb = buchberger(gens, TermOrder::elimination(1, {1, a, b, c}), trace);
    std::vector<MultiPoly> kept;
    for (const MultiPoly& g : gb.generators) {
        if (std::any_of(g.terms().begin(), g.terms().end(), [](const auto& term) { return term.first[0] != 0; })) {
            continue;
        }
        MultiPoly h(field, 3);
        for (const auto& [e, coeff] : g.terms()) {
            h.add_term(Exponents(e.begin() + 1, e.end()), coeff);
        }
        kept.push_back(std::move(h));
    }
    return MonomialCurveIdeal{{a, b, c}, Ideal(field, 3, kept, TermOrder::grevlex({a, b, c}), trace)};
}

bool vanishes_on_curve(const MultiPoly& f, const std::array<int, 3>& weights) {
    if (f.nvars() != 3) {
        throw std::invalid_argument("curve substitution expects three variables");
    }
    std::map<int, Rational> by_power;
    for (const auto& [e, c] : f.terms()) {
        by_power[weighted_degree(e, {weights[0], weights[1], weights[2]})] += c;
    }
    return std::all_of(by_power.begin(), by_power.end(),
                       [&](const auto& kv) { return f.field().normalize(kv.second) == 0; });
}

Ideal symbolic_power(const MonomialCurveIdeal& p, int n, GroebnerTrace* trace) {
    if (n < 1) {
        throw std::invalid_argument("symbolic power exponent must be at least 1");
    }
    const Ideal& prime = p.ideal;
    const Field field = prime.field();
    const Ideal maximal(field, 3,
                        {MultiPoly::variable(field, 3, 0), MultiPoly::variable(field, 3, 1),
                         MultiPoly::variable(field, 3, 2)},
                        prime.order(), trace);
    return saturation(ideal_power(prime, static_cast<unsigned>(n), trace), maximal, trace);
}

std::vector<ReesLevel> rees_generation_degrees(const MonomialCurveIdeal& p, int n_max, GroebnerTrace* trace) {
    std::vector<Ideal> powers;
    std::vector<ReesLevel> out;
    for (int n = 1; n <= n_max; ++n) {
        powers.push_back(symbolic_power(p, n, trace));
        const Ideal& current = powers.back();
        ReesLevel level{n, n == 1, std::nullopt, current.generators().size()};
        if (n > 1) {
            std::optional<Ideal> products;
            for (int i = 1; 2 * i <= n; ++i) {
                Ideal prod = ideal_product(powers[static_cast<std::size_t>(i - 1)],
                                           powers[static_cast<std::size_t>(n - i - 1)], trace);
                products = products ? ideal_sum(*products, prod, trace) : prod;
            }
            for (const MultiPoly& g : current.generators()) {
                if (products->contains(g)) {
                    continue;
                }
                level.new_generator = true;
                const int deg = current.order().degree(leading_monomial(g, current.order()));
                if (!level.witness_degree || deg < *level.witness_degree) {
                    level.witness_degree = deg;
                }
            }
        }
        out.push_back(level);
    }
    return out;
}

}  // namespace coxring
