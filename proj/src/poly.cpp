#include "coxring/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace coxring {

Field Field::prime(std::uint32_t p) {
    if (p < 2) {
        throw std::invalid_argument("field characteristic must be a prime >= 2");
    }
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d) {
        if (p % d == 0) {
            throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
        }
    }
    Field f;
    f.p_ = p;
    return f;
}

Rational Field::normalize(const Rational& q) const {
    if (p_ == 0) {
        Rational out(q);
        out.canonicalize();
        return out;
    }
    Integer p(p_);
    Integer num, den;
    mpz_mod(num.get_mpz_t(), q.get_num_mpz_t(), p.get_mpz_t());
    mpz_mod(den.get_mpz_t(), q.get_den_mpz_t(), p.get_mpz_t());
    if (den == 0) {
        throw std::domain_error("denominator vanishes in " + name());
    }
    if (den != 1) {
        Integer inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
        num *= inv;
        mpz_mod(num.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
    }
    return Rational(num);
}

Rational Field::inverse(const Rational& q) const {
    Rational n = normalize(q);
    if (n == 0) {
        throw std::domain_error("inverse of zero");
    }
    if (p_ == 0) {
        return 1 / n;
    }
    return normalize(Rational(1) / n);
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

Field Field::parse(const std::string& text) {
    if (text == "q" || text == "Q") {
        return rationals();
    }
    if (text.rfind("fp:", 0) == 0) {
        const std::string digits = text.substr(3);
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 9) {
            throw std::invalid_argument("malformed field '" + text + "'");
        }
        return prime(static_cast<std::uint32_t>(std::stoul(digits)));
    }
    throw std::invalid_argument("unknown field '" + text + "' (expected q or fp:<p>)");
}

std::size_t rank_over(const Field& field, std::vector<std::vector<Rational>> rows) {
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        const Rational inv = field.inverse(rows[rank][col]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) {
                continue;
            }
            const Rational factor = field.normalize(rows[r][col] * inv);
            for (std::size_t c = col; c < cols; ++c) {
                if (rows[rank][c] != 0) {
                    rows[r][c] = field.normalize(rows[r][c] - factor * rows[rank][c]);
                }
            }
        }
        ++rank;
    }
    return rank;
}

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

int weighted_degree(const Exponents& e, const std::vector<int>& weights) {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        d += e[i] * weights.at(i);
    }
    return d;
}

std::vector<std::string> default_variable_names(std::size_t nvars, const std::string& stem,
                                                std::size_t first_index) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < nvars; ++i) {
        names.push_back(stem + std::to_string(first_index + i));
    }
    return names;
}

MultiPoly MultiPoly::constant(Field field, std::size_t nvars, const Rational& c) {
    MultiPoly p(field, nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(Field field, std::size_t nvars, std::size_t index) {
    if (index >= nvars) {
        throw std::out_of_range("variable index out of range");
    }
    Exponents e(nvars, 0);
    e[index] = 1;
    return monomial(field, std::move(e));
}

MultiPoly MultiPoly::monomial(Field field, Exponents e, const Rational& c) {
    MultiPoly p(field, e.size());
    p.add_term(e, c);
    return p;
}

Rational MultiPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != nvars_) {
        throw std::invalid_argument("exponent vector length does not match variable count");
    }
    if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; })) {
        throw std::invalid_argument("negative exponent in polynomial term");
    }
    Rational v = field_.normalize(c);
    if (v == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, v);
    if (!inserted) {
        it->second = field_.normalize(it->second + v);
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        d = std::max(d, coxring::total_degree(e));
    }
    return d;
}

bool MultiPoly::is_homogeneous() const { return is_homogeneous(std::vector<int>(nvars_, 1)); }

bool MultiPoly::is_homogeneous(const std::vector<int>& weights) const {
    if (terms_.empty()) {
        return true;
    }
    const int d = weighted_degree(terms_.begin()->first, weights);
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return weighted_degree(t.first, weights) == d; });
}

void MultiPoly::check_compatible(const MultiPoly& other) const {
    if (!(field_ == other.field_)) {
        throw std::invalid_argument("field mismatch: " + field_.name() + " vs " + other.field_.name());
    }
    if (nvars_ != other.nvars_) {
        throw std::invalid_argument("variable count mismatch");
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(field_, nvars_);
    for (const auto& [e, c] : terms_) {
        out.terms_.emplace(e, field_.normalize(-c));
    }
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    check_compatible(other);
    for (const auto& [e, c] : other.terms_) {
        add_term(e, c);
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    check_compatible(other);
    for (const auto& [e, c] : other.terms_) {
        add_term(e, -c);
    }
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
    *this = *this * other;
    return *this;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly out(field_, nvars_);
    const Rational s = field_.normalize(c);
    if (s == 0) {
        return out;
    }
    for (const auto& [e, v] : terms_) {
        out.terms_.emplace(e, field_.normalize(v * s));
    }
    return out;
}

MultiPoly MultiPoly::pow(unsigned n) const {
    MultiPoly result = constant(field_, nvars_, 1);
    MultiPoly base = *this;
    while (n > 0) {
        if (n & 1U) {
            result *= base;
        }
        n >>= 1U;
        if (n > 0) {
            base *= base;
        }
    }
    return result;
}

MultiPoly MultiPoly::remapped(const std::vector<std::size_t>& map, std::size_t nvars) const {
    if (map.size() != nvars_) {
        throw std::invalid_argument("variable map has the wrong length");
    }
    MultiPoly out(field_, nvars);
    for (const auto& [e, c] : terms_) {
        Exponents f(nvars, 0);
        for (std::size_t i = 0; i < nvars_; ++i) {
            f.at(map[i]) += e[i];
        }
        out.add_term(f, c);
    }
    return out;
}

bool MultiPoly::operator==(const MultiPoly& other) const {
    return field_ == other.field_ && nvars_ == other.nvars_ && terms_ == other.terms_;
}

MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (!(a.field() == b.field())) {
        throw std::invalid_argument("field mismatch: " + a.field().name() + " vs " + b.field().name());
    }
    if (a.nvars() != b.nvars()) {
        throw std::invalid_argument("variable count mismatch");
    }
    MultiPoly out(a.field(), a.nvars());
    Exponents e(a.nvars());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

namespace {

void weighted_recurse(const std::vector<int>& weights, std::size_t index, int remaining, Exponents& current,
                      std::vector<Exponents>& out) {
    if (index + 1 == weights.size()) {
        if (remaining % weights[index] == 0) {
            current[index] = remaining / weights[index];
            out.push_back(current);
        }
        return;
    }
    for (int k = remaining / weights[index]; k >= 0; --k) {
        current[index] = k;
        weighted_recurse(weights, index + 1, remaining - k * weights[index], current, out);
    }
    current[index] = 0;
}

}  // namespace

std::vector<Exponents> monomials_of_weighted_degree(const std::vector<int>& weights, int d) {
    if (weights.empty()) {
        return d == 0 ? std::vector<Exponents>{Exponents{}} : std::vector<Exponents>{};
    }
    if (std::any_of(weights.begin(), weights.end(), [](int w) { return w <= 0; })) {
        throw std::invalid_argument("monomial weights must be positive");
    }
    std::vector<Exponents> out;
    if (d < 0) {
        return out;
    }
    Exponents current(weights.size(), 0);
    weighted_recurse(weights, 0, d, current, out);
    return out;
}

std::vector<Exponents> monomials_of_degree(std::size_t r, int d) {
    return monomials_of_weighted_degree(std::vector<int>(r + 1, 1), d);
}

MultiPoly partial_derivative(const MultiPoly& p, const Exponents& alpha) {
    if (!p.field().is_rational()) {
        throw std::domain_error("derivative conditions need characteristic 0; use the Groebner path over " +
                                p.field().name());
    }
    if (alpha.size() != p.nvars()) {
        throw std::invalid_argument("derivative multi-index has the wrong length");
    }
    MultiPoly out(p.field(), p.nvars());
    for (const auto& [e, c] : p.terms()) {
        Exponents f = e;
        Rational coeff = c;
        bool vanishes = false;
        for (std::size_t i = 0; i < e.size() && !vanishes; ++i) {
            if (alpha[i] > e[i]) {
                vanishes = true;
                break;
            }
            for (int k = 0; k < alpha[i]; ++k) {
                coeff *= e[i] - k;
            }
            f[i] -= alpha[i];
        }
        if (!vanishes) {
            out.add_term(f, coeff);
        }
    }
    return out;
}

Rational evaluate(const MultiPoly& p, const std::vector<Rational>& point) {
    if (point.size() != p.nvars()) {
        throw std::invalid_argument("evaluation point has the wrong length");
    }
    Rational total = 0;
    for (const auto& [e, c] : p.terms()) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size() && term != 0; ++i) {
            for (int k = 0; k < e[i]; ++k) {
                term *= point[i];
            }
        }
        total += term;
    }
    return p.field().normalize(total);
}

std::vector<Rational> coefficient_vector(const MultiPoly& p, const std::vector<Exponents>& monomials) {
    std::map<Exponents, std::size_t> index;
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        index.emplace(monomials[i], i);
    }
    std::vector<Rational> v(monomials.size());
    for (const auto& [e, c] : p.terms()) {
        auto it = index.find(e);
        if (it == index.end()) {
            throw std::invalid_argument("polynomial has a term outside the monomial list");
        }
        v[it->second] = c;
    }
    return v;
}

MultiPoly from_coefficients(Field field, const std::vector<Exponents>& monomials,
                            const std::vector<Rational>& coeffs) {
    if (monomials.empty()) {
        throw std::invalid_argument("empty monomial list");
    }
    MultiPoly p(field, monomials.front().size());
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        p.add_term(monomials[i], coeffs.at(i));
    }
    return p;
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

class PolyParser {
public:
    PolyParser(const std::string& text, Field field, const std::vector<std::string>& names)
        : text_(text), field_(field), names_(names) {}

    MultiPoly parse() {
        MultiPoly p = expression();
        skip_space();
        if (pos_ != text_.size()) {
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        }
        return p;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MultiPoly expression() {
        MultiPoly acc(field_, names_.size());
        bool negate = false;
        if (accept('-')) {
            negate = true;
        } else {
            accept('+');
        }
        while (true) {
            MultiPoly t = term();
            if (negate) {
                acc -= t;
            } else {
                acc += t;
            }
            if (accept('+')) {
                negate = false;
            } else if (accept('-')) {
                negate = true;
            } else {
                return acc;
            }
        }
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        while (accept('*')) {
            acc *= factor();
        }
        return acc;
    }

    MultiPoly factor() {
        MultiPoly base = atom();
        if (accept('^')) {
            skip_space();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            if (start == pos_) {
                throw ParseError("expected a nonnegative exponent", start);
            }
            if (pos_ - start > 4) {
                throw ParseError("exponent too large", start);
            }
            base = base.pow(static_cast<unsigned>(std::stoul(text_.substr(start, pos_ - start))));
        }
        return base;
    }

    MultiPoly atom() {
        skip_space();
        if (pos_ >= text_.size()) {
            throw ParseError("unexpected end of input", pos_);
        }
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly inner = expression();
            if (!accept(')')) {
                throw ParseError("expected ')'", pos_);
            }
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return number();
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            const std::string name = text_.substr(start, pos_ - start);
            auto it = std::find(names_.begin(), names_.end(), name);
            if (it == names_.end()) {
                throw ParseError("unknown variable '" + name + "'", start);
            }
            return MultiPoly::variable(field_, names_.size(), static_cast<std::size_t>(it - names_.begin()));
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    MultiPoly number() {
        const std::size_t start = pos_;
        auto digits = [&] {
            const std::size_t s = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            return text_.substr(s, pos_ - s);
        };
        Integer num(digits());
        Integer den(1);
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            skip_space();
            const std::size_t dstart = pos_;
            const std::string d = digits();
            if (d.empty()) {
                throw ParseError("expected a denominator", dstart);
            }
            den = Integer(d);
            if (den == 0) {
                throw ParseError("zero denominator", dstart);
            }
        }
        Rational q(num, den);
        q.canonicalize();
        try {
            return MultiPoly::constant(field_, names_.size(), q);
        } catch (const std::domain_error& e) {
            throw ParseError(e.what(), start);
        }
    }

    const std::string& text_;
    Field field_;
    const std::vector<std::string>& names_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(const std::string& text, Field field, const std::vector<std::string>& names) {
    return PolyParser(text, field, names).parse();
}

MultiPoly parse_poly(const std::string& text, Field field, std::size_t nvars) {
    return parse_poly(text, field, default_variable_names(nvars));
}

std::string format_poly(const MultiPoly& p, const std::vector<std::string>& names) {
    if (names.size() != p.nvars()) {
        throw std::invalid_argument("variable name count does not match the polynomial");
    }
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        const bool negative = c < 0;
        if (first) {
            out << (negative ? "-" : "");
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        const Rational mag = abs(c);
        const bool constant = total_degree(e) == 0;
        bool need_star = false;
        if (constant || mag != 1) {
            out << mag.get_str();
            need_star = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            out << (need_star ? "*" : "") << names[i];
            if (e[i] > 1) {
                out << '^' << e[i];
            }
            need_star = true;
        }
    }
    return out.str();
}

std::string format_poly(const MultiPoly& p) { return format_poly(p, default_variable_names(p.nvars())); }

MultiDegree MultiDegree::operator+(const MultiDegree& other) const {
    if (b.size() != other.b.size()) {
        throw std::invalid_argument("multidegree length mismatch");
    }
    MultiDegree out{a + other.a, b};
    for (std::size_t i = 0; i < b.size(); ++i) {
        out.b[i] += other.b[i];
    }
    return out;
}

MultiDegree MultiDegree::operator*(int n) const {
    MultiDegree out{a * n, b};
    for (int& x : out.b) {
        x *= n;
    }
    return out;
}

std::vector<int> MultiDegree::flat() const {
    std::vector<int> v{a};
    v.insert(v.end(), b.begin(), b.end());
    return v;
}

MultiDegree MultiDegree::from_flat(const std::vector<int>& v) {
    if (v.empty()) {
        throw std::invalid_argument("empty multidegree");
    }
    return MultiDegree{v[0], std::vector<int>(v.begin() + 1, v.end())};
}

MultiDegree LaurentTerm::multidegree() const { return MultiDegree{std::max(base.total_degree(), 0), tdegree}; }

LaurentTerm LaurentTerm::operator*(const LaurentTerm& other) const {
    if (tdegree.size() != other.tdegree.size()) {
        throw std::invalid_argument("T-degree length mismatch");
    }
    LaurentTerm out{base * other.base, tdegree};
    for (std::size_t i = 0; i < tdegree.size(); ++i) {
        out.tdegree[i] += other.tdegree[i];
    }
    return out;
}

std::string LaurentTerm::to_string() const {
    std::string s = format_poly(base);
    const bool bare = base.size() == 1;
    std::string t;
    for (std::size_t i = 0; i < tdegree.size(); ++i) {
        if (tdegree[i] == 0) {
            continue;
        }
        t += "*T" + std::to_string(i + 1);
        if (tdegree[i] != 1) {
            t += "^" + std::to_string(tdegree[i]);
        }
    }
    if (t.empty()) {
        return s;
    }
    if (s == "1") {
        return t.substr(1);
    }
    return (bare ? s : "(" + s + ")") + t;
}

}  // namespace coxring
