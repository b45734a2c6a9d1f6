#include "coxring/toric.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace coxring {

namespace {

IntMatrix int_matrix(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = Integer(static_cast<long>(rows[i][j]));
        }
    }
    return m;
}

std::size_t rows_rank(const std::vector<IntVector>& rows, std::size_t cols) {
    return rank(to_rational(int_matrix(rows, cols)));
}

long long to_ll(const Integer& z) {
    if (!z.fits_slong_p()) {
        throw std::overflow_error("integer does not fit in 64 bits");
    }
    return z.get_si();
}

// Inverse of a unimodular integer matrix.
IntMatrix unimodular_inverse(const IntMatrix& m) {
    const std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            aug(i, j) = Rational(m(i, j));
        }
        aug(i, n + i) = 1;
    }
    const RatMatrix r = rref(aug).matrix;
    IntMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (r(i, i) != 1) {
            throw std::logic_error("matrix is not invertible");
        }
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& q = r(i, n + j);
            if (q.get_den() != 1) {
                throw std::logic_error("matrix is not unimodular");
            }
            inv(i, j) = q.get_num();
        }
    }
    return inv;
}

void column_axpy(IntMatrix& m, std::size_t target, std::size_t source, const Integer& q) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        m(i, target) += q * m(i, source);
    }
}

void negate_column(IntMatrix& m, std::size_t c) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        m(i, c) = -m(i, c);
    }
}

// Column Hermite normal form: returns unimodular W with q * W in column echelon form,
// positive pivots, and entries left of each pivot reduced into [0, pivot).
IntMatrix column_hermite_transform(IntMatrix q) {
    const std::size_t s = q.cols();
    IntMatrix w = IntMatrix::identity(s);
    std::size_t pivot_col = 0;
    for (std::size_t row = 0; row < q.rows() && pivot_col < s; ++row) {
        while (true) {
            std::size_t best = s;
            for (std::size_t c = pivot_col; c < s; ++c) {
                if (q(row, c) != 0 && (best == s || abs(q(row, c)) < abs(q(row, best)))) {
                    best = c;
                }
            }
            if (best == s) {
                break;
            }
            q.swap_cols(pivot_col, best);
            w.swap_cols(pivot_col, best);
            bool clean = true;
            for (std::size_t c = pivot_col + 1; c < s; ++c) {
                if (q(row, c) == 0) {
                    continue;
                }
                Integer f;
                mpz_fdiv_q(f.get_mpz_t(), q(row, c).get_mpz_t(), q(row, pivot_col).get_mpz_t());
                column_axpy(q, c, pivot_col, -f);
                column_axpy(w, c, pivot_col, -f);
                clean = clean && q(row, c) == 0;
            }
            if (clean) {
                break;
            }
        }
        if (q(row, pivot_col) == 0) {
            continue;
        }
        if (q(row, pivot_col) < 0) {
            negate_column(q, pivot_col);
            negate_column(w, pivot_col);
        }
        for (std::size_t c = 0; c < pivot_col; ++c) {
            Integer f;
            mpz_fdiv_q(f.get_mpz_t(), q(row, c).get_mpz_t(), q(row, pivot_col).get_mpz_t());
            column_axpy(q, c, pivot_col, -f);
            column_axpy(w, c, pivot_col, -f);
        }
        ++pivot_col;
    }
    return w;
}

Rational rat(long long x) { return Rational(static_cast<long>(x)); }

int angular_half(const IntVector& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; }

long long cross(const IntVector& a, const IntVector& b) { return a[0] * b[1] - a[1] * b[0]; }

}  // namespace

Fan::Fan(std::size_t d, std::vector<IntVector> rays, std::vector<std::vector<std::size_t>> max_cones)
    : d_(d), rays_(std::move(rays)), max_cones_(std::move(max_cones)) {
    if (d == 0) {
        throw std::invalid_argument("fan dimension must be positive");
    }
    for (std::size_t i = 0; i < rays_.size(); ++i) {
        const IntVector& v = rays_[i];
        if (v.size() != d) {
            throw std::invalid_argument("ray " + std::to_string(i) + " has the wrong length");
        }
        long long g = 0;
        for (long long x : v) {
            g = std::gcd(g, x);
        }
        if (g != 1) {
            throw std::invalid_argument("ray " + std::to_string(i) + " is not primitive");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (rays_[j] == v) {
                throw std::invalid_argument("rays " + std::to_string(j) + " and " + std::to_string(i) +
                                            " coincide");
            }
        }
    }
    for (const auto& cone : max_cones_) {
        std::set<std::size_t> seen;
        std::vector<IntVector> generators;
        for (std::size_t idx : cone) {
            if (idx >= rays_.size() || !seen.insert(idx).second) {
                throw std::invalid_argument("cone refers to an invalid or repeated ray index");
            }
            generators.push_back(rays_[idx]);
        }
        if (cone.empty() || rows_rank(generators, d) != cone.size()) {
            throw std::invalid_argument("maximal cone is not simplicial");
        }
    }
}

bool Fan::is_smooth() const {
    for (const auto& cone : max_cones_) {
        std::vector<IntVector> generators;
        for (std::size_t idx : cone) {
            generators.push_back(rays_[idx]);
        }
        const SmithDecomposition snf = smith_normal_form(int_matrix(generators, d_));
        for (const Integer& x : snf.diagonal()) {
            if (x != 1) {
                return false;
            }
        }
    }
    return true;
}

bool Fan::is_complete() const {
    if (d_ >= 3) {
        return true;
    }
    std::set<std::set<std::size_t>> cones;
    for (const auto& cone : max_cones_) {
        cones.insert(std::set<std::size_t>(cone.begin(), cone.end()));
    }
    if (d_ == 1) {
        std::set<std::set<std::size_t>> expected;
        bool positive = false, negative = false;
        for (std::size_t i = 0; i < rays_.size(); ++i) {
            positive = positive || rays_[i][0] > 0;
            negative = negative || rays_[i][0] < 0;
            expected.insert({i});
        }
        return positive && negative && cones == expected;
    }
    const std::size_t n = rays_.size();
    if (n < 3) {
        return false;
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const int ha = angular_half(rays_[a]), hb = angular_half(rays_[b]);
        if (ha != hb) {
            return ha < hb;
        }
        return cross(rays_[a], rays_[b]) > 0;
    });
    std::set<std::set<std::size_t>> expected;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t a = order[k], b = order[(k + 1) % n];
        if (cross(rays_[a], rays_[b]) <= 0) {
            return false;
        }
        expected.insert({a, b});
    }
    return cones == expected;
}

Fan Fan::projective_plane() { return Fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}}); }

Fan Fan::p1xp1() { return Fan(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {{0, 2}, {2, 1}, {1, 3}, {3, 0}}); }

Fan Fan::hirzebruch1() { return Fan(2, {{1, 0}, {0, 1}, {-1, 1}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

namespace {

PresentedAbelianGroup ray_relations(const Fan& fan) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < fan.ray_count(); ++i) {
        names.push_back("D" + std::to_string(i));
    }
    std::vector<IntVector> relations(fan.dimension(), IntVector(fan.ray_count()));
    for (std::size_t k = 0; k < fan.dimension(); ++k) {
        for (std::size_t rho = 0; rho < fan.ray_count(); ++rho) {
            relations[k][rho] = fan.rays()[rho][k];
        }
    }
    return PresentedAbelianGroup(names, relations);
}

}  // namespace

ToricClassGroup::ToricClassGroup(const Fan& fan) : group_(ray_relations(fan)) {
    const std::size_t n = fan.ray_count();
    const std::size_t d = fan.dimension();
    if (rows_rank(fan.rays(), d) != d) {
        throw std::invalid_argument("rays do not span R^d: degenerate fan");
    }
    const SmithDecomposition snf = smith_normal_form(group_.relation_matrix());
    const IntMatrix& v = snf.V;
    v_inverse_ = unimodular_inverse(v);
    for (std::size_t j = 0; j < d; ++j) {
        const Integer& dj = snf.D(j, j);
        if (dj != 1) {
            torsion_.push_back(dj);
            torsion_columns_.push_back(j);
        }
    }
    for (std::size_t j = d; j < n; ++j) {
        free_columns_.push_back(j);
    }
    free_rank_ = free_columns_.size();

    IntMatrix q(n, free_rank_);
    for (std::size_t rho = 0; rho < n; ++rho) {
        for (std::size_t k = 0; k < free_rank_; ++k) {
            q(rho, k) = v(rho, free_columns_[k]);
        }
    }
    const IntMatrix w = column_hermite_transform(q);
    free_change_inverse_ = unimodular_inverse(w);
    const IntMatrix free_part = q * w;

    degree_matrix_ = IntMatrix(n, class_length());
    for (std::size_t rho = 0; rho < n; ++rho) {
        for (std::size_t k = 0; k < free_rank_; ++k) {
            degree_matrix_(rho, k) = free_part(rho, k);
        }
        for (std::size_t t = 0; t < torsion_.size(); ++t) {
            degree_matrix_(rho, free_rank_ + t) = v(rho, torsion_columns_[t]);
        }
    }
    if (!(group_.normal_form() == GroupInvariants{free_rank_, torsion_})) {
        throw std::logic_error("class group bookkeeping disagrees with the Smith form");
    }
}

IntVector ToricClassGroup::degree(const IntVector& exponents) const {
    if (exponents.size() != degree_matrix_.rows()) {
        throw std::invalid_argument("exponent vector length does not match the ray count");
    }
    IntVector out(class_length(), 0);
    for (std::size_t k = 0; k < class_length(); ++k) {
        Integer acc = 0;
        for (std::size_t rho = 0; rho < exponents.size(); ++rho) {
            acc += degree_matrix_(rho, k) * Integer(static_cast<long>(exponents[rho]));
        }
        if (k >= free_rank_) {
            mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), torsion_[k - free_rank_].get_mpz_t());
        }
        out[k] = to_ll(acc);
    }
    return out;
}

IntVector ToricClassGroup::ray_degree(std::size_t rho) const {
    IntVector e(degree_matrix_.rows(), 0);
    e.at(rho) = 1;
    return degree(e);
}

ToricDivisor ToricClassGroup::representative(const IntVector& class_vector) const {
    if (class_vector.size() != class_length()) {
        throw std::invalid_argument("class vector has length " + std::to_string(class_vector.size()) +
                                    ", expected " + std::to_string(class_length()));
    }
    const std::size_t n = degree_matrix_.rows();
    // y = x V, with free coordinates y_free = class_free * W^-1.
    std::vector<Integer> y(n);
    for (std::size_t k = 0; k < free_rank_; ++k) {
        for (std::size_t l = 0; l < free_rank_; ++l) {
            y[free_columns_[k]] += Integer(static_cast<long>(class_vector[l])) * free_change_inverse_(l, k);
        }
    }
    for (std::size_t t = 0; t < torsion_.size(); ++t) {
        y[torsion_columns_[t]] = Integer(static_cast<long>(class_vector[free_rank_ + t]));
    }
    ToricDivisor x(n, 0);
    for (std::size_t rho = 0; rho < n; ++rho) {
        Integer acc = 0;
        for (std::size_t j = 0; j < n; ++j) {
            acc += y[j] * v_inverse_(j, rho);
        }
        x[rho] = to_ll(acc);
    }
    return x;
}

ToricClassGroup class_group(const Fan& fan) { return ToricClassGroup(fan); }

CoxRingDescription cox_ring_description(const Fan& fan) {
    const ToricClassGroup cl(fan);
    CoxRingDescription out;
    out.free_rank = cl.free_rank();
    out.torsion = cl.torsion();
    out.smooth = fan.is_smooth();
    out.complete = fan.is_complete();
    out.completeness_verified = fan.completeness_verified();
    for (std::size_t rho = 0; rho < fan.ray_count(); ++rho) {
        out.variables.push_back({"x" + std::to_string(rho), fan.rays()[rho], cl.ray_degree(rho)});
    }
    return out;
}

namespace {

// Vertices of P_D; throws std::domain_error when P_D is unbounded.
std::vector<std::vector<Rational>> polytope_vertices(const Fan& fan, const ToricDivisor& divisor) {
    const std::size_t d = fan.dimension();
    const std::size_t n = fan.ray_count();
    if (divisor.size() != n) {
        throw std::invalid_argument("divisor has " + std::to_string(divisor.size()) + " coefficients for " +
                                    std::to_string(n) + " rays");
    }
    auto inner = [&](const std::vector<Rational>& u, std::size_t rho) {
        Rational s = 0;
        for (std::size_t k = 0; k < d; ++k) {
            s += u[k] * rat(fan.rays()[rho][k]);
        }
        return s;
    };
    auto subsets = [&](std::size_t size) {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> current;
        auto rec = [&](auto&& self, std::size_t start) -> void {
            if (current.size() == size) {
                out.push_back(current);
                return;
            }
            for (std::size_t i = start; i < n; ++i) {
                current.push_back(i);
                self(self, i + 1);
                current.pop_back();
            }
        };
        rec(rec, 0);
        return out;
    };

    if (rows_rank(fan.rays(), d) != d) {
        throw std::domain_error("divisor polyhedron is unbounded: rays do not span");
    }
    // Recession cone {u : <u, v_rho> >= 0} is pointed; it is nonzero iff it has an extreme ray.
    for (const auto& s : subsets(d - 1)) {
        RatMatrix m(s.size(), d);
        for (std::size_t i = 0; i < s.size(); ++i) {
            for (std::size_t k = 0; k < d; ++k) {
                m(i, k) = rat(fan.rays()[s[i]][k]);
            }
        }
        const auto kernel = kernel_basis(m);
        if (kernel.size() != 1) {
            continue;
        }
        for (int sign : {1, -1}) {
            std::vector<Rational> w = kernel.front();
            for (Rational& x : w) {
                x *= sign;
            }
            bool inside = true;
            for (std::size_t rho = 0; rho < n && inside; ++rho) {
                inside = inner(w, rho) >= 0;
            }
            if (inside) {
                throw std::domain_error("divisor polyhedron is unbounded: fan is not complete");
            }
        }
    }

    std::set<std::vector<Rational>> vertices;
    for (const auto& s : subsets(d)) {
        RatMatrix aug(d, d + 1);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t k = 0; k < d; ++k) {
                aug(i, k) = rat(fan.rays()[s[i]][k]);
            }
            aug(i, d) = -rat(divisor[s[i]]);
        }
        const RrefResult r = rref(aug);
        if (r.pivots.size() != d || r.pivots.back() != d - 1) {
            continue;
        }
        std::vector<Rational> u(d);
        for (std::size_t k = 0; k < d; ++k) {
            u[k] = r.matrix(k, d);
        }
        bool feasible = true;
        for (std::size_t rho = 0; rho < n && feasible; ++rho) {
            feasible = inner(u, rho) >= -rat(divisor[rho]);
        }
        if (feasible) {
            vertices.insert(u);
        }
    }
    return {vertices.begin(), vertices.end()};
}

Integer floor_of(const Rational& q) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

Integer ceil_of(const Rational& q) {
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

}  // namespace

PolytopeBox polytope_box(const Fan& fan, const ToricDivisor& divisor) {
    const auto vertices = polytope_vertices(fan, divisor);
    PolytopeBox box;
    if (vertices.empty()) {
        return box;
    }
    box.empty = false;
    box.lower = vertices.front();
    box.upper = vertices.front();
    for (const auto& v : vertices) {
        for (std::size_t k = 0; k < v.size(); ++k) {
            box.lower[k] = std::min(box.lower[k], v[k]);
            box.upper[k] = std::max(box.upper[k], v[k]);
        }
    }
    return box;
}

std::size_t piece_dim_polytope(const Fan& fan, const ToricDivisor& divisor) {
    const PolytopeBox box = polytope_box(fan, divisor);
    if (box.empty) {
        return 0;
    }
    const std::size_t d = fan.dimension();
    std::vector<long long> lo(d), hi(d), u(d);
    for (std::size_t k = 0; k < d; ++k) {
        lo[k] = to_ll(ceil_of(box.lower[k]));
        hi[k] = to_ll(floor_of(box.upper[k]));
        if (lo[k] > hi[k]) {
            return 0;
        }
    }
    std::size_t count = 0;
    u = lo;
    while (true) {
        bool inside = true;
        for (std::size_t rho = 0; rho < fan.ray_count() && inside; ++rho) {
            long long s = 0;
            for (std::size_t k = 0; k < d; ++k) {
                s += u[k] * fan.rays()[rho][k];
            }
            inside = s >= -divisor[rho];
        }
        count += inside ? 1 : 0;
        std::size_t k = 0;
        while (k < d && u[k] == hi[k]) {
            u[k] = lo[k];
            ++k;
        }
        if (k == d) {
            break;
        }
        ++u[k];
    }
    return count;
}

std::size_t piece_dim_monomial(const Fan& fan, const IntVector& class_vector) {
    const ToricClassGroup cl(fan);
    const ToricDivisor rep = cl.representative(class_vector);
    const auto vertices = polytope_vertices(fan, rep);
    if (vertices.empty()) {
        return 0;
    }
    const std::size_t n = fan.ray_count();
    // e_rho = <u, v_rho> + a_rho on P_D, so its maximum over the vertices bounds the exponent.
    std::vector<long long> upper(n);
    for (std::size_t rho = 0; rho < n; ++rho) {
        Rational best;
        bool first = true;
        for (const auto& v : vertices) {
            Rational s = rat(rep[rho]);
            for (std::size_t k = 0; k < fan.dimension(); ++k) {
                s += v[k] * rat(fan.rays()[rho][k]);
            }
            if (first || s > best) {
                best = s;
                first = false;
            }
        }
        upper[rho] = to_ll(floor_of(best));
        if (upper[rho] < 0) {
            return 0;
        }
    }
    std::vector<IntVector> ray_degrees;
    for (std::size_t rho = 0; rho < n; ++rho) {
        ray_degrees.push_back(cl.ray_degree(rho));
    }
    const std::size_t len = cl.class_length();
    std::vector<long long> modulus(len, 0);
    for (std::size_t t = 0; t < cl.torsion().size(); ++t) {
        modulus[cl.free_rank() + t] = to_ll(cl.torsion()[t]);
    }
    std::size_t count = 0;
    IntVector acc(len, 0);
    auto rec = [&](auto&& self, std::size_t rho) -> void {
        if (rho == n) {
            for (std::size_t k = 0; k < len; ++k) {
                long long value = acc[k];
                if (modulus[k] != 0) {
                    value = ((value % modulus[k]) + modulus[k]) % modulus[k];
                }
                if (value != class_vector[k]) {
                    return;
                }
            }
            ++count;
            return;
        }
        for (long long e = 0; e <= upper[rho]; ++e) {
            self(self, rho + 1);
            for (std::size_t k = 0; k < len; ++k) {
                acc[k] += ray_degrees[rho][k];
            }
        }
        for (std::size_t k = 0; k < len; ++k) {
            acc[k] -= (upper[rho] + 1) * ray_degrees[rho][k];
        }
    };
    rec(rec, 0);
    return count;
}

}  // namespace coxring
