#include "coxring/blowup.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace coxring {

ProjectivePoint normalize_point(ProjectivePoint p) {
    auto lead = std::find_if(p.begin(), p.end(), [](const Rational& x) { return x != 0; });
    if (lead == p.end()) {
        throw std::invalid_argument("the zero vector is not a projective point");
    }
    const Rational scale = 1 / *lead;
    for (Rational& x : p) {
        x *= scale;
    }
    return p;
}

BlowupModel::BlowupModel(std::size_t r, std::vector<ProjectivePoint> points) : r_(r) {
    if (r == 0) {
        throw std::invalid_argument("ambient dimension must be at least 1");
    }
    for (ProjectivePoint& p : points) {
        if (p.size() != r + 1) {
            throw std::invalid_argument("point has " + std::to_string(p.size()) + " coordinates, expected " +
                                        std::to_string(r + 1));
        }
        ProjectivePoint q = normalize_point(std::move(p));
        if (std::find(points_.begin(), points_.end(), q) != points_.end()) {
            throw std::invalid_argument("blow-up centers must be pairwise distinct points");
        }
        points_.push_back(std::move(q));
    }
}

std::size_t BlowupModel::chart(std::size_t i) const {
    const ProjectivePoint& p = points_.at(i);
    return static_cast<std::size_t>(std::find(p.begin(), p.end(), Rational(1)) - p.begin());
}

std::vector<ProjectivePoint> general_points(std::size_t r, std::size_t m, std::uint64_t seed) {
    std::mt19937_64 engine(seed);
    std::vector<ProjectivePoint> points;
    while (points.size() < m) {
        ProjectivePoint p(r + 1);
        for (Rational& x : p) {
            const long num = static_cast<long>(engine() % 21) - 10;
            const long den = static_cast<long>(engine() % 7) + 1;
            x = Rational(num, den);
            x.canonicalize();
        }
        if (std::all_of(p.begin(), p.end(), [](const Rational& x) { return x == 0; })) {
            continue;
        }
        p = normalize_point(std::move(p));
        if (std::find(points.begin(), points.end(), p) == points.end()) {
            points.push_back(std::move(p));
        }
    }
    return points;
}

std::optional<RatMatrix> interpolation_matrix(const BlowupModel& model, const MultiDegree& d) {
    if (d.b.size() != model.point_count()) {
        throw std::invalid_argument("multidegree has " + std::to_string(d.b.size()) + " point entries for " +
                                    std::to_string(model.point_count()) + " points");
    }
    if (d.a < 0) {
        return std::nullopt;
    }
    const std::size_t r = model.r();
    const std::vector<Exponents> columns = monomials_of_degree(r, d.a);

    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < model.point_count(); ++i) {
        const int mult = std::max(d.b[i], 0);
        if (mult == 0) {
            continue;
        }
        const std::size_t chart = model.chart(i);
        const ProjectivePoint& p = model.points()[i];
        for (int order = 0; order < mult; ++order) {
            // Multi-indices over the r affine coordinates (every index except the chart).
            for (const Exponents& affine_alpha : monomials_of_degree(r - 1, order)) {
                Exponents alpha(r + 1, 0);
                for (std::size_t j = 0, k = 0; j <= r; ++j) {
                    if (j != chart) {
                        alpha[j] = affine_alpha[k++];
                    }
                }
                std::vector<Rational> row(columns.size());
                for (std::size_t c = 0; c < columns.size(); ++c) {
                    const Exponents& e = columns[c];
                    Rational value = 1;
                    for (std::size_t j = 0; j <= r && value != 0; ++j) {
                        if (j == chart) {
                            continue;
                        }
                        if (alpha[j] > e[j]) {
                            value = 0;
                            break;
                        }
                        for (int k = 0; k < alpha[j]; ++k) {
                            value *= e[j] - k;
                        }
                        for (int k = alpha[j]; k < e[j]; ++k) {
                            value *= p[j];
                        }
                    }
                    row[c] = value;
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return RatMatrix::from_rows(rows, columns.size());
}

std::size_t piece_dim(const BlowupModel& model, const MultiDegree& d) {
    const auto m = interpolation_matrix(model, d);
    return m ? kernel_dim(*m) : 0;
}

GradedPiece piece_basis(const BlowupModel& model, const MultiDegree& d) {
    GradedPiece piece{d, {}};
    const auto m = interpolation_matrix(model, d);
    if (!m) {
        return piece;
    }
    const std::vector<Exponents> columns = monomials_of_degree(model.r(), d.a);
    for (const auto& v : kernel_basis(*m)) {
        piece.basis.push_back(from_coefficients(Field::rationals(), columns, v));
    }
    return piece;
}

std::vector<std::size_t> section_ring_dims(const BlowupModel& model, const MultiDegree& divisor, int n_max) {
    if (n_max < 0) {
        throw std::invalid_argument("n_max must be nonnegative");
    }
    std::vector<std::size_t> dims;
    for (int n = 0; n <= n_max; ++n) {
        dims.push_back(piece_dim(model, divisor * n));
    }
    return dims;
}

bool piece_contains(const BlowupModel& model, const MultiDegree& d, const MultiPoly& f) {
    if (f.is_zero()) {
        return true;
    }
    if (f.nvars() != model.r() + 1 || !f.is_homogeneous() || f.total_degree() != d.a) {
        return false;
    }
    const auto m = interpolation_matrix(model, d);
    if (!m) {
        return false;
    }
    const auto image = *m * coefficient_vector(f, monomials_of_degree(model.r(), d.a));
    return std::all_of(image.begin(), image.end(), [](const Rational& x) { return x == 0; });
}

std::size_t span_dim(const std::vector<MultiPoly>& forms, std::size_t r, int a) {
    if (a < 0) {
        return 0;
    }
    const std::vector<Exponents> columns = monomials_of_degree(r, a);
    std::vector<std::vector<Rational>> rows;
    for (const MultiPoly& f : forms) {
        rows.push_back(coefficient_vector(f, columns));
    }
    return rank(RatMatrix::from_rows(rows, columns.size()));
}

}  // namespace coxring
