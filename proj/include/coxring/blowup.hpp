#pragma once

#include "coxring/exact.hpp"
#include "coxring/poly.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace coxring {

using ProjectivePoint = std::vector<Rational>;

/// Blow-up of P^r at m distinct rational points. Points are stored with their first
/// nonzero coordinate scaled to 1.
class BlowupModel {
public:
    BlowupModel(std::size_t r, std::vector<ProjectivePoint> points);

    std::size_t r() const { return r_; }
    std::size_t point_count() const { return points_.size(); }
    const std::vector<ProjectivePoint>& points() const { return points_; }

    /// Index of the affine chart (the coordinate normalized to 1) of point i.
    std::size_t chart(std::size_t i) const;

private:
    std::size_t r_;
    std::vector<ProjectivePoint> points_;
};

ProjectivePoint normalize_point(ProjectivePoint p);

/// Seeded pseudo-random rational points with small numerators and denominators.
/// Reproducible across platforms: draws come straight from std::mt19937_64.
std::vector<ProjectivePoint> general_points(std::size_t r, std::size_t m, std::uint64_t seed);

struct GradedPiece {
    MultiDegree multidegree;
    std::vector<MultiPoly> basis;

    std::size_t dim() const { return basis.size(); }
};

/// Conditions d^alpha f(p_i) = 0 for |alpha| < max(b_i, 0), one row each, in the affine
/// chart of p_i. Columns follow monomials_of_degree(r, a). std::nullopt when a < 0
/// (the piece is zero).
std::optional<RatMatrix> interpolation_matrix(const BlowupModel& model, const MultiDegree& d);

std::size_t piece_dim(const BlowupModel& model, const MultiDegree& d);
GradedPiece piece_basis(const BlowupModel& model, const MultiDegree& d);

/// piece_dim(n * D) for n = 0..n_max.
std::vector<std::size_t> section_ring_dims(const BlowupModel& model, const MultiDegree& divisor, int n_max);

/// True if f (a form of degree d.a) satisfies every vanishing condition of the piece d.
bool piece_contains(const BlowupModel& model, const MultiDegree& d, const MultiPoly& f);

/// Dimension of the span of a list of forms of degree a in r+1 variables.
std::size_t span_dim(const std::vector<MultiPoly>& forms, std::size_t r, int a);

}  // namespace coxring
