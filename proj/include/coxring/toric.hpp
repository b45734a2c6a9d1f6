#pragma once

#include "coxring/abgroup.hpp"
#include "coxring/exact.hpp"

#include <string>
#include <vector>

namespace coxring {

/// Simplicial fan in Z^d: primitive rays and maximal cones given as ray-index sets.
class Fan {
public:
    /// Validates primitivity, distinctness, index ranges and simpliciality.
    Fan(std::size_t d, std::vector<IntVector> rays, std::vector<std::vector<std::size_t>> max_cones);

    std::size_t dimension() const { return d_; }
    const std::vector<IntVector>& rays() const { return rays_; }
    const std::vector<std::vector<std::size_t>>& max_cones() const { return max_cones_; }
    std::size_t ray_count() const { return rays_.size(); }

    /// Every maximal cone is generated by part of a Z-basis.
    bool is_smooth() const;
    /// Exact for d <= 2; for d >= 3 completeness is taken on trust and this returns true.
    bool is_complete() const;
    bool completeness_verified() const { return d_ <= 2; }

    static Fan projective_plane();
    static Fan p1xp1();
    /// Hirzebruch surface F1 with rays (1,0), (0,1), (-1,1), (0,-1).
    static Fan hirzebruch1();

private:
    std::size_t d_;
    std::vector<IntVector> rays_;
    std::vector<std::vector<std::size_t>> max_cones_;
};

/// Integer coefficient a_rho per ray: sum a_rho D_rho.
using ToricDivisor = IntVector;

/// Class group Z^rays / M plus the degree map sending ray-exponent vectors to class
/// coordinates: free coordinates first, then one residue per invariant factor.
class ToricClassGroup {
public:
    explicit ToricClassGroup(const Fan& fan);

    const PresentedAbelianGroup& group() const { return group_; }
    std::size_t free_rank() const { return free_rank_; }
    const std::vector<Integer>& torsion() const { return torsion_; }
    /// Length of a class vector: free rank + number of invariant factors.
    std::size_t class_length() const { return free_rank_ + torsion_.size(); }

    IntVector degree(const IntVector& exponents) const;
    /// Class of the unit vector e_rho.
    IntVector ray_degree(std::size_t rho) const;
    /// Some divisor whose class is the given class vector.
    ToricDivisor representative(const IntVector& class_vector) const;

private:
    PresentedAbelianGroup group_;
    std::size_t free_rank_ = 0;
    std::vector<Integer> torsion_;
    // Columns: free coordinates, then torsion coordinates (each taken mod its factor).
    IntMatrix degree_matrix_;
    std::vector<std::size_t> torsion_columns_;
    std::vector<std::size_t> free_columns_;
    IntMatrix v_inverse_;
    IntMatrix free_change_inverse_;
};

/// Throws std::invalid_argument when the rays do not span R^d.
ToricClassGroup class_group(const Fan& fan);

struct CoxVariable {
    std::string name;
    IntVector ray;
    IntVector degree;
};

struct CoxRingDescription {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;
    std::vector<CoxVariable> variables;
    bool smooth = false;
    bool complete = false;
    bool completeness_verified = false;
};

CoxRingDescription cox_ring_description(const Fan& fan);

/// Number of monomials prod x_rho^{e_rho} of the given class, enumerated inside the
/// box given by the divisor polytope of a representative.
std::size_t piece_dim_monomial(const Fan& fan, const IntVector& class_vector);

/// Lattice points of P_D = {u : <u, v_rho> >= -a_rho}. Throws std::domain_error when
/// P_D is unbounded (fan not complete).
std::size_t piece_dim_polytope(const Fan& fan, const ToricDivisor& divisor);

/// Rational bounding box of P_D, or nothing when P_D is empty.
struct PolytopeBox {
    bool empty = true;
    std::vector<Rational> lower;
    std::vector<Rational> upper;
};

PolytopeBox polytope_box(const Fan& fan, const ToricDivisor& divisor);

}  // namespace coxring
