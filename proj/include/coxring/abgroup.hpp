#pragma once

#include "coxring/exact.hpp"

#include <map>
#include <string>
#include <vector>

namespace coxring {

using IntVector = std::vector<long long>;

/// Isomorphism invariants: Z^free_rank + Z/d1 + ... with d1 | d2 | ... and every di > 1.
struct GroupInvariants {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const GroupInvariants&) const = default;
};

/// Finitely generated abelian group Z^g / <relations>. The normal form is computed
/// eagerly; instances are immutable afterwards.
class PresentedAbelianGroup {
public:
    PresentedAbelianGroup(std::vector<std::string> generators, std::vector<IntVector> relations);
    /// Generators named g0..g{n-1}.
    PresentedAbelianGroup(std::size_t generator_count, std::vector<IntVector> relations);

    std::size_t generator_count() const { return generators_.size(); }
    const std::vector<std::string>& generators() const { return generators_; }
    const std::vector<IntVector>& relations() const { return relations_; }
    const GroupInvariants& normal_form() const { return invariants_; }

    /// Adds the given classes as relations. Throws std::invalid_argument on a length mismatch.
    PresentedAbelianGroup quotient(const std::vector<IntVector>& classes) const;

    /// Relation rows as an integer matrix (rows x generator_count).
    IntMatrix relation_matrix() const;

private:
    std::vector<std::string> generators_;
    std::vector<IntVector> relations_;
    GroupInvariants invariants_;
};

/// Invariants of Z^cols / rowspace(relations) read off the Smith form.
GroupInvariants cokernel_invariants(const IntMatrix& relations);

/// Formal integer combination of named prime divisors.
class WeilDivisor {
public:
    WeilDivisor() = default;
    explicit WeilDivisor(std::map<std::string, long long> coefficients);

    /// Parses "3A - E1 - 2E2", "A - 2*E1", "0".
    static WeilDivisor parse(const std::string& text);

    const std::map<std::string, long long>& coefficients() const { return coefficients_; }
    long long coefficient(const std::string& name) const;

    WeilDivisor operator+(const WeilDivisor& other) const;
    bool operator==(const WeilDivisor&) const = default;

private:
    std::map<std::string, long long> coefficients_;
};

/// Coefficient vector of D in the ordered basis; throws std::invalid_argument on unknown symbols.
IntVector class_of(const WeilDivisor& d, const std::vector<std::string>& basis);

}  // namespace coxring
