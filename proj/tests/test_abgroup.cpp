#include "coxring/abgroup.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace coxring;

namespace {

GroupInvariants invariants(std::size_t rank, std::vector<long> torsion) {
    GroupInvariants g;
    g.free_rank = rank;
    for (long t : torsion) {
        g.torsion.push_back(t);
    }
    return g;
}

}  // namespace

TEST_CASE("Z^2 modulo (2,0)") {
    const PresentedAbelianGroup g(2, {{2, 0}});
    CHECK(g.normal_form() == invariants(1, {2}));
}

TEST_CASE("quotients of the blow-up class group") {
    const PresentedAbelianGroup cl({"A", "E"}, {});
    CHECK(cl.normal_form() == invariants(2, {}));
    CHECK(cl.quotient({{1, 0}}).normal_form() == invariants(1, {}));
    CHECK(cl.quotient({{1, 0}, {0, 1}}).normal_form().is_trivial());

    const PresentedAbelianGroup three({"A", "E1", "E2"}, {});
    CHECK(three.quotient({{1, -1, 0}}).normal_form() == invariants(2, {}));
}

TEST_CASE("invariant factors collect across relations") {
    CHECK(PresentedAbelianGroup(2, {{2, 0}, {0, 3}}).normal_form() == invariants(0, {6}));
    CHECK(PresentedAbelianGroup(3, {{2, 4, 0}, {0, 0, 6}}).normal_form() == invariants(1, {2, 6}));
    CHECK(PresentedAbelianGroup(2, {{1, 1}}).normal_form() == invariants(1, {}));
    CHECK(PresentedAbelianGroup(2, {{0, 0}}).normal_form() == invariants(2, {}));
}

TEST_CASE("normal form ignores row operations on relations") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> entry(-6, 6), count(1, 4), size(1, 4);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = size(rng);
        std::vector<IntVector> relations(count(rng), IntVector(n));
        for (auto& row : relations) {
            for (auto& x : row) {
                x = entry(rng);
            }
        }
        const GroupInvariants base = PresentedAbelianGroup(n, relations).normal_form();

        auto shuffled = relations;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(PresentedAbelianGroup(n, shuffled).normal_form() == base);

        auto combined = relations;
        if (combined.size() >= 2) {
            const int k = entry(rng);
            for (std::size_t j = 0; j < n; ++j) {
                combined[0][j] += k * combined[1][j];
            }
            std::transform(combined[1].begin(), combined[1].end(), combined[1].begin(),
                           [](long long x) { return -x; });
        }
        CHECK(PresentedAbelianGroup(n, combined).normal_form() == base);
    }
}

TEST_CASE("quotient laws") {
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 3;
        auto random_vectors = [&](std::size_t k) {
            std::vector<IntVector> out(k, IntVector(n));
            for (auto& v : out) {
                for (auto& x : v) {
                    x = entry(rng);
                }
            }
            return out;
        };
        const PresentedAbelianGroup g(n, random_vectors(1));
        CHECK(g.quotient({IntVector(n, 0)}).normal_form() == g.normal_form());
        const auto s = random_vectors(1);
        const auto t = random_vectors(2);
        auto both = s;
        both.insert(both.end(), t.begin(), t.end());
        CHECK(g.quotient(s).quotient(t).normal_form() == g.quotient(both).normal_form());
    }
    CHECK_THROWS_AS(PresentedAbelianGroup(2, {}).quotient({{1, 2, 3}}), std::invalid_argument);
}

TEST_CASE("Weil divisors and their classes") {
    const std::vector<std::string> basis{"A", "E1", "E2"};
    CHECK(class_of(WeilDivisor::parse("A"), basis) == IntVector{1, 0, 0});
    CHECK(class_of(WeilDivisor(), basis) == IntVector{0, 0, 0});
    CHECK(class_of(WeilDivisor::parse("3A - E1 - 2E2"), basis) == IntVector{3, -1, -2});
    CHECK(class_of(WeilDivisor::parse("A + E1") + WeilDivisor::parse("-A"), basis) == IntVector{0, 1, 0});
    CHECK_THROWS_AS(class_of(WeilDivisor::parse("F"), basis), std::invalid_argument);
}
