#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "permpos/permutation.hpp"

using namespace permpos;

namespace {

Permutation perm(std::initializer_list<int> image) {
    return Permutation::from_one_based(std::vector<int>(image));
}

}  // namespace

TEST_CASE("construction validates bijections") {
    CHECK_NOTHROW(perm({2, 3, 1}));
    CHECK_THROWS_AS(perm({2, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(perm({0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(perm({1, 2, 4}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_one_based({}), std::invalid_argument);
}

TEST_CASE("parse and to_string round trip") {
    const Permutation pi = Permutation::parse("2,3,4,5,1");
    CHECK(pi.one_based_image() == std::vector<int>{2, 3, 4, 5, 1});
    CHECK(pi.to_string() == "2,3,4,5,1");
    CHECK(Permutation::parse(" 2 , 1 ").one_based_image() == std::vector<int>{2, 1});
    CHECK_THROWS_AS(Permutation::parse("2,x,1"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("1,1,2"), std::invalid_argument);
}

TEST_CASE("compose") {
    const Permutation tau = perm({2, 3, 1});
    CHECK(compose(Permutation::identity(3), tau) == tau);
    CHECK(compose(tau, tau) == perm({3, 1, 2}));
    CHECK(compose(inverse(tau), tau) == Permutation::identity(3));
    CHECK_THROWS_AS(compose(tau, Permutation::identity(4)), std::invalid_argument);
}

TEST_CASE("power") {
    const Permutation shift4 = Permutation::cyclic_shift(4);
    CHECK(power(shift4, 2) == perm({3, 4, 1, 2}));
    CHECK(power(shift4, 0) == Permutation::identity(4));
    for (int n : {3, 5, 8}) {
        CHECK(power(Permutation::cyclic_shift(n), n) == Permutation::identity(n));
    }
    CHECK_THROWS_AS(power(shift4, -1), std::invalid_argument);
}

TEST_CASE("power is additive in the exponent") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 50; ++round) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const Permutation pi = oracles::random_permutation(n, rng);
        const int a = static_cast<int>(rng() % 21);
        const int b = static_cast<int>(rng() % 21);
        CHECK(power(pi, a + b) == compose(power(pi, a), power(pi, b)));
    }
}

TEST_CASE("cycle decomposition") {
    SUBCASE("identity on 4 points") {
        const CycleDecomposition cd = cycle_decomposition(Permutation::identity(4));
        CHECK(cd.cycles.size() == 4);
        CHECK(cd.max_len == 1);
    }
    SUBCASE("full cycle") {
        const CycleDecomposition cd = cycle_decomposition(Permutation::cyclic_shift(5));
        REQUIRE(cd.cycles.size() == 1);
        CHECK(cd.cycles[0] == std::vector<int>{1, 2, 3, 4, 5});
        CHECK(cd.max_len == 5);
    }
    SUBCASE("transposition plus fixed point") {
        const CycleDecomposition cd = cycle_decomposition(perm({2, 1, 3}));
        REQUIRE(cd.cycles.size() == 2);
        CHECK(cd.cycles[0] == std::vector<int>{1, 2});
        CHECK(cd.cycles[1] == std::vector<int>{3});
        CHECK(cd.max_len == 2);
    }
    SUBCASE("cycles reproduce the permutation and partition the ground set") {
        std::mt19937_64 rng(11);
        for (int round = 0; round < 30; ++round) {
            const int n = 1 + static_cast<int>(rng() % 10);
            const Permutation pi = oracles::random_permutation(n, rng);
            const CycleDecomposition cd = cycle_decomposition(pi);
            std::set<int> covered;
            for (const auto& cycle : cd.cycles) {
                for (std::size_t k = 0; k < cycle.size(); ++k) {
                    covered.insert(cycle[k]);
                    const int next = cycle[(k + 1) % cycle.size()];
                    CHECK(pi.apply(cycle[k] - 1) + 1 == next);
                }
            }
            CHECK(covered.size() == static_cast<std::size_t>(n));
        }
    }
}

TEST_CASE("permutation matrix follows the column convention") {
    CHECK(permutation_matrix(Permutation::identity(3)) == DMatrix::scaled_identity(3, 1.0));
    const DMatrix p = permutation_matrix(perm({2, 3, 1}));
    CHECK(p(1, 0) == 1.0);
    CHECK(p(2, 1) == 1.0);
    CHECK(p(0, 2) == 1.0);
    double total = 0.0;
    for (const double v : p.entries()) {
        total += v;
    }
    CHECK(total == 3.0);
}

TEST_CASE("permutation matrices: one 1 per row and column, multiplicative") {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 30; ++round) {
        const int n = 2 + static_cast<int>(rng() % 8);
        const Permutation a = oracles::random_permutation(n, rng);
        const Permutation b = oracles::random_permutation(n, rng);
        const DMatrix pa = permutation_matrix(a);
        for (int i = 0; i < n; ++i) {
            int row_ones = 0, col_ones = 0;
            for (int j = 0; j < n; ++j) {
                CHECK((pa(i, j) == 0.0 || pa(i, j) == 1.0));
                row_ones += pa(i, j) == 1.0;
                col_ones += pa(j, i) == 1.0;
            }
            CHECK(row_ones == 1);
            CHECK(col_ones == 1);
        }
        // P_a * P_b = P_{a o b}
        const DMatrix pb = permutation_matrix(b);
        const DMatrix pab = permutation_matrix(compose(a, b));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                double acc = 0.0;
                for (int k = 0; k < n; ++k) {
                    acc += pa(i, k) * pb(k, j);
                }
                CHECK(acc == pab(i, j));
            }
        }
    }
}

TEST_CASE("minimal invariant subsets") {
    SUBCASE("identity with a transposition") {
        const OrbitDecomposition od = minimal_invariant_subsets(Permutation::identity(3), perm({2, 1, 3}));
        REQUIRE(od.orbits.size() == 2);
        CHECK(od.orbits[0] == std::vector<int>{1, 2});
        CHECK(od.orbits[1] == std::vector<int>{3});
    }
    SUBCASE("a 5-cycle forces a single orbit") {
        const OrbitDecomposition od = minimal_invariant_subsets(perm({2, 3, 4, 5, 1}), perm({1, 5, 3, 2, 4}));
        REQUIRE(od.orbits.size() == 1);
        CHECK(od.orbits[0] == std::vector<int>{1, 2, 3, 4, 5});
    }
    SUBCASE("identity pair gives singletons") {
        const OrbitDecomposition od = minimal_invariant_subsets(Permutation::identity(4), Permutation::identity(4));
        CHECK(od.orbits.size() == 4);
    }
    SUBCASE("size mismatch rejected") {
        CHECK_THROWS_AS(minimal_invariant_subsets(Permutation::identity(3), Permutation::identity(4)),
                        std::invalid_argument);
    }
}

TEST_CASE("orbits are invariant and minimal") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 40; ++round) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const Permutation p1 = oracles::random_permutation(n, rng);
        const Permutation p2 = oracles::random_permutation(n, rng);
        const OrbitDecomposition od = minimal_invariant_subsets(p1, p2);

        std::size_t covered = 0;
        for (const auto& orbit : od.orbits) {
            covered += orbit.size();
            std::set<int> members(orbit.begin(), orbit.end());
            for (const int x : orbit) {
                CHECK(members.count(p1.apply(x - 1) + 1) == 1);
                CHECK(members.count(p2.apply(x - 1) + 1) == 1);
            }
            // Minimality: from any member, both generators reach the whole orbit.
            std::vector<int> stack{orbit[0]};
            std::set<int> reached{orbit[0]};
            while (!stack.empty()) {
                const int x = stack.back();
                stack.pop_back();
                for (const int y : {p1.apply(x - 1) + 1, p2.apply(x - 1) + 1}) {
                    if (reached.insert(y).second) {
                        stack.push_back(y);
                    }
                }
            }
            CHECK(reached == members);
        }
        CHECK(covered == static_cast<std::size_t>(n));
    }
}

TEST_CASE("restrict_to") {
    SUBCASE("identity restricts to identity") {
        const RestrictedPermutation r = restrict_to(Permutation::identity(5), {2, 4, 5});
        CHECK(r.perm == Permutation::identity(3));
        CHECK(r.original_index == std::vector<int>{2, 4, 5});
    }
    SUBCASE("transposition block") {
        const RestrictedPermutation r = restrict_to(perm({2, 1, 3}), {1, 2});
        CHECK(r.perm == perm({2, 1}));
    }
    SUBCASE("square of the 4-shift on the even orbit") {
        const RestrictedPermutation r = restrict_to(power(Permutation::cyclic_shift(4), 2), {1, 3});
        CHECK(r.perm == perm({2, 1}));
        CHECK(r.original_index == std::vector<int>{1, 3});
    }
    SUBCASE("non-invariant set rejected") {
        CHECK_THROWS_AS(restrict_to(Permutation::cyclic_shift(4), {1, 2}), std::invalid_argument);
    }
    SUBCASE("restrict then re-embed reproduces the action") {
        std::mt19937_64 rng(43);
        for (int round = 0; round < 30; ++round) {
            const int n = 2 + static_cast<int>(rng() % 9);
            const Permutation p1 = oracles::random_permutation(n, rng);
            const Permutation p2 = oracles::random_permutation(n, rng);
            for (const auto& orbit : minimal_invariant_subsets(p1, p2).orbits) {
                const RestrictedPermutation r = restrict_to(p1, orbit);
                for (std::size_t k = 0; k < orbit.size(); ++k) {
                    const int image_in_orbit = r.original_index[r.perm.apply(static_cast<int>(k))];
                    CHECK(image_in_orbit == p1.apply(orbit[k] - 1) + 1);
                }
            }
        }
    }
}
