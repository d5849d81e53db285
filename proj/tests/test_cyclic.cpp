#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "permpos/cyclic.hpp"
#include "permpos/property_c.hpp"

using namespace permpos;

namespace {

std::set<std::pair<int, int>> positive_set(int n) {
    std::set<std::pair<int, int>> out;
    for (const CyclicVerdict& v : enumerate_cyclic(n)) {
        if (v.has_property_c) {
            out.insert({v.spec.p, v.spec.q});
        }
    }
    return out;
}

bool bruteforce_pair(int n, int p, int q) {
    const Permutation shift = Permutation::cyclic_shift(n);
    return has_property_c(PermPair(power(shift, p), power(shift, q))).holds;
}

}  // namespace

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(CyclicPairSpec(2, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(CyclicPairSpec(5, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(CyclicPairSpec(5, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(CyclicPairSpec(5, 2, 6), std::invalid_argument);
    CHECK_NOTHROW(CyclicPairSpec(3, 1, 3));
}

TEST_CASE("single verdicts") {
    SUBCASE("n=8 p=2 q=4: aligned with d = 3") {
        const CyclicVerdict v = cyclic_has_property_c(CyclicPairSpec(8, 2, 4));
        CHECK(v.has_property_c);
        CHECK(v.rule.kind == CyclicRuleKind::DivisibleAndPAligned);
        CHECK(v.rule.k == 1);
        CHECK(v.rule.m == 4);
        CHECK(v.rule.d == 3);
    }
    SUBCASE("n=8 p=1 q=7 fails") {
        const CyclicVerdict v = cyclic_has_property_c(CyclicPairSpec(8, 1, 7));
        CHECK_FALSE(v.has_property_c);
        CHECK(v.rule.kind == CyclicRuleKind::Fails);
        CHECK(v.rule.m == 4);
        CHECK(v.rule.k == 3);
        CHECK_FALSE(v.positive_by_criterion);
    }
    SUBCASE("n=5: everything qualifies") {
        for (const CyclicVerdict& v : enumerate_cyclic(5)) {
            CHECK(v.has_property_c);
        }
    }
    SUBCASE("n=16 p=4 q=10") {
        const CyclicVerdict v = cyclic_has_property_c(CyclicPairSpec(16, 4, 10));
        CHECK(v.has_property_c);
        CHECK(v.rule.kind == CyclicRuleKind::DivisibleAndPAligned);
    }
    SUBCASE("q = n comes first") {
        const CyclicVerdict v = cyclic_has_property_c(CyclicPairSpec(8, 4, 8));
        CHECK(v.has_property_c);
        CHECK(v.rule.kind == CyclicRuleKind::QEqualsN);
        CHECK(v.positive_by_criterion);
    }
}

TEST_CASE("n = 8 classification table") {
    std::set<std::pair<int, int>> expected;
    for (int p = 1; p < 8; ++p) {
        for (int q = p + 1; q <= 8; ++q) {
            const int gap = q - p;
            const bool positive = (q == 8) || gap == 1 || gap == 3 || gap == 5 || gap == 7 ||
                                  (gap == 2 && (p == 2 || p == 4 || p == 6)) || (gap == 4 && p == 4) ||
                                  (gap == 6 && p == 2);
            if (positive) {
                expected.insert({p, q});
            }
        }
    }
    CHECK(positive_set(8) == expected);
    CHECK(enumerate_cyclic(8).size() == 28);
}

TEST_CASE("n = 16 classification table") {
    std::set<std::pair<int, int>> expected;
    const auto item = [&expected](int gap, std::initializer_list<int> ps) {
        for (const int p : ps) {
            expected.insert({p, p + gap});
        }
    };
    for (int p = 1; p < 16; ++p) {
        for (int q = p + 1; q <= 16; ++q) {
            if (q == 16 || (q - p) % 2 == 1) {
                expected.insert({p, q});
            }
        }
    }
    item(2, {2, 4, 6, 8, 10, 12});
    item(4, {4, 8});
    item(6, {2, 4, 6, 8, 10});
    item(10, {2, 4});
    // gap 8 with p = 8, gap 12 with p = 4, gap 14 with p = 2 have q = 16
    // and are covered by the q = n row above. The even-p gap-6 and gap-10
    // rows beyond the aligned ones split into two 8-point orbits whose
    // reduced gaps (3 and 5) are coprime to 8; the brute-force check below
    // confirms them.
    CHECK(positive_set(16) == expected);
    CHECK(enumerate_cyclic(16).size() == 120);

    for (const auto [p, q] : {std::pair{2, 8}, {6, 12}, {8, 14}, {2, 12}, {4, 14}}) {
        const CyclicVerdict v = cyclic_has_property_c(CyclicPairSpec(16, p, q));
        CHECK(v.rule.kind == CyclicRuleKind::OrbitReducedNoObstruction);
        CHECK(bruteforce_pair(16, p, q));
    }
}

TEST_CASE("orbit reduction catches the split pairs the plain arithmetic misses") {
    for (const auto [p, q] : {std::pair{2, 8}, {4, 8}}) {
        const CyclicVerdict v = cyclic_has_property_c(CyclicPairSpec(10, p, q));
        CHECK(v.has_property_c);
        CHECK(v.rule.kind == CyclicRuleKind::OrbitReducedNoObstruction);
        CHECK(v.rule.g0 == 2);
        CHECK(bruteforce_pair(10, p, q));
    }
}

TEST_CASE("n = 5 and n = 7 are fully positive") {
    for (const int n : {5, 7}) {
        const auto rows = enumerate_cyclic(n);
        CHECK(rows.size() == static_cast<std::size_t>(n * (n - 1) / 2));
        for (const CyclicVerdict& v : rows) {
            CHECK(v.positive_by_criterion);
        }
    }
}

TEST_CASE("closed form equals the brute-force definition for n <= 10") {
    // The full n <= 12 sweep is an acceptance criterion; a slightly smaller
    // range keeps this suite quick.
    for (int n = 3; n <= 10; ++n) {
        for (const CyclicVerdict& v : enumerate_cyclic(n)) {
            INFO("n=", n, " p=", v.spec.p, " q=", v.spec.q);
            CHECK(v.has_property_c == bruteforce_pair(n, v.spec.p, v.spec.q));
        }
    }
}

TEST_CASE("alignment witnesses satisfy their defining identities") {
    for (int n = 3; n <= 20; ++n) {
        for (const CyclicVerdict& v : enumerate_cyclic(n)) {
            if (v.rule.kind != CyclicRuleKind::DivisibleAndPAligned) {
                continue;
            }
            const long long gap = v.spec.q - v.spec.p;
            CHECK(v.rule.m * gap == v.rule.k * n);
            CHECK(std::gcd(v.rule.m, v.rule.k) == 1);
            CHECK(v.rule.m < n);
            CHECK(v.rule.k < gap);
            CHECK(v.spec.p == n - v.rule.d * gap);
            CHECK(v.rule.d >= 1);
            CHECK(v.rule.d <= v.rule.m - 1);
        }
    }
}

TEST_CASE("fast paths") {
    SUBCASE("prime n") {
        const auto r = fast_path_reason(CyclicPairSpec(7, 2, 5));
        REQUIRE(r.has_value());
        CHECK(r->kind == FastPathKind::NPrime);
        CHECK(r->text == "n is prime");
    }
    SUBCASE("prime gap not dividing n") {
        const auto r = fast_path_reason(CyclicPairSpec(9, 1, 3));
        REQUIRE(r.has_value());
        CHECK(r->kind == FastPathKind::GapPrimeNotFactor);
        CHECK(r->text == "q - p prime, not a factor of n");
    }
    SUBCASE("q = n") {
        const auto r = fast_path_reason(CyclicPairSpec(8, 4, 8));
        REQUIRE(r.has_value());
        CHECK(r->kind == FastPathKind::QEqualsN);
        CHECK(r->text == "q = n");
    }
    SUBCASE("prime gap dividing n, aligned p") {
        const auto r = fast_path_reason(CyclicPairSpec(8, 2, 4));
        REQUIRE(r.has_value());
        CHECK(r->kind == FastPathKind::GapPrimeFactorAligned);
    }
    SUBCASE("power-of-two cases") {
        const auto r4 = fast_path_reason(CyclicPairSpec(16, 4, 8));
        REQUIRE(r4.has_value());
        CHECK(r4->kind == FastPathKind::PowerOfTwoGap);
        const auto r6 = fast_path_reason(CyclicPairSpec(16, 4, 10));
        REQUIRE(r6.has_value());
        CHECK(r6->kind == FastPathKind::PowerOfTwoGapTimesOdd);
    }
    SUBCASE("no fast path on a failing pair") {
        CHECK_FALSE(fast_path_reason(CyclicPairSpec(8, 1, 7)).has_value());
        CHECK_FALSE(fast_path_reason(CyclicPairSpec(16, 2, 6)).has_value());
        CHECK_FALSE(cyclic_has_property_c(CyclicPairSpec(16, 2, 6)).has_property_c);
    }
}

TEST_CASE("every fast-path reason is sufficient, exhaustively to n = 20") {
    int fast_path_hits = 0;
    for (int n = 3; n <= 20; ++n) {
        for (int p = 1; p < n; ++p) {
            for (int q = p + 1; q <= n; ++q) {
                const CyclicPairSpec spec(n, p, q);
                if (fast_path_reason(spec)) {
                    ++fast_path_hits;
                    INFO("n=", n, " p=", p, " q=", q);
                    CHECK(cyclic_has_property_c(spec).has_property_c);
                }
            }
        }
    }
    CHECK(fast_path_hits > 500);
}

TEST_CASE("CSV serialization") {
    CHECK(csv_header() == "n,p,q,q_minus_p,has_property_c,rule,positivity");
    const CyclicVerdict aligned = cyclic_has_property_c(CyclicPairSpec(8, 2, 4));
    CHECK(csv_row(aligned) == "8,2,4,2,true,divisible_and_p_aligned[k=1;m=4;d=3],PositiveByCriterion");
    const CyclicVerdict failing = cyclic_has_property_c(CyclicPairSpec(8, 1, 7));
    CHECK(csv_row(failing) == "8,1,7,6,false,fails[k=3;m=4],Unknown");
    const CyclicVerdict trivial = cyclic_has_property_c(CyclicPairSpec(5, 1, 2));
    CHECK(csv_row(trivial) == "5,1,2,1,true,q_minus_p_is_one,PositiveByCriterion");
}
