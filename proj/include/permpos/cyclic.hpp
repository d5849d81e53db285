#pragma once

#include <optional>
#include <string>
#include <vector>

namespace permpos {

/// The pair {pi^p, pi^q} of powers of the cyclic shift pi(i) = i + 1 (mod n).
struct CyclicPairSpec {
    int n;
    int p;
    int q;

    /// Requires n >= 3 and 1 <= p < q <= n; throws otherwise.
    CyclicPairSpec(int n, int p, int q);
};

enum class CyclicRuleKind {
    QEqualsN,                   // pi^q = id; pairs with the identity always qualify
    QMinusPIsOne,               // adjacent powers
    NoDivisibilityObstruction,  // gcd(q-p, n) = 1: no coprime (m, k) with m(q-p) = kn
    DivisibleAndPAligned,       // m(q-p) = kn exists and p = n - d(q-p), 1 <= d <= m-1
    OrbitReducedNoObstruction,  // gcd(q-p, n) divides p: the pair splits into
                                // gcd(p, q, n) identical sub-pairs whose reduced
                                // gap is coprime to the reduced n (or adjacent)
    Fails,                      // m(q-p) = kn exists, no aligned d, no orbit reduction
};

struct CyclicRule {
    CyclicRuleKind kind = CyclicRuleKind::Fails;
    long long k = 0;   // coprime witnesses of m(q-p) = kn, when they exist
    long long m = 0;
    long long d = 0;   // alignment witness of p = n - d(q-p), when applicable
    long long g0 = 0;  // orbit count gcd(p, q, n) for the orbit-reduced rule
};

struct CyclicVerdict {
    CyclicPairSpec spec;
    bool has_property_c = false;
    CyclicRule rule;
    /// True exactly when has_property_c: the positivity criterion routes
    /// through the choice property (q = n included).
    bool positive_by_criterion = false;
};

/// Exact integer decision for {pi^p, pi^q}. q = n is handled first
/// (pi^n = id); then q - p = 1; then, with g = gcd(q-p, n), m = n/g,
/// k = (q-p)/g: g = 1 means no obstruction, and otherwise the pair
/// qualifies when p = n - d(q-p) for some 1 <= d <= m-1 OR when g divides
/// p. The latter case is the orbit reduction: with g0 = gcd(p, q, n) > 1
/// the pair splits into g0 congruence classes mod g0, each carrying the
/// reduced pair {sigma^(p/g0), sigma^(q/g0)} on n/g0 points, and g | p
/// makes the reduced gap coprime to the reduced ground-set size. The
/// divisibility arithmetic (m, k, d) is invariant under that reduction,
/// so the aligned case needs no adjustment. Validated against the
/// brute-force definition for every n <= 12 by the acceptance sweep;
/// without the g | p clause the sweep fails at (n,p,q) = (10,2,8) and
/// (10,4,8).
CyclicVerdict cyclic_has_property_c(const CyclicPairSpec& spec);

enum class FastPathKind {
    QMinusPOne,
    QEqualsN,
    NPrime,
    GapPrimeNotFactor,
    GapPrimeFactorAligned,
    NoCoprimePair,
    PowerOfTwoGap,
    PowerOfTwoGapTimesOdd,
};

struct FastPathReason {
    FastPathKind kind;
    std::string text;
};

/// First applicable sufficient condition, checked in the order: q - p = 1,
/// q = n, n prime, q - p prime and not a factor of n, q - p a prime factor
/// of n with aligned p, no coprime pair (m, k), then the power-of-two
/// special cases. Returns nothing when no fast path applies (which does
/// not mean the pair fails).
std::optional<FastPathReason> fast_path_reason(const CyclicPairSpec& spec);

/// Complete classification table for all 1 <= p < q <= n, sorted by (p, q);
/// n(n-1)/2 rows.
std::vector<CyclicVerdict> enumerate_cyclic(int n);

std::string rule_to_string(const CyclicRule& rule);

/// CSV columns: n,p,q,q_minus_p,has_property_c,rule,positivity.
std::string csv_header();
std::string csv_row(const CyclicVerdict& v);

}  // namespace permpos
