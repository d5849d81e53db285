#include "permpos/cyclic.hpp"

#include <numeric>
#include <stdexcept>

namespace permpos {

namespace {

bool is_prime(long long v) {
    if (v < 2) {
        return false;
    }
    for (long long f = 2; f * f <= v; ++f) {
        if (v % f == 0) {
            return false;
        }
    }
    return true;
}

// n = 2^N with N >= 2; returns N or 0.
int power_of_two_exponent(int n) {
    if (n < 4 || (n & (n - 1)) != 0) {
        return 0;
    }
    int e = 0;
    while ((1 << e) < n) {
        ++e;
    }
    return e;
}

}  // namespace

CyclicPairSpec::CyclicPairSpec(int n_, int p_, int q_) : n(n_), p(p_), q(q_) {
    if (n < 3) {
        throw std::invalid_argument("CyclicPairSpec: n must be at least 3");
    }
    if (p < 1 || p >= q || q > n) {
        throw std::invalid_argument("CyclicPairSpec: need 1 <= p < q <= n");
    }
}

CyclicVerdict cyclic_has_property_c(const CyclicPairSpec& spec) {
    CyclicVerdict out{spec, false, {}, false};
    const long long n = spec.n;
    const long long gap = spec.q - spec.p;

    if (spec.q == spec.n) {
        out.has_property_c = true;
        out.rule.kind = CyclicRuleKind::QEqualsN;
    } else if (gap == 1) {
        out.has_property_c = true;
        out.rule.kind = CyclicRuleKind::QMinusPIsOne;
    } else {
        const long long g = std::gcd(gap, n);
        const long long m = n / g;
        const long long k = gap / g;
        if (g == 1) {
            // The only coprime solution of m(q-p) = kn is (n, q-p) itself,
            // which violates m < n; no obstruction exists.
            out.has_property_c = true;
            out.rule.kind = CyclicRuleKind::NoDivisibilityObstruction;
        } else {
            out.rule.k = k;
            out.rule.m = m;
            const long long remainder = (n - spec.p) % gap;
            const long long d = (n - spec.p) / gap;
            if (remainder == 0 && d >= 1 && d <= m - 1) {
                out.has_property_c = true;
                out.rule.kind = CyclicRuleKind::DivisibleAndPAligned;
                out.rule.d = d;
            } else if (spec.p % g == 0) {
                // g | p makes gcd(p, q, n) = g: the pair splits into g
                // orbits, each carrying {sigma^(p/g), sigma^(q/g)} on n/g
                // points with reduced gap coprime to n/g (or equal to 1).
                out.has_property_c = true;
                out.rule.kind = CyclicRuleKind::OrbitReducedNoObstruction;
                out.rule.g0 = g;
            } else {
                out.rule.kind = CyclicRuleKind::Fails;
            }
        }
    }
    out.positive_by_criterion = out.has_property_c;
    return out;
}

std::optional<FastPathReason> fast_path_reason(const CyclicPairSpec& spec) {
    const long long n = spec.n;
    const long long gap = spec.q - spec.p;

    if (gap == 1) {
        return FastPathReason{FastPathKind::QMinusPOne, "q - p = 1"};
    }
    if (spec.q == spec.n) {
        return FastPathReason{FastPathKind::QEqualsN, "q = n"};
    }
    if (is_prime(n)) {
        return FastPathReason{FastPathKind::NPrime, "n is prime"};
    }
    if (is_prime(gap)) {
        if (n % gap != 0) {
            return FastPathReason{FastPathKind::GapPrimeNotFactor, "q - p prime, not a factor of n"};
        }
        if (spec.p % gap == 0) {
            const long long d = spec.p / gap;
            if (d >= 1 && d <= n / gap - 2) {
                return FastPathReason{FastPathKind::GapPrimeFactorAligned,
                                      "q - p a prime factor of n, p = d(q - p) with d <= n/(q - p) - 2"};
            }
        }
    }
    if (std::gcd(gap, n) == 1) {
        return FastPathReason{FastPathKind::NoCoprimePair, "no coprime pair (m, k) with m(q - p) = k n"};
    }
    if (const int N = power_of_two_exponent(spec.n); N != 0 && spec.q < spec.n) {
        if (gap % 2 == 1) {
            return FastPathReason{FastPathKind::PowerOfTwoGap, "q - p odd with n a power of two"};
        }
        long long b = 0;
        long long r = gap;
        while (r % 2 == 0) {
            r /= 2;
            ++b;
        }
        const long long pow2 = 1LL << b;           // gap = 2^b * r, r odd
        const long long cofactor = n / pow2;       // 2^(N-b)
        if (r == 1) {
            if (b >= 1 && b <= N - 1 && spec.p % pow2 == 0) {
                const long long d = spec.p / pow2;
                if (d >= 1 && d <= cofactor - 1) {
                    return FastPathReason{FastPathKind::PowerOfTwoGap, "q - p = 2^b with p a multiple of 2^b"};
                }
            }
        } else if (b >= 1) {
            // p = 2^b (2^(N-b) - d r) for some 1 <= d <= (2^(N-b) - 1)/r.
            if (spec.p % pow2 == 0) {
                const long long e = cofactor - spec.p / pow2;  // = d r when aligned
                if (e >= 1 && e % r == 0) {
                    const long long d = e / r;
                    if (d >= 1 && d <= (cofactor - 1) / r) {
                        return FastPathReason{FastPathKind::PowerOfTwoGapTimesOdd,
                                              "q - p = 2^b r (r odd) with aligned p"};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::vector<CyclicVerdict> enumerate_cyclic(int n) {
    if (n < 3) {
        throw std::invalid_argument("enumerate_cyclic: n must be at least 3");
    }
    std::vector<CyclicVerdict> rows;
    rows.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int p = 1; p < n; ++p) {
        for (int q = p + 1; q <= n; ++q) {
            rows.push_back(cyclic_has_property_c(CyclicPairSpec(n, p, q)));
        }
    }
    return rows;
}

std::string rule_to_string(const CyclicRule& rule) {
    switch (rule.kind) {
        case CyclicRuleKind::QEqualsN:
            return "q_equals_n";
        case CyclicRuleKind::QMinusPIsOne:
            return "q_minus_p_is_one";
        case CyclicRuleKind::NoDivisibilityObstruction:
            return "no_divisibility_obstruction";
        case CyclicRuleKind::DivisibleAndPAligned:
            return "divisible_and_p_aligned[k=" + std::to_string(rule.k) + ";m=" + std::to_string(rule.m) +
                   ";d=" + std::to_string(rule.d) + "]";
        case CyclicRuleKind::OrbitReducedNoObstruction:
            return "orbit_reduced_no_obstruction[g0=" + std::to_string(rule.g0) + "]";
        case CyclicRuleKind::Fails:
            return "fails[k=" + std::to_string(rule.k) + ";m=" + std::to_string(rule.m) + "]";
    }
    return "unknown";
}

std::string csv_header() {
    return "n,p,q,q_minus_p,has_property_c,rule,positivity";
}

std::string csv_row(const CyclicVerdict& v) {
    return std::to_string(v.spec.n) + "," + std::to_string(v.spec.p) + "," + std::to_string(v.spec.q) + "," +
           std::to_string(v.spec.q - v.spec.p) + "," + (v.has_property_c ? "true" : "false") + "," +
           rule_to_string(v.rule) + "," + (v.positive_by_criterion ? "PositiveByCriterion" : "Unknown");
}

}  // namespace permpos
