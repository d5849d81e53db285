#include "permpos/property_c.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace permpos {

namespace {

// One feasibility subproblem of the choice property: excluded index i,
// left nodes j != i, targets pi1(j), pi2(j) restricted to values != i.
// All indices 0-based.
struct ExclusionGraph {
    int n = 0;
    int excluded = 0;
    std::vector<std::array<int, 2>> targets;  // per left j; -1 for a dropped edge

    ExclusionGraph(const Permutation& p1, const Permutation& p2, int i) : n(p1.size()), excluded(i) {
        targets.assign(n, {-1, -1});
        for (int j = 0; j < n; ++j) {
            if (j == i) {
                continue;
            }
            const int a = p1.apply(j);
            const int b = p2.apply(j);
            if (a != i) {
                targets[j][0] = a;
            }
            if (b != i && b != a) {
                targets[j][1] = b;
            }
        }
    }
};

// Kuhn augmenting-path matching; left degree <= 2 keeps this tiny.
bool try_augment(const ExclusionGraph& g, int j, std::vector<char>& seen, std::vector<int>& owner) {
    for (const int v : g.targets[j]) {
        if (v < 0 || seen[v]) {
            continue;
        }
        seen[v] = 1;
        if (owner[v] < 0 || try_augment(g, owner[v], seen, owner)) {
            owner[v] = j;
            return true;
        }
    }
    return false;
}

struct MatchOutcome {
    bool perfect = false;
    std::vector<int> hall_targets;  // neighborhood of an unmatchable left set, 0-based
};

MatchOutcome match_excluding(const Permutation& p1, const Permutation& p2, int i) {
    const ExclusionGraph g(p1, p2, i);
    std::vector<int> owner(g.n, -1);  // owner[v] = left node matched to value v
    int matched = 0;
    int stuck = -1;
    for (int j = 0; j < g.n; ++j) {
        if (j == i) {
            continue;
        }
        std::vector<char> seen(g.n, 0);
        if (try_augment(g, j, seen, owner)) {
            ++matched;
        } else if (stuck < 0) {
            stuck = j;
        }
    }
    MatchOutcome out;
    out.perfect = (matched == g.n - 1);
    if (!out.perfect) {
        // Alternating reachability from the first stuck left node yields a
        // left set whose whole neighborhood is smaller than the set itself.
        std::vector<char> left_in(g.n, 0), right_in(g.n, 0);
        std::vector<int> stack{stuck};
        left_in[stuck] = 1;
        while (!stack.empty()) {
            const int j = stack.back();
            stack.pop_back();
            for (const int v : g.targets[j]) {
                if (v < 0 || right_in[v]) {
                    continue;
                }
                right_in[v] = 1;
                const int o = owner[v];
                if (o >= 0 && !left_in[o]) {
                    left_in[o] = 1;
                    stack.push_back(o);
                }
            }
        }
        for (int v = 0; v < g.n; ++v) {
            if (right_in[v]) {
                out.hall_targets.push_back(v);
            }
        }
    }
    return out;
}

// Decides the choice property on a whole (sub)pair by matching, and
// reports the smallest failing excluded index with its Hall witness.
struct PairDecision {
    bool holds = true;
    int failing_index = -1;           // 0-based
    std::vector<int> hall_targets;    // 0-based
};

PairDecision decide_by_matching(const Permutation& p1, const Permutation& p2) {
    PairDecision out;
    for (int i = 0; i < p1.size(); ++i) {
        MatchOutcome m = match_excluding(p1, p2, i);
        if (!m.perfect) {
            out.holds = false;
            out.failing_index = i;
            out.hall_targets = std::move(m.hall_targets);
            return out;
        }
    }
    return out;
}

void require_single_orbit(const PermPair& pair, const char* who) {
    if (!pair.single_orbit()) {
        throw std::invalid_argument(std::string(who) + ": pair must have a single minimal invariant subset");
    }
}

std::pair<bool, std::optional<Cond1Violation>> condition1_impl(const Permutation& p1, const Permutation& p2) {
    const int n = p1.size();
    std::vector<int> first_seen(static_cast<std::size_t>(n) * n, -1);
    for (int i = 0; i < n; ++i) {
        const int a = p1.apply(i);
        const int b = p2.apply(i);
        if (a == b) {
            return {false, Cond1Violation{i + 1, i + 1, true}};
        }
        const std::size_t key = static_cast<std::size_t>(std::min(a, b)) * n + std::max(a, b);
        if (first_seen[key] >= 0) {
            return {false, Cond1Violation{first_seen[key] + 1, i + 1, false}};
        }
        first_seen[key] = i;
    }
    return {true, std::nullopt};
}

std::pair<bool, std::optional<Cond2Violation>> condition2_impl(const Permutation& p1, const Permutation& p2) {
    const int n = p1.size();
    for (int i = 0; i < n; ++i) {
        if (p1.apply(i) == i || p2.apply(i) == i) {
            continue;  // a fixed image makes the choice for i immediate
        }
        const int j1 = p2.apply_inverse(i);
        const int j2 = p1.apply_inverse(i);
        if (j1 == j2) {
            continue;  // only possible when condition (1) already failed
        }
        // Iterate x -> pi2^{-1}(pi1(x)) starting past j1. Hitting i kills
        // every longer chain; hitting j2 immediately is the two-step
        // collision that condition (1) owns.
        std::vector<int> chain;
        int x = p2.apply_inverse(p1.apply(j1));
        for (int step = 0; step < n; ++step) {
            if (x == i || x == j1 || x == j2) {
                break;
            }
            chain.push_back(x);
            const int next = p2.apply_inverse(p1.apply(x));
            if (next == j2) {
                Cond2Violation v;
                v.i = i + 1;
                v.j1 = j1 + 1;
                v.j2 = j2 + 1;
                for (const int c : chain) {
                    v.chain.push_back(c + 1);
                }
                return {false, std::move(v)};
            }
            x = next;
        }
    }
    return {true, std::nullopt};
}

std::vector<int> map_to_original(const std::vector<int>& relabeled, const std::vector<int>& original_index) {
    std::vector<int> out;
    out.reserve(relabeled.size());
    for (const int r : relabeled) {
        out.push_back(original_index[r - 1]);
    }
    return out;
}

}  // namespace

PermPair::PermPair(Permutation pi1, Permutation pi2) : pi1_(std::move(pi1)), pi2_(std::move(pi2)) {
    if (pi1_.size() != pi2_.size()) {
        throw std::invalid_argument("PermPair: ground-set sizes differ");
    }
    orbits_ = minimal_invariant_subsets(pi1_, pi2_);
}

PropCReport has_property_c_bruteforce(const PermPair& pair) {
    const PairDecision d = decide_by_matching(pair.pi1(), pair.pi2());
    OrbitVerdict verdict;
    verdict.orbit.resize(pair.size());
    std::iota(verdict.orbit.begin(), verdict.orbit.end(), 1);
    verdict.holds = d.holds;
    verdict.method = OrbitMethod::Matching;
    if (!d.holds) {
        verdict.failing_index = d.failing_index + 1;
        for (const int v : d.hall_targets) {
            verdict.hall_violator_targets.push_back(v + 1);
        }
    }
    PropCReport report;
    report.holds = d.holds;
    report.per_orbit.push_back(std::move(verdict));
    return report;
}

std::pair<bool, std::optional<Cond1Violation>> check_prop35_condition1(const PermPair& pair) {
    require_single_orbit(pair, "check_prop35_condition1");
    return condition1_impl(pair.pi1(), pair.pi2());
}

std::pair<bool, std::optional<Cond2Violation>> check_prop35_condition2(const PermPair& pair) {
    require_single_orbit(pair, "check_prop35_condition2");
    return condition2_impl(pair.pi1(), pair.pi2());
}

PropCReport has_property_c(const PermPair& pair) {
    PropCReport report;
    report.holds = true;
    for (const std::vector<int>& orbit : pair.orbits().orbits) {
        OrbitVerdict verdict;
        verdict.orbit = orbit;
        if (orbit.size() == 1) {
            verdict.holds = true;
            verdict.method = OrbitMethod::Singleton;
        } else {
            const RestrictedPermutation r1 = restrict_to(pair.pi1(), orbit);
            const RestrictedPermutation r2 = restrict_to(pair.pi2(), orbit);
            if (orbit.size() == 2) {
                verdict.method = OrbitMethod::SizeTwoRule;
                verdict.holds = r1.perm.is_identity() != r2.perm.is_identity();
                if (!verdict.holds) {
                    verdict.failing_index = orbit[0];
                }
            } else {
                verdict.method = OrbitMethod::Matching;
                const PairDecision d = decide_by_matching(r1.perm, r2.perm);
                verdict.holds = d.holds;
                if (!d.holds) {
                    verdict.failing_index = r1.original_index[d.failing_index];
                    std::vector<int> relabeled;
                    for (const int v : d.hall_targets) {
                        relabeled.push_back(v + 1);
                    }
                    verdict.hall_violator_targets = map_to_original(relabeled, r1.original_index);
                }
                Prop35Conditions conditions;
                auto [c1, v1] = condition1_impl(r1.perm, r2.perm);
                conditions.cond1 = c1;
                if (v1) {
                    conditions.cond1_violation =
                        Cond1Violation{r1.original_index[v1->i - 1], r1.original_index[v1->j - 1], v1->same_image};
                }
                if (c1) {
                    auto [c2, v2] = condition2_impl(r1.perm, r2.perm);
                    conditions.cond2 = c2;
                    if (v2) {
                        Cond2Violation mapped;
                        mapped.i = r1.original_index[v2->i - 1];
                        mapped.j1 = r1.original_index[v2->j1 - 1];
                        mapped.j2 = r1.original_index[v2->j2 - 1];
                        mapped.chain = map_to_original(v2->chain, r1.original_index);
                        conditions.cond2_violation = std::move(mapped);
                    }
                }
                verdict.conditions = std::move(conditions);
            }
        }
        report.holds = report.holds && verdict.holds;
        report.per_orbit.push_back(std::move(verdict));
    }
    return report;
}

}  // namespace permpos
