// permpos: positivity tools for D-type maps built from permutation pairs.
//
// Subcommands: propc, cyclic, check, apply, sweep. Output formats: text,
// json, csv. Exit codes: 0 completed; 1 a NotPositive witness was found
// while --expect-positive was set; 2 usage or parse error; 3 sweep
// disagreement. Stdout is byte-stable given identical inputs and seed;
// wall time goes to stderr.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "permpos/cyclic.hpp"
#include "permpos/dmap.hpp"
#include "permpos/io.hpp"
#include "permpos/numcheck.hpp"
#include "permpos/property_c.hpp"

using nlohmann::ordered_json;
using namespace permpos;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitExpectPositiveFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSweepDisagreement = 3;

struct RunConfig {
    std::uint64_t seed = 42;
    int starts = 64;
    int max_iters = 10000;
    double tol = 1e-12;
    int trials = 10000;
    std::string format = "text";
    bool expect_positive = false;
};

void add_common_flags(CLI::App* cmd, RunConfig& cfg, bool with_numeric_knobs = true) {
    cmd->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    if (with_numeric_knobs) {
        cmd->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
        cmd->add_option("--starts", cfg.starts, "Multistart count")->check(CLI::PositiveNumber)->capture_default_str();
        cmd->add_option("--iters", cfg.max_iters, "Max ascent iterations per start")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--tol", cfg.tol, "Ascent convergence tolerance")->capture_default_str();
        cmd->add_option("--trials", cfg.trials, "PSD sampling trials")->check(CLI::PositiveNumber)->capture_default_str();
    }
}

int thread_cap() {
    if (const char* env = std::getenv("PERMPOS_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) {
            return v;
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Work items are independent; results land in caller-owned slots indexed
// by i, so output order never depends on scheduling.
template <typename Fn>
void parallel_for(int count, Fn&& fn) {
    const int threads = std::min(thread_cap(), count);
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&next, count, &fn] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                fn(i);
            }
        });
    }
    for (std::thread& th : pool) {
        th.join();
    }
}

const char* method_name(OrbitMethod m) {
    switch (m) {
        case OrbitMethod::Singleton:
            return "singleton";
        case OrbitMethod::SizeTwoRule:
            return "size-two rule";
        case OrbitMethod::Matching:
            return "matching";
    }
    return "?";
}

std::string join_ints(const std::vector<int>& xs, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) {
            out += sep;
        }
        out += std::to_string(xs[i]);
    }
    return out;
}

ordered_json orbit_to_json(const OrbitVerdict& v) {
    ordered_json j;
    j["orbit"] = v.orbit;
    j["holds"] = v.holds;
    j["method"] = method_name(v.method);
    if (v.failing_index) {
        j["failing_index"] = *v.failing_index;
        j["hall_violator_targets"] = v.hall_violator_targets;
    }
    if (v.conditions) {
        ordered_json c;
        c["cond1"] = v.conditions->cond1;
        if (v.conditions->cond1_violation) {
            const Cond1Violation& w = *v.conditions->cond1_violation;
            c["cond1_violation"] = w.same_image
                                       ? ordered_json{{"kind", "same_image"}, {"i", w.i}}
                                       : ordered_json{{"kind", "equal_pairs"}, {"i", w.i}, {"j", w.j}};
        }
        if (v.conditions->cond2) {
            c["cond2"] = *v.conditions->cond2;
        }
        if (v.conditions->cond2_violation) {
            const Cond2Violation& w = *v.conditions->cond2_violation;
            c["cond2_violation"] =
                ordered_json{{"i", w.i}, {"j1", w.j1}, {"j2", w.j2}, {"chain", w.chain}};
        }
        j["conditions"] = std::move(c);
    }
    return j;
}

ordered_json report_to_json(const PropCReport& report) {
    ordered_json j;
    j["holds"] = report.holds;
    ordered_json orbits = ordered_json::array();
    for (const OrbitVerdict& v : report.per_orbit) {
        orbits.push_back(orbit_to_json(v));
    }
    j["per_orbit"] = std::move(orbits);
    return j;
}

ordered_json evidence_json(const SearchEvidence& e, VerdictKind kind) {
    ordered_json j;
    j["max_found"] = e.max_found;
    j["witness"] = e.witness;
    j["starts"] = e.starts;
    j["iterations"] = e.iterations;
    j["seed"] = e.seed;
    j["verdict"] = to_string(kind);
    return j;
}

void print_orbit_text(std::ostream& os, const OrbitVerdict& v) {
    os << "  orbit {" << join_ints(v.orbit) << "} [" << method_name(v.method) << "]: "
       << (v.holds ? "holds" : "fails");
    if (v.conditions) {
        os << " (cond1 " << (v.conditions->cond1 ? "true" : "false");
        if (v.conditions->cond2) {
            os << ", cond2 " << (*v.conditions->cond2 ? "true" : "false");
        }
        os << ")";
    }
    if (v.failing_index) {
        os << "; smallest failing index " << *v.failing_index << ", Hall-violating targets {"
           << join_ints(v.hall_violator_targets) << "}";
    }
    os << "\n";
}

struct NumericOutcome {
    Verdict maximize;
    PsdSampleResult psd;
    int trials = 0;
    double psd_tol = 1e-8;
};

NumericOutcome run_numeric(const DMatrix& d, const RunConfig& cfg) {
    NumericOutcome out;
    out.maximize = maximize_functional(
        d, MaximizeConfig{cfg.starts, cfg.max_iters, cfg.tol, cfg.seed});
    out.trials = cfg.trials;
    out.psd = psd_sample_verify(d, cfg.trials, out.psd_tol, cfg.seed);
    return out;
}

ordered_json numeric_to_json(const NumericOutcome& num) {
    ordered_json j;
    j["maximize"] = evidence_json(num.maximize.evidence, num.maximize.kind);
    if (num.maximize.kind == VerdictKind::NotPositive) {
        j["maximize"]["witness_confirmed"] = num.maximize.witness->values();
        j["maximize"]["witness_value"] = num.maximize.witness_value;
    }
    ordered_json p;
    p["trials"] = num.trials;
    p["tol"] = num.psd_tol;
    p["min_eig_seen"] = num.psd.min_eig_seen;
    p["violations"] = num.psd.violations.size();
    j["psd_samples"] = std::move(p);
    return j;
}

void print_numeric_text(std::ostream& os, const NumericOutcome& num) {
    os << "numeric: max_found = " << num.maximize.evidence.max_found << " over "
       << num.maximize.evidence.starts << " starts (" << num.maximize.evidence.iterations
       << " iterations), verdict " << to_string(num.maximize.kind) << "\n";
    if (num.maximize.kind == VerdictKind::NotPositive) {
        os << "  witness t = [";
        const auto& w = num.maximize.witness->values();
        for (std::size_t i = 0; i < w.size(); ++i) {
            os << (i ? ", " : "") << w[i];
        }
        os << "], F = " << num.maximize.witness_value << "\n";
    }
    os << "  psd sampling: " << num.trials << " trials, min eigenvalue " << num.psd.min_eig_seen
       << ", violations " << num.psd.violations.size() << "\n";
}

// Criterion positive beats numeric; any confirmed witness forces
// NotPositive; otherwise Unknown.
std::pair<VerdictKind, std::string> final_verdict(bool criterion_positive, const NumericOutcome* num) {
    if (criterion_positive) {
        return {VerdictKind::PositiveByCriterion, "pair has property (C)"};
    }
    if (num != nullptr &&
        (num->maximize.kind == VerdictKind::NotPositive || !num->psd.violations.empty())) {
        return {VerdictKind::NotPositive, "falsification witness found"};
    }
    return {VerdictKind::Unknown, "no criterion applies and no witness found"};
}

int cmd_propc(const std::string& perm1, const std::string& perm2, bool numeric, const RunConfig& cfg) {
    const Permutation p1 = Permutation::parse(perm1);
    const Permutation p2 = Permutation::parse(perm2);
    const PermPair pair(p1, p2);
    const PropCReport report = has_property_c(pair);

    std::optional<NumericOutcome> num;
    if (numeric && pair.size() >= 3) {
        num = run_numeric(build_pair_d(pair.size(), p1, p2), cfg);
    }
    const auto [verdict, reason] = final_verdict(report.holds, num ? &*num : nullptr);

    if (cfg.format == "json") {
        ordered_json j;
        j["schema"] = 1;
        j["command"] = "propc";
        j["inputs"] = ordered_json{{"perm1", p1.to_string()}, {"perm2", p2.to_string()}};
        j["n"] = pair.size();
        j["property_c"] = report_to_json(report);
        j["numeric"] = num ? numeric_to_json(*num) : ordered_json(nullptr);
        j["verdict"] = to_string(verdict);
        j["reason"] = reason;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "pair: pi1 = " << p1.to_string() << "\n      pi2 = " << p2.to_string()
                  << "  (n = " << pair.size() << ")\n";
        std::cout << "minimal invariant subsets: " << report.per_orbit.size() << "\n";
        for (const OrbitVerdict& v : report.per_orbit) {
            print_orbit_text(std::cout, v);
        }
        std::cout << "property (C): " << (report.holds ? "holds" : "fails") << "\n";
        if (num) {
            print_numeric_text(std::cout, *num);
        }
        std::cout << "verdict: " << to_string(verdict) << " (" << reason << ")\n";
    }
    if (cfg.expect_positive && verdict == VerdictKind::NotPositive) {
        return kExitExpectPositiveFailed;
    }
    return kExitOk;
}

std::string rule_human(const CyclicRule& r) {
    switch (r.kind) {
        case CyclicRuleKind::QEqualsN:
            return "q = n (second power is the identity)";
        case CyclicRuleKind::QMinusPIsOne:
            return "q - p = 1 (adjacent powers)";
        case CyclicRuleKind::NoDivisibilityObstruction:
            return "gcd(q-p, n) = 1, no coprime pair (m, k) with m(q-p) = kn";
        case CyclicRuleKind::DivisibleAndPAligned:
            return "m(q-p) = kn with k=" + std::to_string(r.k) + ", m=" + std::to_string(r.m) +
                   " and p = n - d(q-p) at d=" + std::to_string(r.d);
        case CyclicRuleKind::OrbitReducedNoObstruction:
            return "splits into g0=" + std::to_string(r.g0) +
                   " sub-pairs with reduced gap coprime to the reduced size";
        case CyclicRuleKind::Fails:
            return "m(q-p) = kn with k=" + std::to_string(r.k) + ", m=" + std::to_string(r.m) +
                   " and no aligned d";
    }
    return "?";
}

ordered_json cyclic_verdict_json(const CyclicVerdict& v, bool with_fast_path) {
    ordered_json j;
    j["n"] = v.spec.n;
    j["p"] = v.spec.p;
    j["q"] = v.spec.q;
    j["q_minus_p"] = v.spec.q - v.spec.p;
    j["has_property_c"] = v.has_property_c;
    j["rule"] = rule_to_string(v.rule);
    j["positivity"] = v.positive_by_criterion ? "PositiveByCriterion" : "Unknown";
    if (with_fast_path) {
        const auto fp = fast_path_reason(v.spec);
        j["fast_path"] = fp ? ordered_json(fp->text) : ordered_json(nullptr);
    }
    return j;
}

int cmd_cyclic(int n, int p, int q, bool all, bool strict_lemma, const RunConfig& cfg) {
    if (all) {
        const std::vector<CyclicVerdict> rows = enumerate_cyclic(n);
        if (cfg.format == "csv") {
            std::cout << csv_header() << "\n";
            for (const CyclicVerdict& v : rows) {
                std::cout << csv_row(v) << "\n";
            }
        } else if (cfg.format == "json") {
            ordered_json j;
            j["schema"] = 1;
            j["command"] = "cyclic";
            j["n"] = n;
            ordered_json arr = ordered_json::array();
            for (const CyclicVerdict& v : rows) {
                arr.push_back(cyclic_verdict_json(v, false));
            }
            j["rows"] = std::move(arr);
            std::cout << j.dump(2) << "\n";
        } else {
            int positive = 0;
            for (const CyclicVerdict& v : rows) {
                positive += v.has_property_c;
            }
            std::cout << "n = " << n << ": " << rows.size() << " pairs, " << positive
                      << " with property (C)\n";
            std::cout << " q-p | property (C) at p            | fails at p\n";
            for (int gap = 1; gap < n; ++gap) {
                std::vector<int> yes, no;
                for (const CyclicVerdict& v : rows) {
                    if (v.spec.q - v.spec.p == gap) {
                        (v.has_property_c ? yes : no).push_back(v.spec.p);
                    }
                }
                std::ostringstream head;
                head.width(4);
                head << gap;
                std::string y = join_ints(yes);
                if (y.size() < 28) {
                    y.resize(28, ' ');
                }
                std::cout << head.str() << " | " << y << " | " << (no.empty() ? "-" : join_ints(no))
                          << "\n";
            }
            std::cout << "(rows with q = n appear under q-p = n-p and always qualify)\n";
        }
        return kExitOk;
    }

    const CyclicPairSpec spec(n, p, q);
    if (strict_lemma && q == n) {
        throw std::invalid_argument("--strict-lemma: q = n is outside the q < n closed-form path");
    }
    const CyclicVerdict v = cyclic_has_property_c(spec);
    if (cfg.format == "csv") {
        std::cout << csv_header() << "\n" << csv_row(v) << "\n";
    } else if (cfg.format == "json") {
        ordered_json j;
        j["schema"] = 1;
        j["command"] = "cyclic";
        const ordered_json row = cyclic_verdict_json(v, true);
        for (const auto& [key, value] : row.items()) {
            j[key] = value;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "n=" << n << " p=" << p << " q=" << q << " (q-p=" << q - p << "): property (C) "
                  << (v.has_property_c ? "true" : "false") << "\n";
        std::cout << "rule: " << rule_human(v.rule) << "\n";
        if (const auto fp = fast_path_reason(spec)) {
            std::cout << "fast path: " << fp->text << "\n";
        }
        std::cout << "positivity: " << (v.positive_by_criterion ? "PositiveByCriterion" : "Unknown")
                  << "\n";
    }
    if (cfg.expect_positive && !v.positive_by_criterion) {
        return kExitExpectPositiveFailed;
    }
    return kExitOk;
}

int cmd_check(const std::string& d_file, const RunConfig& cfg) {
    const DMatrix d = dmatrix_from_file(d_file);
    const NumericOutcome num = run_numeric(d, cfg);
    const auto [verdict, reason] = final_verdict(false, &num);

    if (cfg.format == "json") {
        ordered_json j;
        j["schema"] = 1;
        j["command"] = "check";
        j["input"] = d_file;
        j["n"] = d.size();
        const ordered_json nj = numeric_to_json(num);
        for (const auto& [key, value] : nj.items()) {
            j[key] = value;
        }
        j["verdict"] = to_string(verdict);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "D: " << d.size() << "x" << d.size() << " from " << d_file << "\n";
        print_numeric_text(std::cout, num);
        std::cout << "verdict: " << to_string(verdict) << " (" << reason << ")\n";
    }
    if (cfg.expect_positive && verdict == VerdictKind::NotPositive) {
        return kExitExpectPositiveFailed;
    }
    return kExitOk;
}

int cmd_apply(const std::string& d_file, const std::string& matrix_file, const RunConfig& cfg) {
    const DMatrix d = dmatrix_from_file(d_file);
    const HermitianMatrix a = hermitian_from_file(matrix_file);
    const HermitianMatrix phi = apply_map(d, a);
    const double min_eig = min_eigenvalue_hermitian(phi);

    if (cfg.format == "text") {
        const int n = phi.size();
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const std::complex<double> z = phi(i, j);
                std::cout << (j ? "  " : "") << z.real();
                if (z.imag() != 0.0) {
                    std::cout << (z.imag() > 0 ? "+" : "") << z.imag() << "i";
                }
            }
            std::cout << "\n";
        }
        std::cout << "min eigenvalue: " << min_eig << "\n";
    } else {
        ordered_json out;
        out["schema"] = 1;
        out["command"] = "apply";
        out["phi"] = ordered_json::parse(hermitian_to_json(phi));
        out["min_eigenvalue"] = min_eig;
        std::cout << out.dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_sweep(int n_max, bool allow_large, const RunConfig& cfg) {
    if (n_max < 3) {
        throw std::invalid_argument("sweep: --n-max must be at least 3");
    }
    if (n_max > 12 && !allow_large) {
        throw std::invalid_argument("sweep: --n-max above 12 requires --allow-large");
    }
    struct Row {
        int n, p, q;
        bool closed, brute;
    };
    std::vector<Row> rows;
    for (int n = 3; n <= n_max; ++n) {
        for (int p = 1; p < n; ++p) {
            for (int q = p + 1; q <= n; ++q) {
                rows.push_back(Row{n, p, q, false, false});
            }
        }
    }
    parallel_for(static_cast<int>(rows.size()), [&rows](int i) {
        Row& r = rows[i];
        r.closed = cyclic_has_property_c(CyclicPairSpec(r.n, r.p, r.q)).has_property_c;
        const Permutation shift = Permutation::cyclic_shift(r.n);
        r.brute = has_property_c(PermPair(power(shift, r.p), power(shift, r.q))).holds;
    });

    int disagreements = 0;
    const auto flag = [](bool b) { return b ? "true" : "false"; };
    if (cfg.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const Row& r : rows) {
            if (r.closed != r.brute) {
                ++disagreements;
            }
            arr.push_back(ordered_json{{"n", r.n},
                                       {"p", r.p},
                                       {"q", r.q},
                                       {"closed_form", r.closed},
                                       {"brute_force", r.brute},
                                       {"agree", r.closed == r.brute}});
        }
        ordered_json j;
        j["schema"] = 1;
        j["command"] = "sweep";
        j["n_max"] = n_max;
        j["rows"] = std::move(arr);
        j["disagreements"] = disagreements;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "n,p,q,closed_form,brute_force,agree\n";
        for (const Row& r : rows) {
            const bool agree = r.closed == r.brute;
            if (!agree) {
                ++disagreements;
            }
            std::cout << r.n << "," << r.p << "," << r.q << "," << flag(r.closed) << ","
                      << flag(r.brute) << "," << flag(agree) << "\n";
        }
    }
    std::cerr << "sweep: " << rows.size() << " triples, " << disagreements << " disagreements\n";
    return disagreements == 0 ? kExitOk : kExitSweepDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"positivity tools for D-type maps built from permutation pairs"};
    app.require_subcommand(1);

    RunConfig cfg;

    std::string perm1, perm2;
    bool numeric = false;
    CLI::App* propc = app.add_subcommand("propc", "decide property (C) for a permutation pair");
    propc->add_option("--perm1", perm1, "first permutation, 1-based image, e.g. 2,3,4,5,1")->required();
    propc->add_option("--perm2", perm2, "second permutation")->required();
    propc->add_flag("--numeric", numeric, "also run the numeric check on the induced D matrix");
    propc->add_flag("--expect-positive", cfg.expect_positive, "exit 1 on a NotPositive verdict");
    add_common_flags(propc, cfg);

    int n = 0, p = 0, q = 0;
    bool all = false, strict_lemma = false;
    CLI::App* cyclic = app.add_subcommand("cyclic", "closed-form classification of shift-power pairs");
    cyclic->add_option("--n", n, "ground-set size (>= 3)")->required();
    cyclic->add_option("--p", p, "first exponent");
    cyclic->add_option("--q", q, "second exponent");
    cyclic->add_flag("--all", all, "classify every 1 <= p < q <= n");
    cyclic->add_flag("--strict-lemma", strict_lemma, "reject q = n (stay on the q < n closed form)");
    cyclic->add_flag("--expect-positive", cfg.expect_positive, "exit 1 when the criterion fails");
    add_common_flags(cyclic, cfg, false);

    std::string d_file, matrix_file;
    CLI::App* check = app.add_subcommand("check", "numeric positivity check of a D matrix file");
    check->add_option("--d-file", d_file, "DMatrix JSON file")->required();
    check->add_flag("--expect-positive", cfg.expect_positive, "exit 1 on a NotPositive verdict");
    add_common_flags(check, cfg);

    CLI::App* apply = app.add_subcommand("apply", "apply the map of a D matrix to a Hermitian matrix");
    apply->add_option("--d-file", d_file, "DMatrix JSON file")->required();
    apply->add_option("--matrix-file", matrix_file, "Hermitian JSON file")->required();
    add_common_flags(apply, cfg, false);

    int n_max = 8;
    bool allow_large = false;
    CLI::App* sweep = app.add_subcommand("sweep", "closed form vs brute force over all (n, p, q)");
    sweep->add_option("--n-max", n_max, "largest n to sweep")->capture_default_str();
    sweep->add_flag("--allow-large", allow_large, "permit n-max above 12");
    add_common_flags(sweep, cfg, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const auto started = std::chrono::steady_clock::now();
    int rc = kExitOk;
    try {
        if (propc->parsed()) {
            rc = cmd_propc(perm1, perm2, numeric, cfg);
        } else if (cyclic->parsed()) {
            if (!all && (p == 0 || q == 0)) {
                std::cerr << "error: provide --p and --q, or --all\n";
                return kExitUsage;
            }
            rc = cmd_cyclic(n, p, q, all, strict_lemma, cfg);
        } else if (check->parsed()) {
            rc = cmd_check(d_file, cfg);
        } else if (apply->parsed()) {
            rc = cmd_apply(d_file, matrix_file, cfg);
        } else if (sweep->parsed()) {
            rc = cmd_sweep(n_max, allow_large, cfg);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
    std::cerr << "wall_time_ms=" << elapsed.count() << "\n";
    return rc;
}
