#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permpos/matrix.hpp"

namespace permpos {

/// A point of the probability simplex: t_i >= 0 with sum 1 within 1e-12.
/// t_i stands for |u_i|^2 of a unit vector u; phases are irrelevant to the
/// positivity functional because it depends on moduli only.
class SimplexPoint {
public:
    static constexpr double kSumTol = 1e-12;

    /// Throws std::invalid_argument on negative entries or a sum away
    /// from 1 by more than kSumTol.
    explicit SimplexPoint(std::vector<double> t);

    static SimplexPoint uniform(int n);
    static SimplexPoint vertex(int n, int j);  // j 0-based
    /// Scales a nonnegative, not identically zero vector onto the simplex.
    static SimplexPoint normalized(std::vector<double> weights);

    int size() const { return static_cast<int>(t_.size()); }
    const std::vector<double>& values() const { return t_; }
    double operator[](int i) const { return t_[i]; }

private:
    std::vector<double> t_;
};

/// The positivity functional F(t) = sum_{j : t_j > 0} t_j / f_j(t) with
/// f_j(t) = sum_i d_ij t_i. The map of D is positive exactly when
/// sup F <= 1 over the simplex. Returns +infinity when some supported
/// coordinate has f_j(t) = 0 (such a point already falsifies positivity).
double positivity_functional(const DMatrix& d, const SimplexPoint& t);

struct MaximizeConfig {
    int starts = 64;
    int max_iters = 10000;
    double tol = 1e-12;
    std::uint64_t seed = 42;
};

struct SearchEvidence {
    double max_found = 0.0;
    std::vector<double> witness;  // simplex point attaining max_found
    int starts = 0;
    long long iterations = 0;
    std::uint64_t seed = 0;
};

enum class VerdictKind { PositiveByCriterion, NotPositive, Unknown };

/// Trichotomy verdict. Numerical search can certify NON-positivity exactly
/// (a witness re-evaluates above 1 and the mapped rank-one input has a
/// negative eigenvalue); it never certifies positivity, so its favorable
/// outcome is Unknown with evidence. PositiveByCriterion verdicts come
/// from the exact criteria.
struct Verdict {
    VerdictKind kind = VerdictKind::Unknown;
    std::string reason;                    // set for PositiveByCriterion
    std::optional<SimplexPoint> witness;   // set for NotPositive
    double witness_value = 0.0;            // F at the witness
    SearchEvidence evidence;

    static Verdict positive_by_criterion(std::string why);
};

const char* to_string(VerdictKind kind);

/// Multistart ascent over the open simplex (softmax reparameterization to
/// an unconstrained space), all single-coordinate vertices evaluated
/// exactly, and every boundary face visited: exhaustively over support
/// subsets for n <= 8, by random sparse supports for larger n. Returns
/// NotPositive only when the best value clears 1 + max(1e-8, 10 tol) AND
/// the eigenvalue cross-check at the witness confirms a negative
/// eigenvalue below -1e-10; otherwise Unknown with search evidence.
/// Deterministic given (seed, starts, max_iters).
Verdict maximize_functional(const DMatrix& d, const MaximizeConfig& cfg);

struct PsdViolation {
    std::vector<std::complex<double>> x;  // unit vector
    double eig;                           // offending eigenvalue of the mapped x x*
};

struct PsdSampleResult {
    double min_eig_seen = 0.0;
    std::vector<PsdViolation> violations;
};

/// Samples random complex unit vectors x, applies the map of d to x x*,
/// and records every eigenvalue below -tol. Deterministic given seed.
PsdSampleResult psd_sample_verify(const DMatrix& d, int trials, double tol, std::uint64_t seed);

/// Smallest eigenvalue via cyclic complex Jacobi rotations; accurate to
/// about 1e-9 relative for the small dense matrices used here.
double min_eigenvalue_hermitian(const HermitianMatrix& h);

/// sup of sum_i 1/(s + u_i) over u_i > 0 with product u_1...u_m = M^m:
/// max{(m-1)/s, m/(s+M)}.
double product_constrained_sup(double s, double M, int m);

/// Upper bound max{(n-1)/(s-k), n/s} for the cyclic-like sum
/// sum_i 1/(s - k + x_1i + ... + x_ki) with unit row products.
/// Requires s > k >= 1.
double row_product_sum_bound(double s, int k, int n);

/// Closed-form extremum values delta_r of the constrained sum.
struct ExtremumTable {
    double s = 0.0;
    double k = 0.0;
    int n = 0;
    /// r -> delta_r for floor(n/2)+1 <= r <= n, plus r = n/2 when n even.
    std::map<int, double> delta;
};

/// delta_r = (r (s-k)^e + (n-r) k^e) / ((s-k)((s-k)^e + k^e)) with
/// e = n/(2r-n); delta_n = n/s exactly; delta_{n/2} = n/s when n is even.
/// Requires s > k > 0.
ExtremumTable delta_table(double s, double k, int n);

/// psi(n) = (n-2) (n-3)^{-(n-2)/n} for n >= 4; psi(4) = 2 exactly.
double psi(int n);

}  // namespace permpos
