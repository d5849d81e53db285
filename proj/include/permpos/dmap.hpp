#pragma once

#include <vector>

#include "permpos/matrix.hpp"
#include "permpos/permutation.hpp"

namespace permpos {

/// D = (n-2) I + P_pi1 + P_pi2. Requires n >= 3 and both permutations on
/// n points. Every column sums to n.
DMatrix build_pair_d(int n, const Permutation& pi1, const Permutation& pi2);

/// D = (n-t) I + t P_pi for 0 <= t <= n.
DMatrix build_weighted_d(int n, double t, const Permutation& pi);

/// D = (n-k) I + P_pi + P_pi^2 + ... + P_pi^k for 1 <= k <= n-1.
DMatrix build_k_power_d(int n, int k, const Permutation& pi);

/// f_j = sum_i diag_i * d_ij (the row vector diag times D).
std::vector<double> f_vector(const DMatrix& d, const std::vector<double>& diag);

/// The D-type map: A -> diag(f_vector(d, diag A)) - A.
HermitianMatrix apply_map(const DMatrix& d, const HermitianMatrix& a);

}  // namespace permpos
