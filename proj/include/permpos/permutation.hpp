#pragma once

#include <string>
#include <vector>

#include "permpos/matrix.hpp"

namespace permpos {

/// A bijection of {1..n}. All I/O and reporting is 1-based; the in-memory
/// representation is 0-based. Immutable after construction.
class Permutation {
public:
    /// image[j] = pi(j+1), values in {1..n}. Throws std::invalid_argument
    /// unless the sequence is a bijection of {1..n}.
    static Permutation from_one_based(const std::vector<int>& image);

    static Permutation identity(int n);

    /// The cyclic shift i -> i + 1 (mod n).
    static Permutation cyclic_shift(int n);

    /// Parses the comma-separated 1-based image form, e.g. "2,3,4,5,1".
    static Permutation parse(const std::string& text);

    int size() const { return static_cast<int>(img_.size()); }

    /// pi(j), 0-based.
    int apply(int j) const { return img_[j]; }
    /// pi^{-1}(v), 0-based.
    int apply_inverse(int v) const { return inv_[v]; }

    bool is_identity() const;

    std::vector<int> one_based_image() const;
    /// Comma-separated 1-based image, the inverse of parse().
    std::string to_string() const;

    bool operator==(const Permutation&) const = default;

private:
    explicit Permutation(std::vector<int> zero_based);

    std::vector<int> img_;
    std::vector<int> inv_;
};

/// result(j) = sigma(tau(j)). Throws on a ground-set size mismatch.
Permutation compose(const Permutation& sigma, const Permutation& tau);

Permutation inverse(const Permutation& pi);

/// k-fold composition, power(pi, 0) = identity. k >= 0.
Permutation power(const Permutation& pi, long long k);

struct CycleDecomposition {
    /// Disjoint cycles covering {1..n}; 1-based, each cycle listed from its
    /// smallest element, cycles ordered by smallest element.
    std::vector<std::vector<int>> cycles;
    /// Length of the longest cycle.
    int max_len = 0;
};

CycleDecomposition cycle_decomposition(const Permutation& pi);

/// 0/1 matrix with entry (i, j) = 1 exactly when i = pi(j); see the
/// convention note on DMatrix.
DMatrix permutation_matrix(const Permutation& pi);

struct OrbitDecomposition {
    /// Disjoint sets covering {1..n}; 1-based, each sorted ascending,
    /// ordered by smallest element.
    std::vector<std::vector<int>> orbits;
};

/// Orbits of the group generated by {pi1, pi2}: the minimal subsets
/// invariant under both permutations.
OrbitDecomposition minimal_invariant_subsets(const Permutation& pi1, const Permutation& pi2);

struct RestrictedPermutation {
    /// The restricted action on a relabeled ground set {1..orbit size},
    /// labels assigned in increasing original order.
    Permutation perm;
    /// original_index[r] = original 1-based index of relabeled point r+1.
    std::vector<int> original_index;
};

/// Restriction of pi to an invariant index set (1-based). Throws when the
/// set is not invariant under pi.
RestrictedPermutation restrict_to(const Permutation& pi, const std::vector<int>& orbit_one_based);

}  // namespace permpos
