#pragma once

#include <complex>
#include <vector>

namespace permpos {

/// Dense n-by-n matrix with nonnegative real entries. This is the data of a
/// D-type map: the map sends a Hermitian A to diag(f) - A where
/// f_j = sum_i a_ii * d_ij.
///
/// Convention (fixed project-wide): for a permutation pi, the associated
/// permutation matrix has entry (i, j) = 1 exactly when i = pi(j), i.e.
/// column j carries its single 1 at row pi(j). Transposing silently turns
/// f_j = d_jj*a_jj + a_{pi(j),pi(j)} into the inverse-permutation form, so
/// every builder in this project sticks to the column convention above.
class DMatrix {
public:
    /// Row-major entries; throws std::invalid_argument on negative entries
    /// or a size mismatch.
    DMatrix(int n, std::vector<double> entries);

    static DMatrix zero(int n);
    static DMatrix scaled_identity(int n, double value);

    int size() const { return n_; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const std::vector<double>& entries() const { return a_; }

    double column_sum(int j) const;

    bool operator==(const DMatrix&) const = default;

private:
    int n_;
    std::vector<double> a_;
};

/// Complex Hermitian n-by-n matrix. Construction verifies that the entries
/// equal their conjugate transpose within 1e-12 absolute and symmetrizes
/// the tiny residue away, so downstream code can rely on exact hermiticity.
class HermitianMatrix {
public:
    static constexpr double kHermTol = 1e-12;

    /// Row-major entries; throws std::invalid_argument when the matrix is
    /// farther than kHermTol from Hermitian.
    HermitianMatrix(int n, std::vector<std::complex<double>> entries);

    static HermitianMatrix identity(int n);
    static HermitianMatrix diagonal(const std::vector<double>& d);
    /// Rank-one projector-style input x x* (x need not be normalized).
    static HermitianMatrix outer(const std::vector<std::complex<double>>& x);

    int size() const { return n_; }
    std::complex<double> operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * n_ + j];
    }
    const std::vector<std::complex<double>>& entries() const { return a_; }

    /// Real parts of the diagonal (imaginary residue is bounded by the
    /// construction-time hermiticity check).
    std::vector<double> real_diagonal() const;

private:
    int n_;
    std::vector<std::complex<double>> a_;
};

}  // namespace permpos
