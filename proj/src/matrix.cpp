#include "permpos/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace permpos {

DMatrix::DMatrix(int n, std::vector<double> entries) : n_(n), a_(std::move(entries)) {
    if (n_ <= 0) {
        throw std::invalid_argument("DMatrix: size must be positive");
    }
    if (a_.size() != static_cast<std::size_t>(n_) * n_) {
        throw std::invalid_argument("DMatrix: entry count does not match size");
    }
    for (double v : a_) {
        if (!(v >= 0.0)) {  // also rejects NaN
            throw std::invalid_argument("DMatrix: entries must be nonnegative");
        }
    }
}

DMatrix DMatrix::zero(int n) {
    return DMatrix(n, std::vector<double>(static_cast<std::size_t>(n) * n, 0.0));
}

DMatrix DMatrix::scaled_identity(int n, double value) {
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        a[static_cast<std::size_t>(i) * n + i] = value;
    }
    return DMatrix(n, std::move(a));
}

double DMatrix::column_sum(int j) const {
    double s = 0.0;
    for (int i = 0; i < n_; ++i) {
        s += (*this)(i, j);
    }
    return s;
}

HermitianMatrix::HermitianMatrix(int n, std::vector<std::complex<double>> entries)
    : n_(n), a_(std::move(entries)) {
    if (n_ <= 0) {
        throw std::invalid_argument("HermitianMatrix: size must be positive");
    }
    if (a_.size() != static_cast<std::size_t>(n_) * n_) {
        throw std::invalid_argument("HermitianMatrix: entry count does not match size");
    }
    for (int i = 0; i < n_; ++i) {
        for (int j = i; j < n_; ++j) {
            const std::complex<double> upper = a_[static_cast<std::size_t>(i) * n_ + j];
            const std::complex<double> lower = a_[static_cast<std::size_t>(j) * n_ + i];
            if (std::abs(upper - std::conj(lower)) > kHermTol) {
                throw std::invalid_argument("HermitianMatrix: entries are not Hermitian within 1e-12 at (" +
                                            std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            }
        }
    }
    // Symmetrize the residue so callers see exact hermiticity.
    for (int i = 0; i < n_; ++i) {
        a_[static_cast<std::size_t>(i) * n_ + i] = a_[static_cast<std::size_t>(i) * n_ + i].real();
        for (int j = i + 1; j < n_; ++j) {
            const std::complex<double> mean =
                0.5 * (a_[static_cast<std::size_t>(i) * n_ + j] +
                       std::conj(a_[static_cast<std::size_t>(j) * n_ + i]));
            a_[static_cast<std::size_t>(i) * n_ + j] = mean;
            a_[static_cast<std::size_t>(j) * n_ + i] = std::conj(mean);
        }
    }
}

HermitianMatrix HermitianMatrix::identity(int n) {
    std::vector<std::complex<double>> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        a[static_cast<std::size_t>(i) * n + i] = 1.0;
    }
    return HermitianMatrix(n, std::move(a));
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& d) {
    const int n = static_cast<int>(d.size());
    std::vector<std::complex<double>> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        a[static_cast<std::size_t>(i) * n + i] = d[i];
    }
    return HermitianMatrix(n, std::move(a));
}

HermitianMatrix HermitianMatrix::outer(const std::vector<std::complex<double>>& x) {
    const int n = static_cast<int>(x.size());
    std::vector<std::complex<double>> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            a[static_cast<std::size_t>(i) * n + j] = x[i] * std::conj(x[j]);
        }
    }
    return HermitianMatrix(n, std::move(a));
}

std::vector<double> HermitianMatrix::real_diagonal() const {
    std::vector<double> d(n_);
    for (int i = 0; i < n_; ++i) {
        d[i] = (*this)(i, i).real();
    }
    return d;
}

}  // namespace permpos
