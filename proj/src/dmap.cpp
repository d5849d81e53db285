#include "permpos/dmap.hpp"

#include <stdexcept>

namespace permpos {

namespace {

void add_permutation_ones(std::vector<double>& a, const Permutation& pi, double weight) {
    const int n = pi.size();
    for (int j = 0; j < n; ++j) {
        a[static_cast<std::size_t>(pi.apply(j)) * n + j] += weight;
    }
}

}  // namespace

DMatrix build_pair_d(int n, const Permutation& pi1, const Permutation& pi2) {
    if (n < 3) {
        throw std::invalid_argument("build_pair_d: n must be at least 3");
    }
    if (pi1.size() != n || pi2.size() != n) {
        throw std::invalid_argument("build_pair_d: permutations must act on n points");
    }
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        a[static_cast<std::size_t>(i) * n + i] = static_cast<double>(n - 2);
    }
    add_permutation_ones(a, pi1, 1.0);
    add_permutation_ones(a, pi2, 1.0);
    return DMatrix(n, std::move(a));
}

DMatrix build_weighted_d(int n, double t, const Permutation& pi) {
    if (pi.size() != n) {
        throw std::invalid_argument("build_weighted_d: permutation must act on n points");
    }
    if (!(t >= 0.0 && t <= static_cast<double>(n))) {
        throw std::invalid_argument("build_weighted_d: t must lie in [0, n]");
    }
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        a[static_cast<std::size_t>(i) * n + i] = static_cast<double>(n) - t;
    }
    add_permutation_ones(a, pi, t);
    return DMatrix(n, std::move(a));
}

DMatrix build_k_power_d(int n, int k, const Permutation& pi) {
    if (pi.size() != n) {
        throw std::invalid_argument("build_k_power_d: permutation must act on n points");
    }
    if (k < 1 || k > n - 1) {
        throw std::invalid_argument("build_k_power_d: k must lie in 1..n-1");
    }
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        a[static_cast<std::size_t>(i) * n + i] = static_cast<double>(n - k);
    }
    Permutation pw = pi;
    for (int j = 1; j <= k; ++j) {
        add_permutation_ones(a, pw, 1.0);
        if (j < k) {
            pw = compose(pw, pi);
        }
    }
    return DMatrix(n, std::move(a));
}

std::vector<double> f_vector(const DMatrix& d, const std::vector<double>& diag) {
    const int n = d.size();
    if (static_cast<int>(diag.size()) != n) {
        throw std::invalid_argument("f_vector: diagonal length does not match the matrix size");
    }
    std::vector<double> f(n, 0.0);
    for (int i = 0; i < n; ++i) {
        const double di = diag[i];
        if (di == 0.0) {
            continue;
        }
        for (int j = 0; j < n; ++j) {
            f[j] += di * d(i, j);
        }
    }
    return f;
}

HermitianMatrix apply_map(const DMatrix& d, const HermitianMatrix& a) {
    const int n = d.size();
    if (a.size() != n) {
        throw std::invalid_argument("apply_map: matrix sizes differ");
    }
    const std::vector<double> f = f_vector(d, a.real_diagonal());
    std::vector<std::complex<double>> out(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            out[static_cast<std::size_t>(i) * n + j] = 0.0 - a(i, j);  // +0.0 normalizes -0
        }
        out[static_cast<std::size_t>(i) * n + i] += f[i];
    }
    return HermitianMatrix(n, std::move(out));
}

}  // namespace permpos
