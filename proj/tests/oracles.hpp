#pragma once

// Test-only oracles, independent of the library's implementation paths:
// direct choice enumeration for the property-(C) definition, subset-level
// Hall checking, grid search over the simplex, log-grid search for the
// constrained cyclic sums, and a power-iteration eigenvalue route.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "permpos/matrix.hpp"
#include "permpos/permutation.hpp"

namespace oracles {

inline permpos::Permutation random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> image(n);
    std::iota(image.begin(), image.end(), 1);
    for (int i = n - 1; i > 0; --i) {
        std::uniform_int_distribution<int> pick(0, i);
        std::swap(image[i], image[pick(rng)]);
    }
    return permpos::Permutation::from_one_based(image);
}

inline permpos::Permutation conjugate(const permpos::Permutation& pi, const permpos::Permutation& sigma) {
    return permpos::compose(permpos::compose(sigma, pi), permpos::inverse(sigma));
}

// Property (C) straight from the definition: for every excluded index i,
// some assignment h_j in {1,2} for all j != i makes {pi_{h_j}(j)} equal to
// the complement of {i}. Enumerates all 2^(n-1) assignments; n <= ~16.
inline bool property_c_by_choice_enumeration(const permpos::Permutation& p1, const permpos::Permutation& p2) {
    const int n = p1.size();
    std::vector<int> lefts;
    for (int i = 0; i < n; ++i) {
        lefts.clear();
        for (int j = 0; j < n; ++j) {
            if (j != i) {
                lefts.push_back(j);
            }
        }
        bool found = false;
        const unsigned long long total = 1ULL << lefts.size();
        for (unsigned long long mask = 0; mask < total && !found; ++mask) {
            unsigned used = 0;
            bool ok = true;
            for (std::size_t b = 0; b < lefts.size(); ++b) {
                const int j = lefts[b];
                const int target = (mask >> b) & 1 ? p2.apply(j) : p1.apply(j);
                if (target == i || (used >> target) & 1) {
                    ok = false;
                    break;
                }
                used |= 1u << target;
            }
            found = ok;
        }
        if (!found) {
            return false;
        }
    }
    return true;
}

// Hall's condition checked on every subset of the left side, for every
// excluded index. Equivalent to matchability; n <= ~16.
inline bool property_c_by_hall_condition(const permpos::Permutation& p1, const permpos::Permutation& p2) {
    const int n = p1.size();
    for (int i = 0; i < n; ++i) {
        std::vector<unsigned> neighborhood;  // per left node, bitmask of allowed targets
        std::vector<int> lefts;
        for (int j = 0; j < n; ++j) {
            if (j == i) {
                continue;
            }
            unsigned nb = 0;
            if (p1.apply(j) != i) {
                nb |= 1u << p1.apply(j);
            }
            if (p2.apply(j) != i) {
                nb |= 1u << p2.apply(j);
            }
            neighborhood.push_back(nb);
            lefts.push_back(j);
        }
        const unsigned long long total = 1ULL << lefts.size();
        for (unsigned long long subset = 1; subset < total; ++subset) {
            unsigned joint = 0;
            int size = 0;
            for (std::size_t b = 0; b < lefts.size(); ++b) {
                if ((subset >> b) & 1) {
                    joint |= neighborhood[b];
                    ++size;
                }
            }
            if (__builtin_popcount(joint) < size) {
                return false;
            }
        }
    }
    return true;
}

namespace detail {
template <typename Fn>
void compositions_rec(int n, int pos, int remaining, std::vector<int>& parts, Fn&& fn) {
    if (pos == n - 1) {
        parts[pos] = remaining;
        fn(parts);
        return;
    }
    for (int v = 0; v <= remaining; ++v) {
        parts[pos] = v;
        compositions_rec(n, pos + 1, remaining - v, parts, fn);
    }
}
}  // namespace detail

// Exhaustive grid over the simplex at the given resolution (number of
// shares); calls fn on every composition of `shares` into n parts.
template <typename Fn>
void for_each_grid_point(int n, int shares, Fn&& fn) {
    std::vector<int> parts(n, 0);
    std::vector<double> point(n, 0.0);
    detail::compositions_rec(n, 0, shares, parts, [&](const std::vector<int>& p) {
        for (int i = 0; i < n; ++i) {
            point[i] = static_cast<double>(p[i]) / shares;
        }
        fn(point);
    });
}

// Max of the positivity functional over the closed simplex grid.
inline double grid_max_functional(const permpos::DMatrix& d, int shares) {
    const int n = d.size();
    double best = -1.0;
    for_each_grid_point(n, shares, [&](const std::vector<double>& t) {
        double value = 0.0;
        for (int j = 0; j < n; ++j) {
            if (t[j] <= 0.0) {
                continue;
            }
            double f = 0.0;
            for (int i = 0; i < n; ++i) {
                f += d(i, j) * t[i];
            }
            if (f <= 0.0) {
                value = std::numeric_limits<double>::infinity();
                return;
            }
            value += t[j] / f;
        }
        best = std::max(best, value);
    });
    return best;
}

// Log-grid search for sup of sum 1/(s + u_i) under prod u_i = M^m: scans
// u_1..u_{m-1} over a geometric grid, the last coordinate forced by the
// constraint.
inline double log_grid_sup_product_constrained(double s, double M, int m, int steps = 40) {
    if (m == 1) {
        return 1.0 / (s + M);
    }
    const double lo = std::log(1e-4);
    const double hi = std::log(1e4);
    std::vector<int> idx(m - 1, 0);
    double best = -1.0;
    while (true) {
        double log_prod = 0.0;
        double value = 0.0;
        for (int i = 0; i < m - 1; ++i) {
            const double u = std::exp(lo + (hi - lo) * idx[i] / (steps - 1));
            log_prod += std::log(u);
            value += 1.0 / (s + u);
        }
        const double last = std::exp(m * std::log(M) - log_prod);
        value += 1.0 / (s + last);
        best = std::max(best, value);
        int k = 0;
        while (k < m - 1 && ++idx[k] == steps) {
            idx[k] = 0;
            ++k;
        }
        if (k == m - 1) {
            break;
        }
    }
    return best;
}

// Independent smallest-eigenvalue route: power iteration on cI - A with
// c a Gershgorin upper bound for the eigenvalues of A.
inline double min_eig_power_iteration(const permpos::HermitianMatrix& h, int iters = 4000) {
    const int n = h.size();
    double c = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) {
            row += std::abs(h(i, j));
        }
        c = std::max(c, row);
    }
    c += 1.0;
    std::vector<std::complex<double>> v(n), w(n);
    for (int i = 0; i < n; ++i) {
        v[i] = std::complex<double>(1.0 + 0.13 * i, 0.41 * (i + 1));
    }
    double lambda = 0.0;
    for (int it = 0; it < iters; ++it) {
        for (int i = 0; i < n; ++i) {
            std::complex<double> acc = c * v[i];
            for (int j = 0; j < n; ++j) {
                acc -= h(i, j) * v[j];
            }
            w[i] = acc;
        }
        double norm = 0.0;
        for (int i = 0; i < n; ++i) {
            norm += std::norm(w[i]);
        }
        norm = std::sqrt(norm);
        lambda = norm;
        for (int i = 0; i < n; ++i) {
            v[i] = w[i] / norm;
        }
    }
    return c - lambda;
}

}  // namespace oracles
