#include "permpos/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace permpos {

namespace {

std::vector<int> invert_image(const std::vector<int>& img) {
    std::vector<int> inv(img.size());
    for (std::size_t j = 0; j < img.size(); ++j) {
        inv[img[j]] = static_cast<int>(j);
    }
    return inv;
}

}  // namespace

Permutation::Permutation(std::vector<int> zero_based)
    : img_(std::move(zero_based)), inv_(invert_image(img_)) {}

Permutation Permutation::from_one_based(const std::vector<int>& image) {
    const int n = static_cast<int>(image.size());
    if (n == 0) {
        throw std::invalid_argument("Permutation: empty image");
    }
    std::vector<int> img(n);
    std::vector<bool> seen(n, false);
    for (int j = 0; j < n; ++j) {
        const int v = image[j];
        if (v < 1 || v > n) {
            throw std::invalid_argument("Permutation: image value " + std::to_string(v) +
                                        " outside 1.." + std::to_string(n));
        }
        if (seen[v - 1]) {
            throw std::invalid_argument("Permutation: image value " + std::to_string(v) +
                                        " repeats; not a bijection");
        }
        seen[v - 1] = true;
        img[j] = v - 1;
    }
    return Permutation(std::move(img));
}

Permutation Permutation::identity(int n) {
    if (n <= 0) {
        throw std::invalid_argument("Permutation: size must be positive");
    }
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::cyclic_shift(int n) {
    if (n <= 0) {
        throw std::invalid_argument("Permutation: size must be positive");
    }
    std::vector<int> img(n);
    for (int j = 0; j < n; ++j) {
        img[j] = (j + 1) % n;
    }
    return Permutation(std::move(img));
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<int> image;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(token, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("Permutation: cannot parse '" + token + "'");
        }
        while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) {
            ++pos;
        }
        if (pos != token.size()) {
            throw std::invalid_argument("Permutation: trailing characters in '" + token + "'");
        }
        image.push_back(value);
    }
    if (image.empty()) {
        throw std::invalid_argument("Permutation: empty image text");
    }
    return from_one_based(image);
}

bool Permutation::is_identity() const {
    for (int j = 0; j < size(); ++j) {
        if (img_[j] != j) {
            return false;
        }
    }
    return true;
}

std::vector<int> Permutation::one_based_image() const {
    std::vector<int> image(img_.size());
    for (std::size_t j = 0; j < img_.size(); ++j) {
        image[j] = img_[j] + 1;
    }
    return image;
}

std::string Permutation::to_string() const {
    std::string out;
    for (int j = 0; j < size(); ++j) {
        if (j > 0) {
            out += ',';
        }
        out += std::to_string(img_[j] + 1);
    }
    return out;
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
    if (sigma.size() != tau.size()) {
        throw std::invalid_argument("compose: ground-set sizes differ");
    }
    std::vector<int> image(sigma.size());
    for (int j = 0; j < sigma.size(); ++j) {
        image[j] = sigma.apply(tau.apply(j)) + 1;
    }
    return Permutation::from_one_based(image);
}

Permutation inverse(const Permutation& pi) {
    std::vector<int> image(pi.size());
    for (int v = 0; v < pi.size(); ++v) {
        image[v] = pi.apply_inverse(v) + 1;
    }
    return Permutation::from_one_based(image);
}

Permutation power(const Permutation& pi, long long k) {
    if (k < 0) {
        throw std::invalid_argument("power: exponent must be nonnegative");
    }
    Permutation result = Permutation::identity(pi.size());
    Permutation base = pi;
    while (k > 0) {
        if (k & 1) {
            result = compose(result, base);
        }
        base = compose(base, base);
        k >>= 1;
    }
    return result;
}

CycleDecomposition cycle_decomposition(const Permutation& pi) {
    const int n = pi.size();
    CycleDecomposition out;
    std::vector<bool> visited(n, false);
    for (int start = 0; start < n; ++start) {
        if (visited[start]) {
            continue;
        }
        std::vector<int> cycle;
        int x = start;
        do {
            visited[x] = true;
            cycle.push_back(x + 1);
            x = pi.apply(x);
        } while (x != start);
        out.max_len = std::max(out.max_len, static_cast<int>(cycle.size()));
        out.cycles.push_back(std::move(cycle));
    }
    return out;
}

DMatrix permutation_matrix(const Permutation& pi) {
    const int n = pi.size();
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int j = 0; j < n; ++j) {
        a[static_cast<std::size_t>(pi.apply(j)) * n + j] = 1.0;
    }
    return DMatrix(n, std::move(a));
}

OrbitDecomposition minimal_invariant_subsets(const Permutation& pi1, const Permutation& pi2) {
    if (pi1.size() != pi2.size()) {
        throw std::invalid_argument("minimal_invariant_subsets: ground-set sizes differ");
    }
    const int n = pi1.size();

    // Union-find over the edges i -- pi1(i) and i -- pi2(i).
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto unite = [&parent, &find](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
        }
    };
    for (int i = 0; i < n; ++i) {
        unite(i, pi1.apply(i));
        unite(i, pi2.apply(i));
    }

    OrbitDecomposition out;
    std::vector<int> slot(n, -1);
    for (int i = 0; i < n; ++i) {
        const int root = find(i);
        if (slot[root] < 0) {
            slot[root] = static_cast<int>(out.orbits.size());
            out.orbits.emplace_back();
        }
        out.orbits[slot[root]].push_back(i + 1);
    }
    return out;
}

RestrictedPermutation restrict_to(const Permutation& pi, const std::vector<int>& orbit_one_based) {
    if (orbit_one_based.empty()) {
        throw std::invalid_argument("restrict_to: empty index set");
    }
    std::vector<int> sorted = orbit_one_based;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> rank(pi.size(), -1);
    for (std::size_t r = 0; r < sorted.size(); ++r) {
        const int idx = sorted[r];
        if (idx < 1 || idx > pi.size()) {
            throw std::invalid_argument("restrict_to: index outside the ground set");
        }
        if (rank[idx - 1] >= 0) {
            throw std::invalid_argument("restrict_to: repeated index in the set");
        }
        rank[idx - 1] = static_cast<int>(r);
    }
    std::vector<int> image(sorted.size());
    for (std::size_t r = 0; r < sorted.size(); ++r) {
        const int target = pi.apply(sorted[r] - 1);
        if (rank[target] < 0) {
            throw std::invalid_argument("restrict_to: set is not invariant under the permutation");
        }
        image[r] = rank[target] + 1;
    }
    return RestrictedPermutation{Permutation::from_one_based(image), std::move(sorted)};
}

}  // namespace permpos
