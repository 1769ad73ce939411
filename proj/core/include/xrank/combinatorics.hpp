#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace xrank {

// binom(a, b) with the extended convention used throughout:
// zero whenever a < 0, b < 0 or a < b; binom(a, 0) = 1 for a >= 0.
inline std::int64_t binom(std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0 || a < b) return 0;
    b = std::min(b, a - b);
    std::int64_t result = 1;
    for (std::int64_t i = 1; i <= b; ++i) {
        // a - b + i <= 62 bits at the sizes this library handles
        result = result * (a - b + i) / i;
    }
    return result;
}

inline std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
    return (num + den - 1) / den;
}

// Number of degree-d monomials in n variables.
inline std::int64_t monomial_count(int n_vars, int degree) {
    return binom(n_vars + degree - 1, n_vars - 1);
}

// Exponent tuples of total degree d in n variables, in lexicographically
// decreasing order: (d,0,...,0), (d-1,1,0,...), ..., (0,...,0,d).
// This ordering is the fixed coefficient-basis convention for all
// polynomial-valued coordinates.
inline std::vector<std::vector<int>> monomial_exponents(int n_vars, int degree) {
    if (n_vars < 1 || degree < 0) throw std::invalid_argument("monomial_exponents: bad arguments");
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(n_vars), 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n_vars - 1) {
            cur[static_cast<size_t>(pos)] = remaining;
            out.push_back(cur);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur[static_cast<size_t>(pos)] = e;
            self(self, pos + 1, remaining - e);
        }
    };
    rec(rec, 0, degree);
    return out;
}

// Rank of an exponent tuple within monomial_exponents(n, d). Pure arithmetic,
// no table needed.
inline std::int64_t monomial_index(const std::vector<int>& exponents, int degree) {
    const int n = static_cast<int>(exponents.size());
    std::int64_t idx = 0;
    int d = degree;
    for (int pos = 0; pos < n - 1; ++pos) {
        const int e = exponents[static_cast<size_t>(pos)];
        // tuples whose entry at `pos` exceeds e come first
        for (int t = e + 1; t <= d; ++t) {
            idx += monomial_count(n - pos - 1, d - t);
        }
        d -= e;
    }
    return idx;
}

// Increasing k-subsets of {0,...,m-1} in lexicographic order; the fixed index
// convention for Pluecker coordinates.
inline std::vector<std::vector<int>> k_subsets(int k, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(k));
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v <= m - (k - pos); ++v) {
            cur[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, v + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace xrank
