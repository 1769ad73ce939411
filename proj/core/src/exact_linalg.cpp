#include "xrank/exact_linalg.hpp"

#include <cstdlib>

namespace xrank {

namespace {

// Pivot with the fewest limbs in the trailing submatrix, to keep the
// fraction-free updates small.
bool find_pivot(const IntMatrix& m, std::size_t k, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    std::size_t best_size = 0;
    for (std::size_t i = k; i < m.rows(); ++i) {
        for (std::size_t j = k; j < m.cols(); ++j) {
            if (m(i, j) == 0) continue;
            const std::size_t sz = mpz_size(m(i, j).get_mpz_t());
            if (!found || sz < best_size) {
                found = true;
                best_size = sz;
                pi = i;
                pj = j;
                if (sz <= 1) return true;
            }
        }
    }
    return found;
}

}  // namespace

std::size_t bareiss_rank(IntMatrix m) {
    const std::size_t n = std::min(m.rows(), m.cols());
    BigInt prev = 1;
    std::size_t rank = 0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pi = k, pj = k;
        if (!find_pivot(m, k, pi, pj)) break;
        m.swap_rows(k, pi);
        m.swap_cols(k, pj);
        ++rank;
        const BigInt& pivot = m(k, k);
        BigInt t;
        for (std::size_t i = k + 1; i < m.rows(); ++i) {
            if (m(i, k) == 0) {
                // row already reduced in column k; still needs the pivot scaling
                for (std::size_t j = k + 1; j < m.cols(); ++j) {
                    if (m(i, j) == 0) continue;
                    m(i, j) *= pivot;
                    mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
                }
                continue;
            }
            for (std::size_t j = k + 1; j < m.cols(); ++j) {
                t = m(i, j) * pivot - m(i, k) * m(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = t;
            }
            m(i, k) = 0;
        }
        prev = pivot;
    }
    return rank;
}

std::size_t exact_rank(const RationalMatrix& a) {
    IntMatrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        BigInt row_lcm = 1;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), a(i, j).get_den().get_mpz_t());
        }
        for (std::size_t j = 0; j < a.cols(); ++j) {
            Rational scaled = a(i, j) * Rational(row_lcm);
            m(i, j) = scaled.get_num();
        }
    }
    return bareiss_rank(std::move(m));
}

namespace {

// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(RationalMatrix& m) {
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        m.swap_rows(row, sel);
        const Rational inv = 1 / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            const Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

}  // namespace

RationalMatrix nullspace(const RationalMatrix& a) {
    RationalMatrix m = a;
    const std::vector<std::size_t> pivot_cols = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    RationalMatrix basis(a.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t fc = free_cols[k];
        basis(fc, k) = 1;
        for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
            basis(pivot_cols[r], k) = -m(r, fc);
        }
    }
    return basis;
}

std::optional<std::vector<Rational>> solve_exact(const RationalMatrix& a,
                                                 const std::vector<Rational>& rhs) {
    if (rhs.size() != a.rows()) throw InputError("solve_exact: rhs length mismatch");
    RationalMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = rhs[i];
    }
    const std::vector<std::size_t> pivot_cols = rref(aug);
    // a pivot in the rhs column means inconsistency
    if (!pivot_cols.empty() && pivot_cols.back() == a.cols()) return std::nullopt;
    std::vector<Rational> x(a.cols(), Rational(0));
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
        x[pivot_cols[r]] = aug(r, a.cols());
    }
    return x;
}

}  // namespace xrank
