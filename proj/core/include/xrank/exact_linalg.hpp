#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "xrank/rational.hpp"

namespace xrank {

// Minimal dense row-major matrix for exact scalar types. Float-mode code
// uses Eigen; this type exists so GMP scalars get the same interface.
template <typename S>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<S> data_;
};

using IntMatrix = DenseMatrix<BigInt>;
using RationalMatrix = DenseMatrix<Rational>;

// Exact rank by fraction-free (Bareiss) elimination with full pivoting.
// Intermediate entries stay integral; pivot selection prefers small entries
// to slow coefficient growth. Destroys its copy of the input.
std::size_t bareiss_rank(IntMatrix a);

// Exact rank over the rationals (clears denominators row by row, then Bareiss).
std::size_t exact_rank(const RationalMatrix& a);

// Basis of the right nullspace of `a`, as columns, via reduced row echelon
// form over the rationals.
RationalMatrix nullspace(const RationalMatrix& a);

// Exact solution of a (possibly overdetermined, consistent) linear system.
// Returns nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_exact(const RationalMatrix& a,
                                                 const std::vector<Rational>& rhs);

}  // namespace xrank
