// Exact dense linear algebra over Z and Q: determinants, adjugates, column
// Hermite normal form with transform, integer kernel bases, the gcd of
// maximal minors, and squared volumes det(A A^T).
//
// All functions are pure; matrices are plain value types and safe to share
// across threads.

#ifndef MONTY_LINALG_HPP
#define MONTY_LINALG_HPP

#include <cstddef>
#include <vector>

#include "monty/numeric.hpp"

namespace monty {

// Dense row-major integer matrix. The 0xN empty matrix is legal (vol2 == 1).
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const = default;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;

    // Submatrix from row/column index lists (0-based, strictly increasing).
    IntMatrix submatrix(const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols) const;
    IntMatrix without_column(std::size_t j) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> e_;
};

// Dense row-major matrix of canonical rationals.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> e_;
};

// Exact determinant; cofactor expansion up to 4x4, Bareiss above.
Int det(const IntMatrix& a);
Rat det(const RatMatrix& a);

// adj(A) with A * adj(A) == det(A) * I, for n >= 1.
IntMatrix adjugate(const IntMatrix& a);

struct HnfResult {
    IntMatrix h;  // A * u == h, column HNF: zero columns first, lower staircase
    IntMatrix u;  // unimodular, |det u| == 1
};

HnfResult hnf_with_transform(const IntMatrix& a);

// Basis of { x in Z^cols : A x = 0 }, one column per basis vector; the
// basis generates the full integer kernel (stacked transpose has delta 1).
IntMatrix integer_kernel(const IntMatrix& a);

// gcd of all maximal minors of a wide matrix (rows <= cols); 0 iff rank-deficient.
Int delta(const IntMatrix& a);

// det(A A^T); 1 for the 0xN empty matrix; requires rows <= cols.
Int vol2(const IntMatrix& a);
Rat vol2(const RatMatrix& a);

// det(A diag(w) A^T) for rational column weights; the skewed volumes the
// bound checks need without ever forming irrational square roots.
Rat vol2_weighted(const IntMatrix& a, const std::vector<Rat>& col_weights);

// Sylvester's determinant identity on adj(A) for the index sets I, J
// (0-based); returns true iff the identity holds for this instance.
bool jacobi_identity_check(const IntMatrix& a,
                           const std::vector<std::size_t>& rows_i,
                           const std::vector<std::size_t>& cols_j);

}  // namespace monty

#endif
