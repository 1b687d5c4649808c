#ifndef COXDP_MATRIX_HPP
#define COXDP_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "coxdp/rational.hpp"

namespace coxdp {

// Dense matrix of exact rationals. The interpolation and product-span
// systems handled here stay small (a few hundred columns), so a dense
// grid is the right representation.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t i, std::size_t k);

    bool operator==(const RationalMatrix& other) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

// Exact rank by fraction-free (Bareiss) elimination on the denominator-
// cleared integer matrix. Pivots are chosen by smallest bit length among
// the nonzero candidates (exact-magnitude growth control), lowest row
// index on ties.
std::size_t rank(const RationalMatrix& m);

// Reduced row echelon form; idempotent and rank-preserving.
RationalMatrix rref(const RationalMatrix& m);

// Basis of the right null space, one vector per free column of rref(m),
// in the standard reduced-echelon pivot convention. Size = cols - rank.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

} // namespace coxdp

#endif
