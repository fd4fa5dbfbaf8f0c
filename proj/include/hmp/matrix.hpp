#pragma once

// Exact integer matrices and the fraction-free linear algebra that the rest
// of the toolkit builds on.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "hmp/bigint.hpp"

namespace hmp {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const IntMatrix&) const = default;

    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator-() const;
    IntMatrix transposed() const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

Int trace(const IntMatrix& m);

// Determinant by fraction-free (Bareiss) elimination. Requires square input.
Int det(const IntMatrix& m);

// M^k with k >= 0 by binary exponentiation. Requires square input.
IntMatrix mat_pow(const IntMatrix& m, unsigned long k);

// I + M^l + M^(2l) + ... + M^(k-l) for l | k, k >= 1. Requires square input.
IntMatrix geometric_sum_matrix(const IntMatrix& m, unsigned long k, unsigned long l);

std::vector<Int> mat_vec(const IntMatrix& m, const std::vector<Int>& v);

// Inverse of a matrix with det = +-1 (exact, integer). Throws otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

}  // namespace hmp
