#pragma once

#include <string>
#include <vector>

#include "weilzeta/arith.hpp"

namespace weilzeta::abelian {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, BigInt(0)) {}
    /// Row-major entries.
    IntMatrix(std::size_t rows, std::size_t cols, const std::vector<BigInt>& entries);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(const std::vector<BigInt>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntMatrix transpose() const;
    /// Columns [begin, end).
    IntMatrix columns(std::size_t begin, std::size_t end) const;
    /// Rows [begin, end).
    IntMatrix row_block(std::size_t begin, std::size_t end) const;
    /// [this | other].
    IntMatrix hconcat(const IntMatrix& other) const;

    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BigInt> a_;
};

struct SmithForm {
    IntMatrix D, U, V;  // U * M * V = D
    /// Nonzero diagonal entries d_1 | d_2 | ...
    std::vector<BigInt> invariants() const;
    std::size_t rank() const { return invariants().size(); }
};

/// Unimodular diagonalization with deterministic pivoting: the entry of
/// smallest nonzero absolute value, first in row-major order.
SmithForm smith_normal_form(const IntMatrix& m);

/// Columns form a Z-basis of {x : m x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

/// Product of the nonzero invariant factors (gcd of the maximal nonzero minors).
BigInt lattice_content(const IntMatrix& m);

bool is_unimodular(const IntMatrix& m);
BigInt determinant(const IntMatrix& m);

}  // namespace weilzeta::abelian
