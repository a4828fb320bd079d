#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace shioda {

/// Arbitrary-precision integer. Every computation in this library is exact;
/// fixed-width integers never appear on an arithmetic path.
using Int = mpz_class;
using IntVec = std::vector<Int>;

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

/// Exact quotient; aborts the computation (throws) if b does not divide a.
Int divexact(const Int& a, const Int& b);

/// Floor division (rounds toward minus infinity).
Int floordiv(const Int& a, const Int& b);

/// Representative of a mod m in [0, m), m > 0.
Int mod_reduce(const Int& a, const Int& m);

IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_scale(const Int& c, const IntVec& a);
Int vec_dot(const IntVec& a, const IntVec& b);
Int vec_sum(const IntVec& a);
bool vec_is_zero(const IntVec& a);

/// Dense matrix of arbitrary-precision integers, row-major.
/// Dimensions are always positive. Values are immutable in spirit: all
/// operations return fresh matrices, and the library treats constructed
/// matrices as read-only except inside local algorithm buffers.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVec>& rows);
    /// Convenience for literal matrices in tests and builtins.
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    IntVec row(std::size_t i) const;
    IntVec col(std::size_t j) const;
    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix scaled(const Int& c) const;

    /// M * v with v a column vector.
    IntVec apply(const IntVec& v) const;

    /// Stack rows of this on top of rows of other (equal column counts).
    IntMatrix vstack(const IntMatrix& other) const;
    /// Columns of this followed by columns of other (equal row counts).
    IntMatrix hstack(const IntMatrix& other) const;

    bool operator==(const IntMatrix& rhs) const = default;

    std::string to_string() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Int> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
/// Throws std::invalid_argument on non-square input.
Int det(const IntMatrix& m);

/// Adjugate: adj(M) = det(M) * M^{-1}, computed from signed minors.
IntMatrix adjugate(const IntMatrix& m);

}  // namespace shioda
