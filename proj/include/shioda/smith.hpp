#pragma once

#include "shioda/int_matrix.hpp"

namespace shioda {

/// Smith normal form with transformation matrices: u * source * v = s,
/// |det(u)| = |det(v)| = 1, s diagonal with non-negative entries, each
/// dividing the next, zeros trailing.
struct SNFResult {
    IntMatrix s;
    IntMatrix u;
    IntMatrix v;
    IntMatrix source;

    IntVec diagonal() const;
    /// Diagonal entries > 1, in divisibility order (the invariant factors
    /// of coker when source presents a finite quotient).
    std::vector<Int> invariant_factors() const;
};

/// Deterministic SNF. Pivot choice: smallest absolute value in the remaining
/// submatrix, ties broken by lowest (row, col) index.
SNFResult snf(const IntMatrix& m);

/// Row-style Hermite normal form with transformation: u * source = h,
/// u unimodular. h is in canonical echelon form: pivots positive, strictly
/// increasing pivot columns, entries above a pivot reduced into [0, pivot),
/// zero rows trailing. rank = number of nonzero rows.
struct HermiteResult {
    IntMatrix h;
    IntMatrix u;
    std::size_t rank;
};

HermiteResult hermite_with_transform(const IntMatrix& m);

/// Basis vectors of {x : x^T m = 0}; empty for a trivial kernel.
std::vector<IntVec> left_kernel_basis(const IntMatrix& m);

/// Basis vectors of {x : m x = 0}.
std::vector<IntVec> right_kernel_basis(const IntMatrix& m);

}  // namespace shioda
