#pragma once

#include <iosfwd>

#include "shioda/int_matrix.hpp"

namespace shioda {

/// A validated defining matrix together with its derived invariants.
/// a is n x n with non-negative entries and constant row sums e;
/// d is the least positive integer with d * a^{-1} integral, b = d * a^{-1},
/// so a*b = b*a = d*I exactly, every row of b sums to m, and d = m*e.
struct CYPencil {
    IntMatrix a;
    std::size_t n;
    Int e;
    bool col_balanced;  // all column sums equal n
    Int det_a;
    Int d;
    Int m;
    IntMatrix b;

    /// Calabi-Yau case: row and column sums all equal n. Prerequisite for
    /// the mirror-map and group operations.
    bool balanced() const { return col_balanced; }
};

/// Validate a defining matrix and derive its invariants. Errors name the
/// violated precondition: singular matrix, negative entry, non-constant row
/// sums, non-constant/wrong column sums when require_balanced.
CYPencil validate(const IntMatrix& a, bool require_balanced);

/// The six built-in 5x5 families, rows in the order the defining monomials
/// are listed. Throws on index outside 1..6.
IntMatrix builtin_family(int index);

/// n x n circulant with diagonal n-1 and wrapping superdiagonal 1.
/// Singular exactly at n = 2 (validate rejects it there).
IntMatrix cyclic_family(std::size_t n);

/// Expected determinant of cyclic_family(n): (n-1)^n - (-1)^n.
Int cyclic_det_closed_form(std::size_t n);

/// Expected first row of B for the cyclic family: q_i = (-1)^{i-1} (n-1)^{n-i}.
IntVec cyclic_b_first_row(std::size_t n);

/// Matrix input document: {"n": <int>, "rows": [[...], ...]} with n arrays
/// of n non-negative integers; whitespace-insensitive.
IntMatrix read_matrix_document(std::istream& in);
IntMatrix parse_matrix_document(const std::string& text);

}  // namespace shioda
