#pragma once

#include <optional>

#include "shioda/int_matrix.hpp"

namespace shioda {

/// Sublattice of Z^n, stored by its unique canonical basis: the row-style
/// Hermite normal form of any generating set. Two Lattice values are equal
/// iff they are the same sublattice, so operator== is structural.
class Lattice {
public:
    /// Lattice generated by the rows of gens (zero and dependent rows fine).
    static Lattice from_generators(const IntMatrix& gens);
    static Lattice from_generators(const std::vector<IntVec>& gens, std::size_t ambient_rank);
    /// Z^n.
    static Lattice full(std::size_t n);
    /// c * Z^n.
    static Lattice scaled_full(std::size_t n, const Int& c);

    std::size_t ambient_rank() const { return ambient_; }
    std::size_t rank() const { return rank_; }
    bool is_full_rank() const { return rank_ == ambient_; }
    /// Canonical basis, rank() x ambient_rank(). Absent when rank is 0.
    const std::optional<IntMatrix>& basis() const { return basis_; }
    std::vector<IntVec> basis_rows() const;

    /// Product of the HNF pivots = [Z^n : L] for full-rank L.
    Int covolume() const;

    bool operator==(const Lattice& rhs) const = default;

private:
    Lattice(std::size_t ambient, std::size_t rank, std::optional<IntMatrix> basis)
        : ambient_(ambient), rank_(rank), basis_(std::move(basis)) {}

    std::size_t ambient_;
    std::size_t rank_;
    std::optional<IntMatrix> basis_;
};

/// Lattice generated by both bases together.
Lattice lattice_sum(const Lattice& l1, const Lattice& l2);

/// Exact intersection of two sublattices of the same ambient Z^n.
Lattice lattice_intersection(const Lattice& l1, const Lattice& l2);

/// Exact membership test.
bool lattice_member(const IntVec& v, const Lattice& l);

/// Coordinates of v in the canonical basis of l, when v is a member.
std::optional<IntVec> lattice_coordinates(const IntVec& v, const Lattice& l);

/// {a in Z^n : m a in l} for square nonsingular m and full-rank l.
/// Throws on singular m.
Lattice lattice_preimage(const IntMatrix& m, const Lattice& l);

/// Preimage of l under an arbitrary linear map m: Z^c -> Z^g (no
/// nonsingularity requirement). Used internally for congruence systems.
Lattice lattice_preimage_general(const IntMatrix& m, const Lattice& l);

/// Image of l under a: rows of basis(l) * a^T, i.e. {a v : v in l}.
Lattice lattice_image(const IntMatrix& a, const Lattice& l);

/// Invariant factors (> 1, divisibility-chained) of l1 / l2 for l2 a
/// finite-index sublattice of l1. Throws when l2 is not contained in l1 or
/// when the quotient is infinite (rank mismatch).
std::vector<Int> lattice_quotient_invariants(const Lattice& l1, const Lattice& l2);

/// [l1 : l2], the product of the quotient's invariant factors.
Int lattice_index(const Lattice& l1, const Lattice& l2);

bool lattice_contains(const Lattice& outer, const Lattice& inner);

/// {k in Z^c : gens_matrix * k == 0 mod modulus}, with the generator vectors
/// as the rows of gens. Always full rank (contains modulus * Z^c).
Lattice congruence_solution_lattice(const std::vector<IntVec>& gens, const Int& modulus,
                                    std::size_t chart_size);

}  // namespace shioda
