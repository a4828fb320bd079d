#pragma once

#include <optional>

#include "shioda/diag_group.hpp"
#include "shioda/lattice.hpp"
#include "shioda/pencil.hpp"

namespace shioda {

/// Index of a residue (n-1)-form on a degree-d hypersurface in P^{n-1}:
/// a non-negative integer vector k with sum k_i = d - n.
struct ResidueFormIndex {
    IntVec k;
    Int d;

    static ResidueFormIndex make(IntVec k, Int d);

    bool operator==(const ResidueFormIndex& rhs) const = default;
};

/// {k in Z^chart_size : k . a == 0 mod modulus for every generator a}:
/// the exponent lattice of the monomials fixed by the diagonal action on an
/// affine chart. Full rank; always contains modulus * Z^chart_size.
Lattice invariant_monomial_lattice(const std::vector<IntVec>& generators, const Int& modulus,
                                   std::size_t chart_size);

/// True iff every coordinate monomial of q_map is invariant under the
/// quotient group H_A up to the common scalar character (each generator of
/// B*Lambda + d*Z^n pairs to 0 mod d against every coordinate row), and the
/// monomial relation z_0^n = z_1...z_n holds.
bool verify_quotient_generators(const CYPencil& p);

/// Character exponent of omega_k under g_a: sum (k_i + 1) a_i mod d.
/// Well defined on representatives because sum (k_i + 1) = d.
Int form_character(const ResidueFormIndex& k, const DiagAutomorphism& g);

/// All k with k >= 0, sum k_i = d - n, and form_character(k, g) == 0 for
/// every g in Gamma_d; solved through the congruence lattice on v = k + 1,
/// never by walking the simplex. Expected to be exactly {(m-1,...,m-1)}.
std::vector<ResidueFormIndex> invariant_form_indices(const CYPencil& p);

/// Pullback data of the holomorphic form along the Shioda map:
/// l = m - 1 and c_A = det(B)/m. A non-integral c_A is reported, not thrown.
struct FormData {
    Int l;
    Int det_b;
    std::optional<Int> c_a;
};

FormData pullback_form_data(const CYPencil& p);

}  // namespace shioda
