#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "shioda/lattice.hpp"
#include "shioda/pencil.hpp"

namespace shioda {

/// Trial-division factorization (exponent per prime).
std::map<Int, unsigned> factorize(const Int& x);

/// All positive divisors, ascending.
std::vector<Int> sorted_divisors(const Int& x);

/// Lambda = {a in Z^n : sum a_i == 0 mod n}, the exponent lattice of the
/// diagonal automorphisms preserving a balanced pencil.
Lattice sum_zero_lattice(std::size_t n);

/// Lambda_0(d) = d Z^n + Z (1,...,1): exponents acting as the identity on
/// projective space with d-th roots of unity.
Lattice scalar_denominator_lattice(std::size_t n, const Int& modulus);

/// Diagonal projective automorphism y_i -> zeta_d^{a_i} y_i, stored by the
/// canonical representative: last coordinate 0, entries in [0, d). Two raw
/// vectors give the same automorphism iff they canonicalize identically.
struct DiagAutomorphism {
    Int modulus;
    IntVec vec;  // canonical

    static DiagAutomorphism make(Int modulus, IntVec raw);

    std::size_t dim() const { return vec.size(); }
    bool is_scalar() const { return vec_is_zero(vec); }

    DiagAutomorphism compose(const DiagAutomorphism& rhs) const;
    DiagAutomorphism power(const Int& k) const;

    bool operator==(const DiagAutomorphism& rhs) const = default;

    /// mod-d reduction of a raw vector, no scalar shift (display form).
    static IntVec display_vector(const IntVec& raw, const Int& modulus);
};

/// Finite abelian group of diagonal automorphisms presented as a quotient of
/// lattices num/den (never by element enumeration). For the standard groups
/// den = Lambda_0(modulus); quotient constructions may carry a finer
/// denominator.
class DiagGroup {
public:
    DiagGroup(Int modulus, Lattice num, Lattice den);

    const Int& modulus() const { return modulus_; }
    std::size_t dim() const { return num_.ambient_rank(); }
    const Lattice& numerator() const { return num_; }
    const Lattice& denominator() const { return den_; }

    /// Invariant factors of num/den (each > 1, dividing the next).
    std::vector<Int> structure() const;
    /// Product of invariant factors.
    Int order() const;

    bool contains(const DiagAutomorphism& g) const;
    bool is_identity(const DiagAutomorphism& g) const;

private:
    Int modulus_;
    Lattice num_;
    Lattice den_;
};

/// Gamma_d: all diagonal automorphisms of the degree-d Fermat-type pencil
/// (coordinate sum == 0 mod n) modulo scalars. Balanced pencils only.
DiagGroup gamma_d(const CYPencil& p);

/// The named generators g_0 = g_(n,0,...,0), g_i = g_(-1,0,..,1,..,0)
/// (1 in slot i+1), i = 1..n-2.
std::vector<std::pair<std::string, DiagAutomorphism>> gamma_d_generators(const CYPencil& p);

/// The homomorphism g_a -> g_{B a} into the automorphisms of X_{A,t}.
/// Throws when g is not an element of Gamma_d for p.
DiagAutomorphism hom_image(const CYPencil& p, const DiagAutomorphism& g);

/// Kernel of g_a -> g_{B a}: {a : B a acts as a scalar}.
DiagGroup kernel_gamma_a(const CYPencil& p);

/// Image of g_a -> g_{B a}: (B Lambda + Lambda_0) / Lambda_0.
DiagGroup image_h_a(const CYPencil& p);

/// Least k > 0 with k*a in the denominator, found by lattice membership over
/// the ascending divisors of order(g's group).
Int element_order(const DiagGroup& g_group, const DiagAutomorphism& g);

/// Least non-negative k with base^k == target (canonical-form equality),
/// brute force below order(base). Throws if order(base) exceeds the cap or
/// if target is not a power of base.
Int discrete_log(const DiagGroup& g_group, const DiagAutomorphism& base,
                 const DiagAutomorphism& target, const Int& cap = Int(1000000));

struct FactorizationGroups {
    DiagGroup mu_a;           // m * Gamma_A, the multiplication-by-m image
    DiagGroup gamma_prime_a;  // Gamma_A / mu_a
};

/// The two groups of the power-map factorization diagram. Requires
/// power_factorization(p) to be present; #Gamma_A = #mu_A * #Gamma'_A holds.
FactorizationGroups factorization_groups(const CYPencil& p);

}  // namespace shioda
