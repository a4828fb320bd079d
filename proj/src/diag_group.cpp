#include "shioda/diag_group.hpp"

#include <algorithm>
#include <stdexcept>

#include "shioda/monomial_map.hpp"

namespace shioda {

std::map<Int, unsigned> factorize(const Int& x) {
    std::map<Int, unsigned> out;
    Int v = abs(x);
    if (v <= 1) return out;
    for (Int p = 2; p * p <= v; p == 2 ? p = 3 : p += 2) {
        while (v % p == 0) {
            ++out[p];
            v = divexact(v, p);
        }
    }
    if (v > 1) ++out[v];
    return out;
}

std::vector<Int> sorted_divisors(const Int& x) {
    std::vector<Int> divs{Int(1)};
    for (const auto& [p, e] : factorize(x)) {
        const std::size_t base = divs.size();
        Int pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Lattice sum_zero_lattice(std::size_t n) {
    std::vector<IntVec> gens;
    IntVec first(n, Int(0));
    first[0] = Int(static_cast<long>(n));
    gens.push_back(first);
    for (std::size_t i = 1; i < n; ++i) {
        IntVec v(n, Int(0));
        v[0] = -1;
        v[i] = 1;
        gens.push_back(v);
    }
    return Lattice::from_generators(gens, n);
}

Lattice scalar_denominator_lattice(std::size_t n, const Int& modulus) {
    if (modulus <= 0) throw std::invalid_argument("scalar_denominator_lattice: modulus must be positive");
    IntMatrix gens = IntMatrix::identity(n).scaled(modulus).vstack(
        IntMatrix(1, n, std::vector<Int>(n, Int(1))));
    return Lattice::from_generators(gens);
}

DiagAutomorphism DiagAutomorphism::make(Int modulus, IntVec raw) {
    if (modulus <= 0) throw std::invalid_argument("DiagAutomorphism: modulus must be positive");
    if (raw.empty()) throw std::invalid_argument("DiagAutomorphism: empty vector");
    const Int last = raw.back();
    for (Int& x : raw) x = mod_reduce(x - last, modulus);
    return DiagAutomorphism{std::move(modulus), std::move(raw)};
}

DiagAutomorphism DiagAutomorphism::compose(const DiagAutomorphism& rhs) const {
    if (modulus != rhs.modulus || vec.size() != rhs.vec.size())
        throw std::invalid_argument("DiagAutomorphism: compose mismatch");
    return make(modulus, vec_add(vec, rhs.vec));
}

DiagAutomorphism DiagAutomorphism::power(const Int& k) const {
    return make(modulus, vec_scale(k, vec));
}

IntVec DiagAutomorphism::display_vector(const IntVec& raw, const Int& modulus) {
    IntVec out(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) out[i] = mod_reduce(raw[i], modulus);
    return out;
}

DiagGroup::DiagGroup(Int modulus, Lattice num, Lattice den)
    : modulus_(std::move(modulus)), num_(std::move(num)), den_(std::move(den)) {
    if (num_.ambient_rank() != den_.ambient_rank())
        throw std::invalid_argument("DiagGroup: ambient rank mismatch");
    if (!num_.is_full_rank() || !den_.is_full_rank())
        throw std::invalid_argument("DiagGroup: lattices must be full rank (finite group)");
    if (!lattice_contains(num_, den_))
        throw std::invalid_argument("DiagGroup: denominator not contained in numerator");
    if (!lattice_contains(sum_zero_lattice(num_.ambient_rank()), num_))
        throw std::invalid_argument("DiagGroup: numerator not contained in the sum-zero lattice");
}

std::vector<Int> DiagGroup::structure() const { return lattice_quotient_invariants(num_, den_); }

Int DiagGroup::order() const {
    Int o = 1;
    for (const Int& f : structure()) o *= f;
    return o;
}

bool DiagGroup::contains(const DiagAutomorphism& g) const {
    if (g.modulus != modulus_ || g.dim() != dim()) return false;
    return lattice_member(g.vec, num_);
}

bool DiagGroup::is_identity(const DiagAutomorphism& g) const {
    return lattice_member(g.vec, den_);
}

namespace {

void require_balanced(const CYPencil& p, const char* what) {
    if (!p.balanced())
        throw std::invalid_argument(std::string(what) + ": pencil is not balanced");
}

}  // namespace

DiagGroup gamma_d(const CYPencil& p) {
    require_balanced(p, "gamma_d");
    return DiagGroup(p.d, sum_zero_lattice(p.n), scalar_denominator_lattice(p.n, p.d));
}

std::vector<std::pair<std::string, DiagAutomorphism>> gamma_d_generators(const CYPencil& p) {
    require_balanced(p, "gamma_d_generators");
    std::vector<std::pair<std::string, DiagAutomorphism>> gens;
    IntVec g0(p.n, Int(0));
    g0[0] = Int(static_cast<long>(p.n));
    gens.emplace_back("g0", DiagAutomorphism::make(p.d, g0));
    for (std::size_t i = 1; i + 1 < p.n; ++i) {
        IntVec v(p.n, Int(0));
        v[0] = -1;
        v[i] = 1;
        gens.emplace_back("g" + std::to_string(i), DiagAutomorphism::make(p.d, v));
    }
    return gens;
}

DiagAutomorphism hom_image(const CYPencil& p, const DiagAutomorphism& g) {
    require_balanced(p, "hom_image");
    if (g.modulus != p.d || g.dim() != p.n)
        throw std::invalid_argument("hom_image: element does not live in Gamma_d of this pencil");
    if (mod_reduce(vec_sum(g.vec), Int(static_cast<long>(p.n))) != 0)
        throw std::invalid_argument("hom_image: element is not in Gamma_d (coordinate sum != 0 mod n)");
    return DiagAutomorphism::make(p.d, p.b.apply(g.vec));
}

DiagGroup kernel_gamma_a(const CYPencil& p) {
    require_balanced(p, "kernel_gamma_a");
    Lattice lam0 = scalar_denominator_lattice(p.n, p.d);
    Lattice ker = lattice_intersection(lattice_preimage(p.b, lam0), sum_zero_lattice(p.n));
    return DiagGroup(p.d, std::move(ker), std::move(lam0));
}

DiagGroup image_h_a(const CYPencil& p) {
    require_balanced(p, "image_h_a");
    Lattice lam0 = scalar_denominator_lattice(p.n, p.d);
    Lattice img = lattice_sum(lattice_image(p.b, sum_zero_lattice(p.n)), lam0);
    return DiagGroup(p.d, std::move(img), std::move(lam0));
}

Int element_order(const DiagGroup& g_group, const DiagAutomorphism& g) {
    if (!g_group.contains(g)) throw std::invalid_argument("element_order: element is not in the group");
    for (const Int& k : sorted_divisors(g_group.order())) {
        if (lattice_member(vec_scale(k, g.vec), g_group.denominator())) return k;
    }
    throw std::logic_error("element_order: no divisor annihilates the element (internal bug)");
}

Int discrete_log(const DiagGroup& g_group, const DiagAutomorphism& base,
                 const DiagAutomorphism& target, const Int& cap) {
    if (!g_group.contains(base)) throw std::invalid_argument("discrete_log: base is not in the group");
    if (!g_group.contains(target)) throw std::invalid_argument("discrete_log: target is not in the group");
    Int ord = element_order(g_group, base);
    if (ord > cap) throw std::invalid_argument("discrete_log: order of base exceeds the enumeration cap");
    DiagAutomorphism acc = base.power(0);
    for (Int k = 0; k < ord; ++k) {
        // equality in the group: difference lies in the denominator
        if (lattice_member(vec_sub(acc.vec, target.vec), g_group.denominator())) return k;
        acc = acc.compose(base);
    }
    throw std::invalid_argument("discrete_log: target is not a power of base");
}

FactorizationGroups factorization_groups(const CYPencil& p) {
    require_balanced(p, "factorization_groups");
    if (!power_factorization(p))
        throw std::invalid_argument("factorization_groups: pencil has no power-map factorization");
    Lattice lam0 = scalar_denominator_lattice(p.n, p.d);
    DiagGroup gamma_a = kernel_gamma_a(p);
    const Lattice& ker = gamma_a.numerator();

    std::vector<IntVec> scaled;
    for (const IntVec& row : ker.basis_rows()) scaled.push_back(vec_scale(p.m, row));
    Lattice mu_num = lattice_sum(Lattice::from_generators(scaled, p.n), lam0);

    DiagGroup mu(p.d, mu_num, lam0);
    DiagGroup gamma_prime(p.m, ker, mu_num);
    if (gamma_a.order() != mu.order() * gamma_prime.order())
        throw std::logic_error("factorization_groups: order identity violated (internal bug)");
    return FactorizationGroups{std::move(mu), std::move(gamma_prime)};
}

}  // namespace shioda
