#include "shioda/invariant_forms.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace shioda {

namespace {

constexpr std::size_t kCosetCap = 100000;

void require_balanced(const CYPencil& p, const char* what) {
    if (!p.balanced())
        throw std::invalid_argument(std::string(what) + ": pencil is not balanced");
}

}  // namespace

ResidueFormIndex ResidueFormIndex::make(IntVec k, Int d) {
    Int sum = 0;
    for (const Int& x : k) {
        if (x < 0) throw std::invalid_argument("ResidueFormIndex: negative entry");
        sum += x;
    }
    if (sum != d - Int(static_cast<long>(k.size())))
        throw std::invalid_argument("ResidueFormIndex: entries must sum to d - n");
    return ResidueFormIndex{std::move(k), std::move(d)};
}

Lattice invariant_monomial_lattice(const std::vector<IntVec>& generators, const Int& modulus,
                                   std::size_t chart_size) {
    return congruence_solution_lattice(generators, modulus, chart_size);
}

bool verify_quotient_generators(const CYPencil& p) {
    require_balanced(p, "verify_quotient_generators");
    const std::size_t n = p.n;

    // the relation z_0^n = z_1...z_n: n * (1,...,1) equals the column sums of A
    for (std::size_t j = 0; j < n; ++j)
        if (vec_sum(p.a.col(j)) != Int(static_cast<long>(n))) return false;

    // generators of H_A without the scalar: B * (basis of Lambda), plus d e_j
    std::vector<IntVec> gens;
    for (const IntVec& row : sum_zero_lattice(n).basis_rows()) gens.push_back(p.b.apply(row));
    for (std::size_t j = 0; j < n; ++j) {
        IntVec e(n, Int(0));
        e[j] = p.d;
        gens.push_back(std::move(e));
    }

    // every coordinate monomial of q must pair to 0 mod d against each generator
    std::vector<IntVec> q_rows;
    q_rows.push_back(IntVec(n, Int(1)));
    for (std::size_t i = 0; i < n; ++i) q_rows.push_back(p.a.row(i));
    for (const IntVec& a : gens)
        for (const IntVec& r : q_rows)
            if (mod_reduce(vec_dot(r, a), p.d) != 0) return false;
    return true;
}

Int form_character(const ResidueFormIndex& k, const DiagAutomorphism& g) {
    if (k.k.size() != g.dim() || k.d != g.modulus)
        throw std::invalid_argument("form_character: dimension or modulus mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < g.dim(); ++i) s += (k.k[i] + 1) * g.vec[i];
    return mod_reduce(s, k.d);
}

std::vector<ResidueFormIndex> invariant_form_indices(const CYPencil& p) {
    require_balanced(p, "invariant_form_indices");
    const std::size_t n = p.n;
    const Int& d = p.d;

    // v = k + (1,...,1) must satisfy v . a == 0 mod d for every a in Lambda
    Lattice v_lattice =
        congruence_solution_lattice(sum_zero_lattice(n).basis_rows(), d, n);

    // enumerate cosets of d Z^n inside the solution lattice by closure on
    // componentwise mod-d representatives
    std::set<IntVec> reps;
    reps.insert(IntVec(n, Int(0)));
    std::vector<IntVec> frontier(reps.begin(), reps.end());
    const std::vector<IntVec> basis = v_lattice.basis_rows();
    while (!frontier.empty()) {
        IntVec w = frontier.back();
        frontier.pop_back();
        for (const IntVec& b : basis) {
            IntVec next(n);
            for (std::size_t i = 0; i < n; ++i) next[i] = mod_reduce(w[i] + b[i], d);
            if (reps.insert(next).second) frontier.push_back(next);
        }
        if (reps.size() > kCosetCap)
            throw std::invalid_argument("invariant_form_indices: coset enumeration exceeds cap");
    }

    // per coset w: solve v = w + d*t with v >= 1 componentwise and sum v = d
    std::vector<ResidueFormIndex> out;
    for (const IntVec& w : reps) {
        Int sum_w = vec_sum(w);
        if (mod_reduce(Int(d - sum_w), d) != 0) continue;
        if (d - sum_w < 0) continue;
        Int total = divexact(d - sum_w, d);  // sum of the t_i
        Int needed = 0;                      // coordinates with w_i = 0 need t_i >= 1
        for (const Int& x : w)
            if (x == 0) needed += 1;
        // any t_i above its minimum pushes v_i past d, impossible inside the
        // simplex {v >= 1, sum v = d}; so only the minimal t can work
        if (total != needed) continue;
        IntVec v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] == 0 ? d : w[i];
        if (vec_sum(v) != d) continue;
        IntVec k(n);
        for (std::size_t i = 0; i < n; ++i) k[i] = v[i] - 1;
        out.push_back(ResidueFormIndex::make(std::move(k), d));
    }
    std::sort(out.begin(), out.end(), [](const ResidueFormIndex& a, const ResidueFormIndex& b) {
        return std::lexicographical_compare(a.k.begin(), a.k.end(), b.k.begin(), b.k.end());
    });
    return out;
}

FormData pullback_form_data(const CYPencil& p) {
    require_balanced(p, "pullback_form_data");
    Int det_b = det(p.b);
    Int dn;
    mpz_pow_ui(dn.get_mpz_t(), p.d.get_mpz_t(), static_cast<unsigned long>(p.n));
    if (det_b * p.det_a != dn)
        throw std::logic_error("pullback_form_data: det(B) * det(A) != d^n (internal bug)");

    FormData out{p.m - 1, det_b, std::nullopt};
    if (det_b % p.m == 0) out.c_a = divexact(det_b, p.m);

    // the unique invariant index must be (l,...,l)
    auto indices = invariant_form_indices(p);
    if (indices.size() != 1 || indices[0].k != IntVec(p.n, out.l))
        throw std::logic_error("pullback_form_data: invariant index is not uniquely (m-1,...,m-1)");
    return out;
}

}  // namespace shioda
