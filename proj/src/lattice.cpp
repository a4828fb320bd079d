#include "shioda/lattice.hpp"

#include <stdexcept>

#include "shioda/smith.hpp"

namespace shioda {

Lattice Lattice::from_generators(const IntMatrix& gens) {
    HermiteResult hr = hermite_with_transform(gens);
    if (hr.rank == 0) return Lattice(gens.cols(), 0, std::nullopt);
    IntMatrix basis(hr.rank, gens.cols());
    for (std::size_t i = 0; i < hr.rank; ++i)
        for (std::size_t j = 0; j < gens.cols(); ++j) basis.at(i, j) = hr.h.at(i, j);
    return Lattice(gens.cols(), hr.rank, std::move(basis));
}

Lattice Lattice::from_generators(const std::vector<IntVec>& gens, std::size_t ambient_rank) {
    if (gens.empty()) return Lattice(ambient_rank, 0, std::nullopt);
    for (const auto& g : gens)
        if (g.size() != ambient_rank)
            throw std::invalid_argument("Lattice: generator length does not match ambient rank");
    return from_generators(IntMatrix::from_rows(gens));
}

Lattice Lattice::full(std::size_t n) { return from_generators(IntMatrix::identity(n)); }

Lattice Lattice::scaled_full(std::size_t n, const Int& c) {
    return from_generators(IntMatrix::identity(n).scaled(c));
}

std::vector<IntVec> Lattice::basis_rows() const {
    std::vector<IntVec> rows;
    if (!basis_) return rows;
    for (std::size_t i = 0; i < rank_; ++i) rows.push_back(basis_->row(i));
    return rows;
}

Int Lattice::covolume() const {
    if (rank_ != ambient_) throw std::invalid_argument("covolume: lattice is not full rank");
    // pivots of a full-rank HNF sit on the diagonal
    Int p = 1;
    for (std::size_t i = 0; i < rank_; ++i) p *= basis_->at(i, i);
    return p;
}

Lattice lattice_sum(const Lattice& l1, const Lattice& l2) {
    if (l1.ambient_rank() != l2.ambient_rank())
        throw std::invalid_argument("lattice_sum: ambient rank mismatch");
    if (l1.rank() == 0) return l2;
    if (l2.rank() == 0) return l1;
    return Lattice::from_generators(l1.basis()->vstack(*l2.basis()));
}

Lattice lattice_intersection(const Lattice& l1, const Lattice& l2) {
    if (l1.ambient_rank() != l2.ambient_rank())
        throw std::invalid_argument("lattice_intersection: ambient rank mismatch");
    if (l1.rank() == 0 || l2.rank() == 0)
        return Lattice::from_generators(std::vector<IntVec>{}, l1.ambient_rank());
    // (x, y) with x B1 - y B2 = 0; intersection vectors are x B1.
    IntMatrix stacked = l1.basis()->vstack(l2.basis()->scaled(Int(-1)));
    std::vector<IntVec> ker = left_kernel_basis(stacked);
    std::vector<IntVec> gens;
    for (const IntVec& z : ker) {
        IntVec x(z.begin(), z.begin() + static_cast<long>(l1.rank()));
        gens.push_back(l1.basis()->transpose().apply(x));
    }
    return Lattice::from_generators(gens, l1.ambient_rank());
}

std::optional<IntVec> lattice_coordinates(const IntVec& v, const Lattice& l) {
    if (v.size() != l.ambient_rank())
        throw std::invalid_argument("lattice_member: vector length does not match ambient rank");
    IntVec w = v;
    IntVec coords;
    if (l.rank() == 0) return vec_is_zero(w) ? std::optional<IntVec>(IntVec{}) : std::nullopt;
    const IntMatrix& b = *l.basis();
    for (std::size_t r = 0; r < l.rank(); ++r) {
        std::size_t p = 0;
        while (b.at(r, p) == 0) ++p;  // pivot column of echelon row
        if (w[p] % b.at(r, p) != 0) return std::nullopt;
        Int q = w[p] / b.at(r, p);
        coords.push_back(q);
        if (q != 0)
            for (std::size_t j = 0; j < w.size(); ++j) w[j] -= q * b.at(r, j);
    }
    if (!vec_is_zero(w)) return std::nullopt;
    return coords;
}

bool lattice_member(const IntVec& v, const Lattice& l) {
    return lattice_coordinates(v, l).has_value();
}

Lattice lattice_preimage_general(const IntMatrix& m, const Lattice& l) {
    if (m.rows() != l.ambient_rank())
        throw std::invalid_argument("lattice_preimage: map target does not match lattice ambient");
    const std::size_t c = m.cols();
    if (l.rank() == 0) {
        // preimage of {0} = integer kernel of m
        return Lattice::from_generators(right_kernel_basis(m), c);
    }
    // solve m a = basis^T y: kernel of [m | -basis^T], projected to a.
    IntMatrix sys = m.hstack(l.basis()->transpose().scaled(Int(-1)));
    std::vector<IntVec> ker = right_kernel_basis(sys);
    std::vector<IntVec> gens;
    for (const IntVec& z : ker) gens.emplace_back(z.begin(), z.begin() + static_cast<long>(c));
    return Lattice::from_generators(gens, c);
}

Lattice lattice_preimage(const IntMatrix& m, const Lattice& l) {
    if (!m.is_square()) throw std::invalid_argument("lattice_preimage: matrix is not square");
    if (det(m) == 0) throw std::invalid_argument("lattice_preimage: matrix is singular");
    if (!l.is_full_rank()) throw std::invalid_argument("lattice_preimage: lattice is not full rank");
    return lattice_preimage_general(m, l);
}

Lattice lattice_image(const IntMatrix& a, const Lattice& l) {
    if (a.cols() != l.ambient_rank())
        throw std::invalid_argument("lattice_image: dimension mismatch");
    if (l.rank() == 0) return Lattice::from_generators(std::vector<IntVec>{}, a.rows());
    return Lattice::from_generators(*l.basis() * a.transpose());
}

std::vector<Int> lattice_quotient_invariants(const Lattice& l1, const Lattice& l2) {
    if (l1.ambient_rank() != l2.ambient_rank())
        throw std::invalid_argument("lattice_quotient: ambient rank mismatch");
    if (l1.rank() != l2.rank())
        throw std::invalid_argument("lattice_quotient: quotient is infinite (rank mismatch)");
    if (l1.rank() == 0) return {};
    std::vector<IntVec> coords;
    for (const IntVec& row : l2.basis_rows()) {
        auto x = lattice_coordinates(row, l1);
        if (!x) throw std::invalid_argument("lattice_quotient: second lattice is not contained in the first");
        coords.push_back(*x);
    }
    return snf(IntMatrix::from_rows(coords)).invariant_factors();
}

Int lattice_index(const Lattice& l1, const Lattice& l2) {
    Int idx = 1;
    for (const Int& f : lattice_quotient_invariants(l1, l2)) idx *= f;
    return idx;
}

bool lattice_contains(const Lattice& outer, const Lattice& inner) {
    for (const IntVec& row : inner.basis_rows())
        if (!lattice_member(row, outer)) return false;
    return true;
}

Lattice congruence_solution_lattice(const std::vector<IntVec>& gens, const Int& modulus,
                                    std::size_t chart_size) {
    for (const auto& g : gens)
        if (g.size() != chart_size)
            throw std::invalid_argument("congruence lattice: generator length mismatch");
    if (modulus <= 0) throw std::invalid_argument("congruence lattice: modulus must be positive");
    if (gens.empty()) return Lattice::full(chart_size);
    IntMatrix g = IntMatrix::from_rows(gens);
    return lattice_preimage_general(g, Lattice::scaled_full(gens.size(), modulus));
}

}  // namespace shioda
