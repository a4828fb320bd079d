#include "shioda/monomial_map.hpp"

#include <sstream>
#include <stdexcept>

namespace shioda {

namespace {

void require_balanced(const CYPencil& p, const char* what) {
    if (!p.balanced())
        throw std::invalid_argument(std::string(what) + ": pencil is not balanced (row and column sums must equal n)");
}

Int to_int(std::size_t n) { return Int(static_cast<long>(n)); }

}  // namespace

MonomialMap::MonomialMap(IntMatrix exponents) : e_(std::move(exponents)) {
    for (std::size_t i = 0; i < e_.rows(); ++i)
        if (vec_is_zero(e_.row(i)))
            throw std::invalid_argument("MonomialMap: zero row (coordinate would be constant)");
}

MonomialMap MonomialMap::identity(std::size_t n) { return MonomialMap(IntMatrix::identity(n)); }

MonomialMap MonomialMap::after(const MonomialMap& inner) const {
    if (source_dim() != inner.target_dim())
        throw std::invalid_argument("MonomialMap: composition dimension mismatch");
    return MonomialMap(e_ * inner.e_);
}

std::string MonomialMap::to_string(const std::string& var_prefix, std::size_t index_base) const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < e_.rows(); ++i) {
        if (i) out << " : ";
        bool any = false;
        for (std::size_t j = 0; j < e_.cols(); ++j) {
            if (e_.at(i, j) == 0) continue;
            if (any) out << "*";
            out << var_prefix << index_base + j;
            if (e_.at(i, j) != 1) out << "^" << e_.at(i, j).get_str();
            any = true;
        }
        if (!any) out << "1";
    }
    out << ")";
    return out.str();
}

ParamLaurentPoly pullback(const MonomialMap& map, const ParamLaurentPoly& poly) {
    if (poly.var_count() != map.target_dim())
        throw std::invalid_argument("pullback: polynomial variables do not match map target coordinates");
    const IntMatrix& e = map.exponents();
    ParamLaurentPoly out(map.source_dim());
    for (const LaurentTerm& t : poly.terms()) {
        IntVec img(map.source_dim(), Int(0));
        for (std::size_t i = 0; i < e.rows(); ++i) {
            if (t.expo[i] == 0) continue;
            for (std::size_t j = 0; j < e.cols(); ++j) img[j] += t.expo[i] * e.at(i, j);
        }
        out.add_term(t.coeff, t.t_deg, std::move(img));
    }
    return out;
}

ParamLaurentPoly f_a_t(const CYPencil& p) {
    require_balanced(p, "f_a_t");
    ParamLaurentPoly f(p.n);
    for (std::size_t i = 0; i < p.n; ++i) f.add_term(Int(1), 0, p.a.row(i));
    f.add_term(-to_int(p.n), 1, IntVec(p.n, Int(1)));
    return f;
}

ParamLaurentPoly fermat_pencil(std::size_t n, const Int& degree, const Int& t_power) {
    ParamLaurentPoly f(n);
    for (std::size_t j = 0; j < n; ++j) {
        IntVec e(n, Int(0));
        e[j] = degree;
        f.add_term(Int(1), 0, std::move(e));
    }
    f.add_term(-to_int(n), 1, IntVec(n, t_power));
    return f;
}

ParamLaurentPoly f_di_t(const CYPencil& p) {
    require_balanced(p, "f_di_t");
    return fermat_pencil(p.n, p.d, p.m);
}

MonomialMap shioda_map(const CYPencil& p) { return MonomialMap(p.b); }

MonomialMap q_map(const CYPencil& p) {
    require_balanced(p, "q_map");
    IntMatrix e(p.n + 1, p.n);
    for (std::size_t j = 0; j < p.n; ++j) e.at(0, j) = 1;
    for (std::size_t i = 0; i < p.n; ++i)
        for (std::size_t j = 0; j < p.n; ++j) e.at(i + 1, j) = p.a.at(i, j);
    return MonomialMap(e);
}

bool verify_shioda_pullback(const CYPencil& p) {
    require_balanced(p, "verify_shioda_pullback");
    return pullback(shioda_map(p), f_a_t(p)) == f_di_t(p);
}

bool verify_mirror_equations(const CYPencil& p) {
    require_balanced(p, "verify_mirror_equations");
    const std::size_t n = p.n;
    MonomialMap q = q_map(p);

    // (a) z_0^n - z_1...z_n pulls back to zero
    ParamLaurentPoly rel(n + 1);
    IntVec z0(n + 1, Int(0));
    z0[0] = to_int(n);
    rel.add_term(Int(1), 0, std::move(z0));
    IntVec zprod(n + 1, Int(1));
    zprod[0] = 0;
    rel.add_term(Int(-1), 0, std::move(zprod));
    if (!pullback(q, rel).is_zero()) return false;

    // (b) sum z_i - n t z_0 pulls back to F_{A,t}
    ParamLaurentPoly lin(n + 1);
    for (std::size_t i = 1; i <= n; ++i) {
        IntVec e(n + 1, Int(0));
        e[i] = 1;
        lin.add_term(Int(1), 0, std::move(e));
    }
    IntVec e0(n + 1, Int(0));
    e0[0] = 1;
    lin.add_term(-to_int(n), 1, std::move(e0));
    return pullback(q, lin) == f_a_t(p);
}

bool verify_composition(const CYPencil& p) {
    require_balanced(p, "verify_composition");
    IntMatrix composed = q_map(p).after(shioda_map(p)).exponents();
    IntMatrix expected(p.n + 1, p.n);
    for (std::size_t j = 0; j < p.n; ++j) expected.at(0, j) = p.m;
    for (std::size_t i = 0; i < p.n; ++i) expected.at(i + 1, i) = p.d;
    return composed == expected;
}

ClearedMap clearing_monomial(const MonomialMap& map) {
    const IntMatrix& e = map.exponents();
    IntVec shift(e.cols(), Int(0));
    for (std::size_t k = 0; k < e.cols(); ++k) {
        Int mn = e.at(0, k);
        for (std::size_t j = 1; j < e.rows(); ++j)
            if (e.at(j, k) < mn) mn = e.at(j, k);
        if (mn < 0) shift[k] = -mn;
    }
    IntMatrix shifted(e.rows(), e.cols());
    for (std::size_t j = 0; j < e.rows(); ++j)
        for (std::size_t k = 0; k < e.cols(); ++k) shifted.at(j, k) = e.at(j, k) + shift[k];
    bool uniform = true;
    for (std::size_t k = 1; k < shift.size(); ++k)
        if (shift[k] != shift[0]) uniform = false;
    return ClearedMap{std::move(shift), MonomialMap(std::move(shifted)), uniform};
}

std::optional<FactoredMap> power_factorization(const CYPencil& p) {
    require_balanced(p, "power_factorization");
    if (p.m <= 1) return std::nullopt;
    const Int n = to_int(p.n);

    for (std::size_t k = 0; k < p.n; ++k) {
        Int r0 = mod_reduce(p.b.at(0, k), n);
        for (std::size_t j = 1; j < p.n; ++j)
            if (mod_reduce(p.b.at(j, k), n) != r0) return std::nullopt;
    }
    ClearedMap cleared = clearing_monomial(shioda_map(p));
    const IntMatrix& c = cleared.shifted.exponents();
    for (std::size_t j = 0; j < p.n; ++j)
        for (std::size_t k = 0; k < p.n; ++k)
            if (c.at(j, k) % n != 0) return std::nullopt;

    IntMatrix inner(p.n, p.n);
    for (std::size_t j = 0; j < p.n; ++j)
        for (std::size_t k = 0; k < p.n; ++k) inner.at(j, k) = divexact(c.at(j, k), n);
    MonomialMap inner_map(inner);

    // inner composed with y -> y^n reproduces the cleared map
    MonomialMap power_map(IntMatrix::identity(p.n).scaled(n));
    if (!(inner_map.after(power_map) == cleared.shifted))
        throw std::logic_error("power_factorization: inner * power != cleared (internal bug)");

    // F_{dI,t}(y) descends to F_{mI,t}(u) under u = y^n
    Int m_over_n = divexact(p.m, n);
    ParamLaurentPoly f_m = fermat_pencil(p.n, p.m, m_over_n);
    ParamLaurentPoly descended(p.n);
    ParamLaurentPoly f_d = f_di_t(p);
    for (const LaurentTerm& t : f_d.terms()) {
        IntVec e(t.expo.size());
        for (std::size_t j = 0; j < e.size(); ++j) e[j] = divexact(t.expo[j], n);
        descended.add_term(t.coeff, t.t_deg, std::move(e));
    }
    if (!(descended == f_m))
        throw std::logic_error("power_factorization: F_{dI,t} does not descend to F_{mI,t} (internal bug)");

    return FactoredMap{std::move(inner_map), p.n, cleared.shift};
}

std::vector<std::string> render_change_of_variables(const CYPencil& p) {
    require_balanced(p, "render_change_of_variables");
    std::vector<std::string> out;
    for (std::size_t j = 0; j < p.n; ++j) {
        std::ostringstream line;
        line << "y" << j + 1 << " = ";
        bool any = false;
        for (std::size_t k = 0; k < p.n; ++k) {
            const Int& num = p.b.at(j, k);
            if (num == 0) continue;
            if (any) line << "*";
            Int g = gcd(abs(num), p.m);
            Int rn = divexact(num, g), rd = divexact(p.m, g);
            line << "x" << k + 1;
            if (rd == 1) {
                if (rn != 1) line << "^" << rn.get_str();
            } else {
                line << "^(" << rn.get_str() << "/" << rd.get_str() << ")";
            }
            any = true;
        }
        if (!any) line << "1";
        out.push_back(line.str());
    }
    return out;
}

}  // namespace shioda
