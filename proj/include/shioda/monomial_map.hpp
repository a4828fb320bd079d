#pragma once

#include <optional>
#include <string>

#include "shioda/laurent.hpp"
#include "shioda/pencil.hpp"

namespace shioda {

/// Laurent monomial map between projective spaces, stored as an integer
/// exponent matrix: rows = target coordinates, columns = source variables,
/// target coordinate j = prod_k source_k^{E[j][k]}. No zero rows.
class MonomialMap {
public:
    explicit MonomialMap(IntMatrix exponents);

    static MonomialMap identity(std::size_t n);

    const IntMatrix& exponents() const { return e_; }
    std::size_t target_dim() const { return e_.rows(); }
    std::size_t source_dim() const { return e_.cols(); }

    /// this after inner: exponent matrix = E_this * E_inner.
    MonomialMap after(const MonomialMap& inner) const;

    bool operator==(const MonomialMap& rhs) const = default;

    std::string to_string(const std::string& var_prefix = "y", std::size_t index_base = 1) const;

private:
    IntMatrix e_;
};

/// Substitute the map into a polynomial in the target coordinates: each
/// term exponent row k becomes k * E; coefficients and t-degrees carry over,
/// like terms merge, zero terms vanish.
ParamLaurentPoly pullback(const MonomialMap& map, const ParamLaurentPoly& poly);

/// F_{A,t} = sum_i prod_j x_j^{a_ij} - n t (prod_j x_j). Balanced pencils only.
ParamLaurentPoly f_a_t(const CYPencil& p);

/// F_{dI,t} = sum_j y_j^d - n t (prod_j y_j)^m. Balanced pencils only.
ParamLaurentPoly f_di_t(const CYPencil& p);

/// Fermat-type pencil polynomial sum x_i^degree - n t (prod x_i)^t_power.
ParamLaurentPoly fermat_pencil(std::size_t n, const Int& degree, const Int& t_power);

/// The Shioda map x_j = prod_k y_k^{b_jk}; exponent matrix = B.
MonomialMap shioda_map(const CYPencil& p);

/// (z_0 : ... : z_n) = (prod x_j : prod x_j^{a_1j} : ... ): all-ones row
/// stacked over A. Balanced pencils only.
MonomialMap q_map(const CYPencil& p);

/// phi* F_{A,t} == F_{dI,t}, structurally.
bool verify_shioda_pullback(const CYPencil& p);

/// (a) q* (z_0^n - z_1...z_n) == 0 and (b) q* (sum z_i - n t z_0) == F_{A,t}.
bool verify_mirror_equations(const CYPencil& p);

/// Exponent matrix of q after phi equals [(m,...,m); d*I].
bool verify_composition(const CYPencil& p);

/// Minimal per-column monomial multiplier making all coordinate functions
/// polynomial: shift_k = max(0, -min_j E[j][k]).
struct ClearedMap {
    IntVec shift;
    MonomialMap shifted;
    bool uniform_shift;  // all columns share one shift value
};

ClearedMap clearing_monomial(const MonomialMap& map);

/// Factorization of the cleared Shioda map through the power map y -> y^n.
struct FactoredMap {
    MonomialMap inner;  // in the power-map coordinates u
    std::size_t power;  // = n
    IntVec shift;       // clearing shift that was applied
};

/// Present iff m > 1, every column of B is constant mod n, and the cleared
/// exponents are all divisible by n; then inner = cleared / n. Also asserts
/// that F_{dI,t} descends to F_{mI,t} under u = y^n.
std::optional<FactoredMap> power_factorization(const CYPencil& p);

/// Coordinate j rendered as prod_k x_k^(b_jk/m), fractions in lowest terms
/// with the sign in the numerator; one string per coordinate, prefixed
/// "y<j> = ". Balanced pencils only.
std::vector<std::string> render_change_of_variables(const CYPencil& p);

}  // namespace shioda
