#pragma once

#include <string>
#include <vector>

#include "shioda/int_matrix.hpp"

namespace shioda {

/// One monomial c * t^t_deg * x^expo of a parameterized Laurent polynomial.
struct LaurentTerm {
    Int coeff;           // nonzero
    unsigned long t_deg; // formal pencil parameter degree
    IntVec expo;         // may have negative entries

    bool operator==(const LaurentTerm& rhs) const = default;
};

/// Sparse Laurent polynomial with integer coefficients and a formal
/// parameter t. Terms are kept in a canonical order (t_deg ascending, then
/// exponent vector lexicographically descending) with distinct
/// (t_deg, expo) keys, so equality is structural. The zero polynomial is
/// the empty term set.
class ParamLaurentPoly {
public:
    explicit ParamLaurentPoly(std::size_t var_count) : vars_(var_count) {}

    static ParamLaurentPoly zero(std::size_t var_count) { return ParamLaurentPoly(var_count); }

    std::size_t var_count() const { return vars_; }
    const std::vector<LaurentTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Merge a term in; cancels to nothing when coefficients sum to zero.
    void add_term(Int coeff, unsigned long t_deg, IntVec expo);

    ParamLaurentPoly operator+(const ParamLaurentPoly& rhs) const;
    ParamLaurentPoly operator-() const;

    bool operator==(const ParamLaurentPoly& rhs) const = default;

    /// Stable pretty-printer. Variables are <prefix><index> with index
    /// starting at index_base; the parameter prints as t. Terms appear in
    /// the canonical order described above.
    std::string to_string(const std::string& var_prefix = "x", std::size_t index_base = 1) const;

private:
    std::size_t vars_;
    std::vector<LaurentTerm> terms_;
};

}  // namespace shioda
