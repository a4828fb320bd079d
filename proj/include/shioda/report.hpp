#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shioda/diag_group.hpp"
#include "shioda/invariant_forms.hpp"
#include "shioda/monomial_map.hpp"
#include "shioda/pencil.hpp"

namespace shioda {

/// "p1^e1·p2^e2·..." with bare primes for exponent 1; "1" for x = 1.
std::string factorization_string(const Int& x);

/// "Z/a x Z/b x ..." or "trivial"; repeated factors group as (Z/a)^k.
std::string structure_string(const std::vector<Int>& factors);

struct GroupReport {
    std::string name;
    Int modulus;
    std::vector<Int> invariant_factors;
    Int order;
    // named generators with canonical vectors (populated for Gamma_d)
    std::vector<std::pair<std::string, IntVec>> generators;
};

struct VerificationFlags {
    bool shioda_pullback = false;
    bool mirror_equations = false;
    bool composition = false;
    bool order_identity = false;
    bool invariant_form_uniqueness = false;

    bool all_ok() const {
        return shioda_pullback && mirror_equations && composition && order_identity &&
               invariant_form_uniqueness;
    }
};

struct FactorizationReport {
    bool present = false;
    IntVec shift;
    bool uniform_shift = false;
    std::size_t power = 0;
    std::optional<IntMatrix> inner;
};

/// Self-contained analysis of one pencil: re-running analyze on the embedded
/// matrix reproduces the report byte for byte.
struct AnalysisReport {
    IntMatrix matrix;
    std::size_t n = 0;
    Int e;
    Int det_a;
    Int d;
    Int m;
    IntMatrix b;
    bool assumes_irreducible = true;  // hypothesis of the quotient theorem, not checked

    GroupReport gamma_d;
    GroupReport gamma_a;
    GroupReport h_a;
    std::optional<GroupReport> mu_a;
    std::optional<GroupReport> gamma_prime_a;

    VerificationFlags flags;

    Int form_l;
    Int form_det_b;
    std::optional<Int> form_c_a;

    FactorizationReport factorization;

    AnalysisReport() : matrix(1, 1), b(1, 1) {}
};

/// Full analysis of a balanced defining matrix. Throws std::invalid_argument
/// on invalid input (the message names the violated precondition).
AnalysisReport analyze(const IntMatrix& a);

std::string report_to_json(const AnalysisReport& r);
std::string report_to_text(const AnalysisReport& r);

/// The six built-in families: index, defining polynomial, d with its prime
/// factorization.
std::string table_text();
std::string table_json();

/// Reproduces the order-41 symmetry chain of the second family: the image
/// generator, its order, the discrete logs of the other generator images,
/// and the DGJ scaling element as a power of the image generator.
/// corrupt_b perturbs B first (test hook); the log then names the first
/// mismatched quantity.
struct DgjCheckResult {
    bool ok = false;
    std::string log;
};

DgjCheckResult dgj_check(bool corrupt_b = false);

/// Closed-form checks for the cyclic family: determinant, circulant B,
/// clearing shift, power-map factorization.
struct CyclicCheckResult {
    bool ok = false;
    std::string log;
};

CyclicCheckResult cyclic_check(std::size_t n);

}  // namespace shioda
