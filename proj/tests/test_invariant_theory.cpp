#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "shioda/invariant_forms.hpp"

using namespace shioda;

namespace {

IntVec iv(std::initializer_list<long> xs) {
    IntVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("invariant monomial lattice of the mirror-quintic chart") {
    std::vector<IntVec> gens{iv({-1, 1, 0, 0}), iv({-1, 0, 1, 0}), iv({-1, 0, 0, 1})};
    Lattice l = invariant_monomial_lattice(gens, Int(5), 4);
    Lattice expected = Lattice::from_generators(
        IntMatrix::from_rows({{1, 1, 1, 1}, {5, 0, 0, 0}, {0, 5, 0, 0}, {0, 0, 5, 0}, {0, 0, 0, 5}}));
    CHECK(l == expected);
    CHECK(lattice_member(iv({1, 1, 1, 1}), l));
    CHECK_FALSE(lattice_member(iv({1, 0, 0, 0}), l));

    CHECK(invariant_monomial_lattice({}, Int(5), 3) == Lattice::full(3));
    CHECK(invariant_monomial_lattice({iv({1, 0})}, Int(3), 2) ==
          Lattice::from_generators(IntMatrix::from_rows({{3, 0}, {0, 1}})));
}

TEST_CASE("invariant lattice always contains the scaled full lattice") {
    std::mt19937 rng(31415);
    std::uniform_int_distribution<long> entry(-6, 6);
    for (int t = 0; t < 25; ++t) {
        std::vector<IntVec> gens(2, IntVec(4));
        for (auto& g : gens)
            for (auto& x : g) x = entry(rng);
        Lattice l = invariant_monomial_lattice(gens, Int(12), 4);
        CHECK(lattice_contains(l, Lattice::scaled_full(4, Int(12))));
    }
}

TEST_CASE("quotient generators are invariant for the built-in families") {
    for (int i : {1, 2, 6}) {
        CAPTURE(i);
        CHECK(verify_quotient_generators(validate(builtin_family(i), true)));
    }
    for (std::size_t n = 3; n <= 5; ++n)
        CHECK(verify_quotient_generators(validate(cyclic_family(n), true)));
}

TEST_CASE("form characters") {
    CYPencil f2 = validate(builtin_family(2), true);
    ResidueFormIndex top = ResidueFormIndex::make(IntVec(5, Int(204)), f2.d);

    DiagAutomorphism id = DiagAutomorphism::make(f2.d, IntVec(5, Int(0)));
    CHECK(form_character(top, id) == 0);

    // the (m-1,...,m-1) form is invariant for all of Gamma_d
    for (const auto& [name, g] : gamma_d_generators(f2)) {
        CAPTURE(name);
        CHECK(form_character(top, g) == 0);
    }

    // k = (d-n, 0, ..., 0) against g_1 = (-1,1,0,...,0): character n - d = 5 mod d
    IntVec k(5, Int(0));
    k[0] = f2.d - 5;
    ResidueFormIndex edge = ResidueFormIndex::make(k, f2.d);
    DiagAutomorphism g1 = DiagAutomorphism::make(f2.d, iv({-1, 1, 0, 0, 0}));
    CHECK(form_character(edge, g1) == 5);

    // bilinearity and scalar kill
    std::mt19937 rng(8675309);
    std::uniform_int_distribution<long> entry(-1000, 1000);
    for (int t = 0; t < 50; ++t) {
        IntVec a(5), b(5);
        for (auto& x : a) x = entry(rng);
        for (auto& x : b) x = entry(rng);
        DiagAutomorphism ga = DiagAutomorphism::make(f2.d, a);
        DiagAutomorphism gb = DiagAutomorphism::make(f2.d, b);
        CHECK(form_character(top, ga.compose(gb)) ==
              mod_reduce(form_character(top, ga) + form_character(top, gb), f2.d));
    }
    DiagAutomorphism scalar = DiagAutomorphism::make(f2.d, IntVec(5, Int(1)));
    CHECK(form_character(top, scalar) == 0);
    CHECK(form_character(edge, scalar) == 0);

    CHECK_THROWS_AS(ResidueFormIndex::make(IntVec(5, Int(1)), f2.d), std::invalid_argument);
    CHECK_THROWS_AS(form_character(top, DiagAutomorphism::make(Int(7), IntVec(5, Int(0)))),
                    std::invalid_argument);
}

TEST_CASE("the invariant form index is unique and equals (m-1,...,m-1)") {
    auto check_unique = [](const CYPencil& p) {
        auto indices = invariant_form_indices(p);
        REQUIRE(indices.size() == 1);
        CHECK(indices[0].k == IntVec(p.n, p.m - 1));
    };
    for (int i = 1; i <= 6; ++i) {
        CAPTURE(i);
        check_unique(validate(builtin_family(i), true));
    }
    for (std::size_t n = 3; n <= 6; ++n) {
        CAPTURE(n);
        check_unique(validate(cyclic_family(n), true));
    }

    // family 5: m = 39, so the index is (38,...,38)
    auto f5 = invariant_form_indices(validate(builtin_family(5), true));
    CHECK(f5[0].k == IntVec(5, Int(38)));
    // family 1: m = 1 gives the zero index
    auto f1 = invariant_form_indices(validate(builtin_family(1), true));
    CHECK(f1[0].k == IntVec(5, Int(0)));
}

TEST_CASE("pullback form data") {
    CYPencil f1 = validate(builtin_family(1), true);
    FormData d1 = pullback_form_data(f1);
    CHECK(d1.l == 0);
    CHECK(d1.det_b == 1);
    REQUIRE(d1.c_a.has_value());
    CHECK(*d1.c_a == 1);

    CYPencil f2 = validate(builtin_family(2), true);
    FormData d2 = pullback_form_data(f2);
    CHECK(d2.l == 204);
    Int expect;  // 5^7 * 41^3
    mpz_ui_pow_ui(expect.get_mpz_t(), 5, 7);
    Int w;
    mpz_ui_pow_ui(w.get_mpz_t(), 41, 3);
    expect *= w;
    REQUIRE(d2.c_a.has_value());
    CHECK(*d2.c_a == expect);
    CHECK(d2.det_b == det(f2.b));  // direct determinant of B is the oracle

    CYPencil f6 = validate(builtin_family(6), true);
    FormData d6 = pullback_form_data(f6);
    CHECK(d6.l == 2);
    CHECK(d6.det_b == 405);
    REQUIRE(d6.c_a.has_value());
    CHECK(*d6.c_a == 135);

    // c_A * m = det(B) for every balanced built-in
    for (int i = 1; i <= 6; ++i) {
        CYPencil p = validate(builtin_family(i), true);
        FormData fd = pullback_form_data(p);
        REQUIRE(fd.c_a.has_value());
        CHECK(*fd.c_a * p.m == fd.det_b);
        CHECK(fd.det_b == det(p.b));
    }
}
