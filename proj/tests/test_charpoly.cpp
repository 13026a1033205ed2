#include "doctest.h"

#include "poscert/charpoly.hpp"
#include "poscert/errors.hpp"
#include "poscert/resultant.hpp"
#include "test_support.hpp"

using namespace poscert;
using poscert::testing::cofactor_det;
using poscert::testing::quadratic_from_matrix;
using poscert::testing::random_nonzero_rational;
using poscert::testing::random_poly;
using poscert::testing::random_power_combination;
using poscert::testing::random_rational;
using poscert::testing::random_symmetric;

namespace {

UniPoly binomial_power(const UniPoly& base, int e) {
    UniPoly p = UniPoly::constant(1);
    for (int i = 0; i < e; ++i) p = p * base;
    return p;
}

}  // namespace

TEST_CASE("char_poly of the reference form is (1+t)^D") {
    for (const auto& [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {2, 4}, {3, 2}}) {
        const int D = static_cast<int>(discriminant_degree(n, d).get_si());
        CHECK(char_poly(HomogPoly::reference_form(n, d)) == binomial_power(UniPoly({1, 1}), D));
    }
}

TEST_CASE("char_poly fixed examples") {
    CHECK(char_poly(HomogPoly::parse("x1^2 + 2 x2^2", 2)) == UniPoly({2, 3, 1}));
    CHECK(char_poly(-HomogPoly::reference_form(2, 4)) ==
          binomial_power(UniPoly({-1, 1}), 6));  // (t-1)^6
}

TEST_CASE("d=2 oracle: char_poly equals det(A + tI)") {
    std::mt19937_64 rng(51);
    for (int n = 2; n <= 4; ++n)
        for (int trial = 0; trial < 6; ++trial) {
            const SymMatrix a = random_symmetric(rng, n);
            const HomogPoly f = quadratic_from_matrix(a);
            if (f.is_zero()) continue;
            std::vector<std::vector<UniPoly>> pencil(n, std::vector<UniPoly>(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    pencil[i][j] = UniPoly::constant(a.at(i, j));
                    if (i == j) pencil[i][j] = pencil[i][j] + UniPoly::term(1, 1);
                }
            CHECK(char_poly(f) == cofactor_det(pencil));
        }
}

TEST_CASE("constant term is the discriminant; monic of degree D") {
    std::mt19937_64 rng(52);
    for (const auto& [n, d] : std::vector<std::pair<int, int>>{{2, 4}, {3, 2}, {2, 6}}) {
        for (int trial = 0; trial < 4; ++trial) {
            const HomogPoly f = random_poly(rng, n, d, 4);
            const UniPoly chi = char_poly(f);
            CHECK(chi.degree() == discriminant_degree(n, d));
            CHECK(chi.leading() == 1);
            CHECK(chi.coeff(0) == discriminant(f));
        }
    }
}

TEST_CASE("coefficient j is homogeneous of degree D - j in F") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 6; ++trial) {
        const HomogPoly f = random_poly(rng, 2, 4, 4);
        const Rat lambda = random_nonzero_rational(rng, 3, 2);
        const UniPoly chi = char_poly(f);
        const UniPoly chi_scaled = char_poly(f.scale(lambda));
        const int D = chi.degree();
        for (int j = 0; j <= D; ++j)
            CHECK(chi_scaled.coeff(j) ==
                  pow_rat(lambda, static_cast<unsigned>(D - j)) * chi.coeff(j));
    }
}

TEST_CASE("subspace characteristic polynomials") {
    CHECK(char_poly_on_subspace(HomogPoly::parse("x1^4 + x2^4", 2), {1}) == UniPoly({1, 1}));
    CHECK(char_poly_on_subspace(HomogPoly::reference_form(3, 2), {1, 2}) ==
          binomial_power(UniPoly({1, 1}), 2));
    const HomogPoly f = HomogPoly::parse("x1^4 - 3 x1^2 x2^2 + x2^4", 2);
    CHECK(char_poly_on_subspace(f, {1, 2}) == char_poly(f));
}

TEST_CASE("degenerate nodes are retried deterministically") {
    // Every pencil evaluation of x1^4 in three variables at t = 0 hits the
    // vanishing denominator minor; the node is replaced and the constant
    // term still comes out as discriminant = 0.
    const HomogPoly f = HomogPoly::parse("x1^4", 3);
    const UniPoly chi = char_poly(f);
    CHECK(chi.degree() == 27);
    CHECK(chi.leading() == 1);
    CHECK(chi.coeff(0) == 0);
    CHECK(char_poly(f) == chi);  // identical on a rerun
}

TEST_CASE("generalized characteristic evaluation") {
    const HomogPoly f = HomogPoly::parse("x1^4 - 3 x1^2 x2^2 + x2^4", 2);
    const HomogPoly j = HomogPoly::reference_form(2, 4);
    const Rat t0 = make_rational(7, 3);
    CHECK(generalized_char_eval(f, {j}, {t0}) == char_poly(f)(t0));
    CHECK(generalized_char_eval(HomogPoly(2, 4), {j}, {Rat(1)}) == 1);
    CHECK(generalized_char_eval(f, {j, j}, {Rat(1), Rat(1)}) ==
          discriminant(f + j.scale(2)));
    CHECK_THROWS_AS(generalized_char_eval(f, {j}, {Rat(1), Rat(2)}), std::invalid_argument);
}

TEST_CASE("necessary condition sampled on nonnegative combinations") {
    std::mt19937_64 rng(54);
    for (int trial = 0; trial < 6; ++trial) {
        const HomogPoly f = random_power_combination(rng, 2, 4, 1 + trial % 3);
        const UniPoly chi = char_poly(f);
        for (int s = 0; s < 25; ++s) CHECK(chi(abs(random_rational(rng, 20, 5))) >= 0);
    }
}

TEST_CASE("parallel evaluation returns the identical polynomial") {
    std::mt19937_64 rng(55);
    const HomogPoly f = random_poly(rng, 3, 4, 4);
    CHECK(char_poly(f, true) == char_poly(f, false));
}

TEST_CASE("char_poly input validation") {
    CHECK_THROWS_AS(char_poly(HomogPoly::parse("x1^3", 2)), std::invalid_argument);
    CHECK_THROWS_AS(char_poly(HomogPoly::reference_form(4, 6)), capacity_error);
}
