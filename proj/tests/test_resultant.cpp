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
using poscert::testing::random_symmetric;

namespace {

// Independent univariate-discriminant oracle: determinant of the Sylvester
// matrix of p and p' (classical resultant). Cofactor expansion up to 8x8;
// the cofactor-validated Bareiss engine beyond that.
Rat univariate_resultant(const UniPoly& p, const UniPoly& q) {
    const int m = p.degree(), l = q.degree();
    std::vector<std::vector<Rat>> s(m + l, std::vector<Rat>(m + l, Rat(0)));
    for (int r = 0; r < l; ++r)
        for (int i = 0; i <= m; ++i) s[r][r + i] = p.coeff(m - i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= l; ++i) s[l + r][r + i] = q.coeff(l - i);
    return m + l <= 8 ? cofactor_det(s) : determinant(s);
}

UniPoly dehomogenize(const HomogPoly& f) {
    std::vector<Rat> c(f.degree() + 1);
    for (int k = 0; k <= f.degree(); ++k) c[k] = f.coefficient({f.degree() - k, k});
    // ascending in x2-exponent = ascending in t for F(1, t)
    return UniPoly(std::move(c));
}

}  // namespace

TEST_CASE("discriminant degree formula") {
    CHECK(discriminant_degree(2, 4) == 6);
    CHECK(discriminant_degree(3, 4) == 27);
    CHECK(discriminant_degree(2, 2) == 2);
    CHECK(discriminant_degree(3, 2) == 3);
    CHECK(discriminant_degree(4, 2) == 4);
    CHECK(discriminant_degree(2, 6) == 10);
}

TEST_CASE("resultant matrix sizes") {
    CHECK(resultant_matrix_size(1, 4) == 1);
    CHECK(resultant_matrix_size(2, 4) == 6);
    CHECK(resultant_matrix_size(3, 4) == 36);
    CHECK(resultant_matrix_size(4, 4) == 220);
    CHECK(resultant_matrix_size(3, 2) == 3);
}

TEST_CASE("exact determinant agrees with cofactor expansion") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 1 + trial % 5;
        Matrix m(n, std::vector<Rat>(n));
        for (auto& row : m)
            for (Rat& e : row) e = poscert::testing::random_rational(rng);
        CHECK(determinant(m) == cofactor_det(m));
    }
    CHECK(determinant({}) == 1);
    Matrix singular{{1, 2}, {2, 4}};
    CHECK(determinant(singular) == 0);
}

TEST_CASE("gradient resultant basics") {
    CHECK(gradient_resultant(HomogPoly::parse("x1^2 + x2^2", 2)) != 0);
    CHECK(gradient_resultant(HomogPoly::parse("x1^4 + 2 x1^2 x2^2 + x2^4", 2)) == 0);
    CHECK(gradient_resultant(HomogPoly::parse("x1^2 x2^2", 2)) == 0);
    CHECK(gradient_resultant(HomogPoly(2, 4)) == 0);
    CHECK(gradient_resultant(HomogPoly::parse("5 x1^4", 1)) == 5);
}

TEST_CASE("discriminant normalization and the one-variable convention") {
    for (const auto& [n, d] :
         std::vector<std::pair<int, int>>{{1, 4}, {2, 2}, {2, 4}, {3, 2}, {3, 4}, {4, 2}})
        CHECK(discriminant(HomogPoly::reference_form(n, d)) == 1);
    CHECK(discriminant(HomogPoly::parse("7 x1^6", 1)) == 7);
    CHECK(discriminant(HomogPoly::parse("x1^2 - x2^2", 2).restrict({2})) == -1);
}

TEST_CASE("binary quadratic discriminant is (4ac - b^2)/4") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        const Rat a = poscert::testing::random_rational(rng);
        const Rat b = poscert::testing::random_rational(rng);
        const Rat c = poscert::testing::random_rational(rng);
        HomogPoly f(2, 2);
        if (a != 0) f = f + HomogPoly::monomial(2, {2, 0}, a);
        if (b != 0) f = f + HomogPoly::monomial(2, {1, 1}, b);
        if (c != 0) f = f + HomogPoly::monomial(2, {0, 2}, c);
        if (f.is_zero()) continue;
        CHECK(discriminant(f) == (4 * a * c - b * b) / 4);
    }
}

TEST_CASE("d=2 oracle: discriminant equals det of the symmetric matrix") {
    std::mt19937_64 rng(43);
    for (int n = 2; n <= 4; ++n)
        for (int trial = 0; trial < 8; ++trial) {
            const SymMatrix a = random_symmetric(rng, n);
            const HomogPoly f = quadratic_from_matrix(a);
            if (f.is_zero()) continue;
            std::vector<std::vector<Rat>> dense(n, std::vector<Rat>(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) dense[i][j] = a.at(i, j);
            CHECK(discriminant(f) == cofactor_det(dense));
        }
}

TEST_CASE("discriminant is homogeneous of degree D in the coefficients") {
    std::mt19937_64 rng(44);
    for (const auto& [n, d] : std::vector<std::pair<int, int>>{{2, 4}, {3, 2}, {3, 4}}) {
        const Int D = discriminant_degree(n, d);
        for (int trial = 0; trial < 4; ++trial) {
            const HomogPoly f = random_poly(rng, n, d, 4);
            const Rat lambda = random_nonzero_rational(rng, 3, 2);
            CHECK(robust_discriminant(f.scale(lambda)) ==
                  pow_rat(lambda, static_cast<unsigned>(D.get_ui())) * robust_discriminant(f));
        }
    }
}

TEST_CASE("binary forms: discriminant vanishes exactly with the univariate one") {
    std::mt19937_64 rng(45);
    for (int d = 3; d <= 6; ++d) {
        for (int trial = 0; trial < 8; ++trial) {
            HomogPoly f = random_poly(rng, 2, d, 4);
            // Keep the dehomogenization F(1, t) at full degree so its roots
            // see every projective root.
            if (f.coefficient({0, d}) == 0) f = f + HomogPoly::monomial(2, {0, d}, 1);
            const UniPoly p = dehomogenize(f);
            const Rat classical = univariate_resultant(p, p.derivative());
            CHECK((discriminant(f) == 0) == (classical == 0));
        }
        // A squared linear factor forces both to vanish.
        HomogPoly g = random_poly(rng, 2, d - 2, 3);
        const HomogPoly lin = HomogPoly::parse("x1 + x2", 2);
        if ((lin * lin * g).coefficient({0, d}) == 0)
            g = g + HomogPoly::monomial(2, {0, d - 2}, 1);
        const HomogPoly f = lin * lin * g;
        CHECK(discriminant(f) == 0);
        if (f.coefficient({0, d}) != 0) {
            const UniPoly p = dehomogenize(f);
            CHECK(univariate_resultant(p, p.derivative()) == 0);
        }
    }
}

TEST_CASE("squares are singular") {
    std::mt19937_64 rng(46);
    for (int trial = 0; trial < 6; ++trial) {
        const HomogPoly g = random_poly(rng, 2, 2, 4);
        CHECK(discriminant(g * g) == 0);
        const HomogPoly lin = random_poly(rng, 3, 1, 4);
        CHECK(discriminant(lin * lin) == 0);
    }
}

TEST_CASE("nonnegative combinations of even powers have nonnegative discriminant") {
    std::mt19937_64 rng(47);
    for (const auto& [n, two_d] : std::vector<std::pair<int, int>>{{2, 4}, {3, 2}, {2, 6}, {3, 4}}) {
        for (int trial = 0; trial < 4; ++trial) {
            const HomogPoly f = random_power_combination(rng, n, two_d, 1 + trial % 4);
            CHECK(robust_discriminant(f) >= 0);
        }
    }
}

TEST_CASE("robust discriminant recovers degenerate direct evaluations") {
    const HomogPoly f = HomogPoly::parse("x1^4", 3);
    CHECK_THROWS_AS(discriminant(f), degenerate_specialization_error);
    CHECK(robust_discriminant(f) == 0);
    // Agreement with the direct path on a clean specialization.
    const HomogPoly j = HomogPoly::reference_form(3, 4);
    CHECK(robust_discriminant(j) == discriminant(j));
}

TEST_CASE("diagonal forms have the closed-form discriminant (prod a_i)^((d-1)^(n-1))") {
    std::mt19937_64 rng(48);
    for (int trial = 0; trial < 5; ++trial) {
        const Rat a = random_nonzero_rational(rng, 5, 3);
        const Rat b = random_nonzero_rational(rng, 5, 3);
        const Rat c = random_nonzero_rational(rng, 5, 3);
        const Rat e = random_nonzero_rational(rng, 5, 3);

        HomogPoly f2(2, 4);
        f2 = f2 + HomogPoly::monomial(2, {4, 0}, a) + HomogPoly::monomial(2, {0, 4}, b);
        CHECK(discriminant(f2) == pow_rat(a * b, 3));

        HomogPoly f3(3, 4);
        f3 = f3 + HomogPoly::monomial(3, {4, 0, 0}, a) + HomogPoly::monomial(3, {0, 4, 0}, b) +
             HomogPoly::monomial(3, {0, 0, 4}, c);
        CHECK(discriminant(f3) == pow_rat(a * b * c, 9));

        HomogPoly f4(4, 2);
        f4 = f4 + HomogPoly::monomial(4, {2, 0, 0, 0}, a) + HomogPoly::monomial(4, {0, 2, 0, 0}, b) +
             HomogPoly::monomial(4, {0, 0, 2, 0}, c) + HomogPoly::monomial(4, {0, 0, 0, 2}, e);
        CHECK(discriminant(f4) == a * b * c * e);
    }
    // (4,4) exercises the largest supported Macaulay structure (220x220).
    HomogPoly g(4, 4);
    g = g + HomogPoly::monomial(4, {4, 0, 0, 0}, 1) + HomogPoly::monomial(4, {0, 4, 0, 0}, 2) +
        HomogPoly::monomial(4, {0, 0, 4, 0}, 1) + HomogPoly::monomial(4, {0, 0, 0, 4}, 3);
    CHECK(discriminant(g) == pow_rat(Rat(6), 27));
}

TEST_CASE("degenerate Macaulay specialization is reported distinctly") {
    // Gradient (4 x1^3, 0, 0): zero rows make the denominator minor vanish.
    CHECK_THROWS_AS(gradient_resultant(HomogPoly::parse("x1^4", 3)),
                    degenerate_specialization_error);
}

TEST_CASE("capacity limits are enforced") {
    CHECK_THROWS_AS(gradient_resultant(HomogPoly::reference_form(5, 4)), capacity_error);
    CHECK_THROWS_AS(gradient_resultant(HomogPoly::reference_form(4, 6)), capacity_error);
}
