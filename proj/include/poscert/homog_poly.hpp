#ifndef POSCERT_HOMOG_POLY_HPP
#define POSCERT_HOMOG_POLY_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "poscert/monomial.hpp"
#include "poscert/rational.hpp"

namespace poscert {

using Matrix = std::vector<std::vector<Rat>>;

/// Sparse homogeneous polynomial of degree d in n variables with exact
/// rational coefficients. Zero coefficients are never stored, so equality
/// is structural. The zero polynomial keeps its (n, d) metadata.
///
/// Values are immutable after construction; all operations are pure.
class HomogPoly {
  public:
    HomogPoly(int n, int d);

    static HomogPoly zero(int n, int d) { return HomogPoly(n, d); }
    static HomogPoly monomial(int n, const Exponents& exps, const Rat& coeff);

    /// J(x) = x_1^d + ... + x_n^d, the reference form.
    static HomogPoly reference_form(int n, int d);

    /// Parses the term grammar described in the README ("x1^2 x2", integer
    /// or p/q coefficients, +/- separators). Degree is inferred and all
    /// terms must share it.
    static HomogPoly parse(const std::string& text, int n);

    int var_count() const { return n_; }
    int degree() const { return d_; }
    bool is_zero() const { return coeffs_.empty(); }
    int term_count() const { return static_cast<int>(coeffs_.size()); }
    const std::map<Exponents, Rat>& terms() const { return coeffs_; }

    /// Coefficient of x^exps (zero if the monomial is absent).
    Rat coefficient(const Exponents& exps) const;

    Rat evaluate(std::span<const Rat> point) const;

    /// d/dx_i, i is 1-based. Result is homogeneous of degree d-1.
    HomogPoly partial_derivative(int i) const;

    /// Sets x_i = 0 for i not in `keep` (1-based, non-empty) and renumbers
    /// the kept variables in increasing order.
    HomogPoly restrict(const std::vector<int>& keep) const;

    /// Substitutes x_j = sum_k A[k][j] * y_k for an m-by-n matrix A, i.e.
    /// returns G(y) = F(A^T y) as an m-variable polynomial.
    HomogPoly linear_change(const Matrix& A) const;

    HomogPoly operator+(const HomogPoly& other) const;
    HomogPoly operator-(const HomogPoly& other) const;
    HomogPoly operator-() const;
    HomogPoly operator*(const HomogPoly& other) const;
    HomogPoly scale(const Rat& c) const;

    bool operator==(const HomogPoly& other) const = default;

    /// Canonical text form: terms in descending graded-lex order. parse() of
    /// the result reproduces the polynomial exactly.
    std::string to_string() const;

  private:
    void add_term(const Exponents& exps, const Rat& coeff);

    int n_;
    int d_;
    std::map<Exponents, Rat> coeffs_;
};

}  // namespace poscert

#endif
