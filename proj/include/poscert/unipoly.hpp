#ifndef POSCERT_UNIPOLY_HPP
#define POSCERT_UNIPOLY_HPP

#include <string>
#include <vector>

#include "poscert/rational.hpp"

namespace poscert {

/// Dense univariate polynomial with exact rational coefficients.
/// Coefficients are stored ascending (index = power of t); the leading
/// coefficient is nonzero unless the polynomial is zero.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> ascending_coeffs);
    static UniPoly constant(const Rat& c);
    /// The monomial c * t^k.
    static UniPoly term(const Rat& c, int k);

    /// Parses e.g. "t^2 - 3/2 t + 2" (variable letter t or x; '*' optional).
    static UniPoly parse(const std::string& text);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(int k) const;
    Rat leading() const;
    bool is_monic() const { return !is_zero() && leading() == 1; }

    Rat operator()(const Rat& t) const;

    UniPoly operator+(const UniPoly& other) const;
    UniPoly operator-(const UniPoly& other) const;
    UniPoly operator-() const;
    UniPoly operator*(const UniPoly& other) const;
    UniPoly scale(const Rat& c) const;
    bool operator==(const UniPoly& other) const = default;

    UniPoly derivative() const;
    UniPoly make_monic() const;

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
    /// Exact division; throws std::invalid_argument when a remainder is left.
    UniPoly divide_exact(const UniPoly& divisor) const;

    /// Multiplicity of the root 0 (count of trailing zero coefficients).
    int valuation_at_zero() const;
    /// Divides out t^k.
    UniPoly shift_down(int k) const;

    /// Canonical text form with variable `var` ("t^2 + 3 t + 2").
    std::string to_string(const std::string& var = "t") const;

  private:
    void trim();
    std::vector<Rat> coeffs_;
};

/// Scales a polynomial by a positive rational so its coefficients become
/// integers with content 1. Positive scaling preserves every sign pattern,
/// which the Sturm machinery depends on.
UniPoly primitive_scale(const UniPoly& p);

/// Monic gcd (zero if both arguments are zero). Uses a primitive-PRS
/// Euclidean chain over the integers so huge rational inputs stay tractable.
UniPoly unipoly_gcd(const UniPoly& a, const UniPoly& b);

/// Lagrange interpolation through distinct nodes; exact.
UniPoly lagrange_interpolate(const std::vector<Rat>& nodes, const std::vector<Rat>& values);

}  // namespace poscert

#endif
