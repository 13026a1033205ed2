#ifndef POSCERT_RATIONAL_HPP
#define POSCERT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace poscert {

// Exact arithmetic everywhere: arbitrary-precision integers and reduced
// fractions with positive denominator. GMP maintains both invariants.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rational(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline int sign(const Rat& r) { return sgn(r); }
inline int sign(const Int& z) { return sgn(z); }

/// Renders "p" when the denominator is 1, else "p/q".
std::string to_string(const Rat& r);
std::string to_string(const Int& z);

/// Parses "p" or "p/q" with optional leading sign. Throws std::invalid_argument.
Rat rational_from_string(const std::string& text);

Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);

/// Exact integer power, e >= 0.
Rat pow_rat(const Rat& base, unsigned e);

}  // namespace poscert

#endif
