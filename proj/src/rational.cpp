#include "poscert/rational.hpp"

#include <stdexcept>

namespace poscert {

std::string to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Int& z) { return z.get_str(); }

Rat rational_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    Rat r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed rational literal: '" + text + "'");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

Int factorial(unsigned n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Int binomial(unsigned n, unsigned k) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

Rat pow_rat(const Rat& base, unsigned e) {
    Rat r = 1;
    Rat b = base;
    unsigned k = e;
    while (k > 0) {
        if (k & 1u) r *= b;
        b *= b;
        k >>= 1u;
    }
    return r;
}

}  // namespace poscert
