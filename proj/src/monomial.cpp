#include "poscert/monomial.hpp"

#include <stdexcept>

namespace poscert {

int total_degree(const Exponents& e) {
    int s = 0;
    for (int x : e) s += x;
    return s;
}

Int exponent_factorial(const Exponents& e) {
    Int f = 1;
    for (int x : e) f *= factorial(static_cast<unsigned>(x));
    return f;
}

Exponents add_exponents(const Exponents& a, const Exponents& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("exponent vectors of different lengths");
    Exponents c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

namespace {

void enumerate(int pos, int n, int remaining, Exponents& current,
               std::vector<Exponents>& out) {
    if (pos == n - 1) {
        current[pos] = remaining;
        out.push_back(current);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        current[pos] = e;
        enumerate(pos + 1, n, remaining - e, current, out);
    }
}

}  // namespace

MonomialBasis::MonomialBasis(int n, int d) : n_(n), d_(d) {
    if (n < 1) throw std::invalid_argument("variable count must be >= 1");
    if (d < 0) throw std::invalid_argument("degree must be >= 0");
    Exponents current(n, 0);
    enumerate(0, n, d, current, list_);
    for (int i = 0; i < static_cast<int>(list_.size()); ++i) index_[list_[i]] = i;
}

int MonomialBasis::index_of(const Exponents& e) const {
    auto it = index_.find(e);
    if (it == index_.end())
        throw std::invalid_argument("exponent vector not in basis");
    return it->second;
}

Int space_dimension(int n, int d) {
    return binomial(static_cast<unsigned>(n - 1 + d), static_cast<unsigned>(d));
}

}  // namespace poscert
