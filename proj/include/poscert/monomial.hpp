#ifndef POSCERT_MONOMIAL_HPP
#define POSCERT_MONOMIAL_HPP

#include <map>
#include <vector>

#include "poscert/rational.hpp"

namespace poscert {

/// Exponent vector (lambda_1, ..., lambda_n) of a monomial x^lambda.
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

/// alpha! = prod_i alpha_i!
Int exponent_factorial(const Exponents& e);

Exponents add_exponents(const Exponents& a, const Exponents& b);

/// Ordered index of all exponent vectors of fixed total degree d in n
/// variables. Order is graded lexicographic, descending: x1^d first,
/// xn^d last. The ordering is what makes matrix indexing and printing
/// deterministic across runs.
class MonomialBasis {
  public:
    MonomialBasis(int n, int d);

    int var_count() const { return n_; }
    int degree() const { return d_; }
    int size() const { return static_cast<int>(list_.size()); }
    const Exponents& at(int i) const { return list_[i]; }
    const std::vector<Exponents>& all() const { return list_; }

    /// Index of an exponent vector; throws std::invalid_argument if absent.
    int index_of(const Exponents& e) const;

  private:
    int n_;
    int d_;
    std::vector<Exponents> list_;
    std::map<Exponents, int> index_;
};

/// binomial(n-1+d, d), the dimension of the space of degree-d forms.
Int space_dimension(int n, int d);

}  // namespace poscert

#endif
