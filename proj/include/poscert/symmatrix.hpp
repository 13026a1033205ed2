#ifndef POSCERT_SYMMATRIX_HPP
#define POSCERT_SYMMATRIX_HPP

#include <vector>

#include "poscert/rational.hpp"

namespace poscert {

/// Exact symmetric rational matrix. set() writes both (i,j) and (j,i).
class SymMatrix {
  public:
    explicit SymMatrix(int dim);

    int dim() const { return dim_; }
    const Rat& at(int i, int j) const { return data_[i * dim_ + j]; }
    void set(int i, int j, const Rat& value);

    bool operator==(const SymMatrix& other) const = default;

  private:
    int dim_;
    std::vector<Rat> data_;
};

/// Inertia of a real symmetric matrix: rank = positive + negative,
/// signature = positive - negative.
struct SignatureReport {
    int rank = 0;
    int positive = 0;
    int negative = 0;
    int sig() const { return positive - negative; }
    bool operator==(const SignatureReport&) const = default;
};

/// Exact inertia by symmetric congruence elimination. A zero diagonal pivot
/// with a nonzero off-diagonal entry in its row is repaired by the symmetric
/// row/column combination; no eigenvalues, no rounding.
SignatureReport signature(const SymMatrix& m);

}  // namespace poscert

#endif
