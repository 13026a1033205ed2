#include "poscert/symmatrix.hpp"

#include <stdexcept>

namespace poscert {

SymMatrix::SymMatrix(int dim) : dim_(dim), data_(static_cast<size_t>(dim) * dim, Rat(0)) {
    if (dim < 0) throw std::invalid_argument("negative dimension");
}

void SymMatrix::set(int i, int j, const Rat& value) {
    data_[i * dim_ + j] = value;
    data_[j * dim_ + i] = value;
}

SignatureReport signature(const SymMatrix& m) {
    const int n = m.dim();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);

    SignatureReport report;
    for (int k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            // Prefer a symmetric swap with a nonzero later diagonal entry.
            int swap_j = -1, combine_j = -1;
            for (int j = k + 1; j < n; ++j) {
                if (a[j][j] != 0 && swap_j < 0) swap_j = j;
                if (a[k][j] != 0 && combine_j < 0) combine_j = j;
            }
            if (swap_j >= 0) {
                std::swap(a[swap_j], a[k]);
                for (int i = 0; i < n; ++i) std::swap(a[i][swap_j], a[i][k]);
            } else if (combine_j >= 0) {
                // Whole diagonal block is zero: a[k][k] becomes 2*a[k][j] != 0.
                for (int i = 0; i < n; ++i) a[k][i] += a[combine_j][i];
                for (int i = 0; i < n; ++i) a[i][k] += a[i][combine_j];
            } else {
                continue;  // row and column already eliminated
            }
        }
        const Rat pivot = a[k][k];
        if (pivot > 0)
            ++report.positive;
        else
            ++report.negative;
        // Schur complement of the pivot: simultaneous row and column
        // elimination keeps the remaining block symmetric.
        std::vector<Rat> colk(n);
        for (int i = k + 1; i < n; ++i) colk[i] = a[i][k];
        for (int i = k + 1; i < n; ++i) {
            if (colk[i] == 0) continue;
            const Rat factor = colk[i] / pivot;
            for (int j = i; j < n; ++j) {
                a[i][j] -= factor * colk[j];
                a[j][i] = a[i][j];
            }
        }
        for (int i = k + 1; i < n; ++i) {
            a[i][k] = 0;
            a[k][i] = 0;
        }
    }
    report.rank = report.positive + report.negative;
    return report;
}

}  // namespace poscert
