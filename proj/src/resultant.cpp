#include "poscert/resultant.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "poscert/errors.hpp"
#include "poscert/monomial.hpp"

namespace poscert {

Int discriminant_degree(int n, int d) {
    if (n < 1 || d < 2) throw std::invalid_argument("discriminant_degree needs n >= 1, d >= 2");
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned>(d - 1), static_cast<unsigned>(n - 1));
    return n * p;
}

Int resultant_matrix_size(int n, int d) {
    if (n < 1 || d < 2) throw std::invalid_argument("resultant_matrix_size needs n >= 1, d >= 2");
    if (n == 1) return 1;
    if (n == 2) return 2 * (d - 1);
    return space_dimension(n, n * (d - 2) + 1);
}

// ---------------------------------------------------------------------------
// Exact determinants

namespace {

// Fraction-free Bareiss elimination; entries stay integral throughout.
Int bareiss_determinant(std::vector<Int>& a, int n) {
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    Int tmp;
    auto at = [&](int i, int j) -> Int& { return a[static_cast<size_t>(i) * n + j]; };
    for (int k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (at(r, k) != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                mpz_mul(tmp.get_mpz_t(), at(i, j).get_mpz_t(), at(k, k).get_mpz_t());
                mpz_submul(tmp.get_mpz_t(), at(i, k).get_mpz_t(), at(k, j).get_mpz_t());
                mpz_divexact(at(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    return sign < 0 ? Int(-at(n - 1, n - 1)) : at(n - 1, n - 1);
}

}  // namespace

Rat determinant(const Matrix& m) {
    const int n = static_cast<int>(m.size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("matrix is not square");
    std::vector<Int> a(static_cast<size_t>(n) * n);
    Int scale = 1;
    for (int i = 0; i < n; ++i) {
        Int lcm = 1;
        for (int j = 0; j < n; ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m[i][j].get_den().get_mpz_t());
        for (int j = 0; j < n; ++j) {
            const Rat& e = m[i][j];
            a[static_cast<size_t>(i) * n + j] = e.get_num() * (lcm / e.get_den());
        }
        scale *= lcm;
    }
    return make_rational(bareiss_determinant(a, n), scale);
}

// ---------------------------------------------------------------------------
// Sylvester resultant of two binary forms

Rat sylvester_resultant(const HomogPoly& p, const HomogPoly& q) {
    if (p.var_count() != 2 || q.var_count() != 2)
        throw std::invalid_argument("sylvester_resultant expects binary forms");
    const int m = p.degree(), l = q.degree();
    const int size = m + l;
    if (size == 0) return 1;
    // Univariate coefficients by descending power of x1: a_i = [x1^{m-i} x2^i].
    auto coeff_row = [](const HomogPoly& f, int deg, int i) {
        return f.coefficient({deg - i, i});
    };
    Matrix s(size, std::vector<Rat>(size, Rat(0)));
    for (int r = 0; r < l; ++r)
        for (int i = 0; i <= m; ++i) s[r][r + i] = coeff_row(p, m, i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= l; ++i) s[l + r][r + i] = coeff_row(q, l, i);
    return determinant(s);
}

// ---------------------------------------------------------------------------
// Macaulay structure and resultant

namespace {

/// Row/column bookkeeping of the classical Macaulay matrix for n forms of
/// degree e in n variables, at the critical degree delta = n(e-1)+1. Depends
/// only on (n, e); coefficient specializations reuse it.
struct MacaulayStructure {
    int n;
    int e;
    MonomialBasis cols;             // degree-delta monomials, graded lex
    std::vector<int> row_form;      // which f_i fills each row (0-based)
    std::vector<Exponents> row_mul; // multiplier monomial of each row
    std::vector<int> non_reduced;   // rows/cols divisible by >= 2 of the x_i^e

    MacaulayStructure(int n_, int e_)
        : n(n_), e(e_), cols(n_, n_ * (e_ - 1) + 1) {
        const int size = cols.size();
        row_form.resize(size);
        row_mul.resize(size);
        for (int r = 0; r < size; ++r) {
            const Exponents& alpha = cols.at(r);
            int count = 0, least = -1;
            for (int i = 0; i < n; ++i)
                if (alpha[i] >= e) {
                    ++count;
                    if (least < 0) least = i;
                }
            row_form[r] = least;  // least always exists at the critical degree
            Exponents mul = alpha;
            mul[least] -= e;
            row_mul[r] = std::move(mul);
            if (count >= 2) non_reduced.push_back(r);
        }
    }
};

const MacaulayStructure& macaulay_structure(int n, int e) {
    static std::mutex mtx;
    static std::map<std::pair<int, int>, std::unique_ptr<MacaulayStructure>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(n, e);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<MacaulayStructure>(n, e)).first;
    return *it->second;
}

Rat macaulay_resultant(const std::vector<HomogPoly>& forms, int n, int e) {
    const MacaulayStructure& st = macaulay_structure(n, e);
    const int size = st.cols.size();

    Matrix m(size, std::vector<Rat>(size, Rat(0)));
    for (int r = 0; r < size; ++r) {
        const HomogPoly& f = forms[st.row_form[r]];
        for (const auto& [mono, c] : f.terms())
            m[r][st.cols.index_of(add_exponents(st.row_mul[r], mono))] = c;
    }

    const Rat numerator = determinant(m);

    const int msize = static_cast<int>(st.non_reduced.size());
    Matrix minor(msize, std::vector<Rat>(msize));
    for (int i = 0; i < msize; ++i)
        for (int j = 0; j < msize; ++j) minor[i][j] = m[st.non_reduced[i]][st.non_reduced[j]];
    const Rat denominator = determinant(minor);

    if (denominator == 0)
        throw degenerate_specialization_error(
            "Macaulay denominator minor vanished at this specialization");
    return numerator / denominator;
}

}  // namespace

Rat gradient_resultant(const HomogPoly& F) {
    const int n = F.var_count();
    const int d = F.degree();
    if (d < 2) throw std::invalid_argument("gradient_resultant needs degree >= 2");
    if (n == 1) return F.coefficient({d});
    if (F.is_zero()) return 0;

    std::vector<HomogPoly> partials;
    partials.reserve(n);
    for (int i = 1; i <= n; ++i) partials.push_back(F.partial_derivative(i));

    if (n == 2) return sylvester_resultant(partials[0], partials[1]);

    if (n > 4)
        throw capacity_error("gradient_resultant supports at most 4 variables");
    const Int size = resultant_matrix_size(n, d);
    if (size > 500)
        throw capacity_error("Macaulay matrix of size " + to_string(size) +
                             " exceeds the supported limit of 500");
    return macaulay_resultant(partials, n, d - 1);
}

namespace {

// gradient_resultant(J) per (n, d), computed once. Nonzero since J is smooth.
Rat reference_resultant(int n, int d) {
    static std::mutex mtx;
    static std::map<std::pair<int, int>, Rat> cache;
    std::lock_guard<std::mutex> lock(mtx);
    const auto key = std::make_pair(n, d);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, gradient_resultant(HomogPoly::reference_form(n, d))).first;
    return it->second;
}

}  // namespace

Rat discriminant(const HomogPoly& F) {
    if (F.degree() < 2) throw std::invalid_argument("discriminant needs degree >= 2");
    return gradient_resultant(F) / reference_resultant(F.var_count(), F.degree());
}

}  // namespace poscert
