#include "poscert/homog_poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace poscert {

HomogPoly::HomogPoly(int n, int d) : n_(n), d_(d) {
    if (n < 1) throw std::invalid_argument("variable count must be >= 1");
    if (d < 0) throw std::invalid_argument("degree must be >= 0");
}

void HomogPoly::add_term(const Exponents& exps, const Rat& coeff) {
    if (static_cast<int>(exps.size()) != n_)
        throw std::invalid_argument("exponent vector length does not match variable count");
    for (int e : exps)
        if (e < 0) throw std::invalid_argument("negative exponent");
    if (total_degree(exps) != d_)
        throw std::invalid_argument("term degree does not match polynomial degree");
    if (coeff == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) coeffs_.erase(it);
    }
}

HomogPoly HomogPoly::monomial(int n, const Exponents& exps, const Rat& coeff) {
    HomogPoly p(n, total_degree(exps));
    p.add_term(exps, coeff);
    return p;
}

HomogPoly HomogPoly::reference_form(int n, int d) {
    if (d < 1) throw std::invalid_argument("reference form needs degree >= 1");
    HomogPoly j(n, d);
    for (int i = 0; i < n; ++i) {
        Exponents e(n, 0);
        e[i] = d;
        j.add_term(e, 1);
    }
    return j;
}

Rat HomogPoly::coefficient(const Exponents& exps) const {
    auto it = coeffs_.find(exps);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

Rat HomogPoly::evaluate(std::span<const Rat> point) const {
    if (static_cast<int>(point.size()) != n_)
        throw std::invalid_argument("evaluation point has wrong dimension");
    Rat acc = 0;
    for (const auto& [exps, c] : coeffs_) {
        Rat term = c;
        for (int i = 0; i < n_; ++i)
            if (exps[i] > 0) term *= pow_rat(point[i], static_cast<unsigned>(exps[i]));
        acc += term;
    }
    return acc;
}

HomogPoly HomogPoly::partial_derivative(int i) const {
    if (i < 1 || i > n_) throw std::invalid_argument("variable index out of range");
    HomogPoly result(n_, d_ > 0 ? d_ - 1 : 0);
    if (d_ == 0) return result;
    for (const auto& [exps, c] : coeffs_) {
        if (exps[i - 1] == 0) continue;
        Exponents shifted = exps;
        shifted[i - 1] -= 1;
        result.add_term(shifted, c * exps[i - 1]);
    }
    return result;
}

HomogPoly HomogPoly::restrict(const std::vector<int>& keep) const {
    if (keep.empty()) throw std::invalid_argument("subset of kept variables is empty");
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int i : sorted)
        if (i < 1 || i > n_) throw std::invalid_argument("variable index out of range");
    const int m = static_cast<int>(sorted.size());
    std::vector<int> new_index(n_, -1);
    for (int k = 0; k < m; ++k) new_index[sorted[k] - 1] = k;

    HomogPoly result(m, d_);
    for (const auto& [exps, c] : coeffs_) {
        Exponents mapped(m, 0);
        bool killed = false;
        for (int i = 0; i < n_; ++i) {
            if (exps[i] == 0) continue;
            if (new_index[i] < 0) {
                killed = true;
                break;
            }
            mapped[new_index[i]] = exps[i];
        }
        if (!killed) result.add_term(mapped, c);
    }
    return result;
}

HomogPoly HomogPoly::linear_change(const Matrix& A) const {
    const int m = static_cast<int>(A.size());
    if (m < 1) throw std::invalid_argument("substitution matrix has no rows");
    for (const auto& row : A)
        if (static_cast<int>(row.size()) != n_)
            throw std::invalid_argument("substitution matrix has wrong column count");

    // Linear form replacing x_j: sum_k A[k][j] y_k.
    std::vector<HomogPoly> subst;
    subst.reserve(n_);
    for (int j = 0; j < n_; ++j) {
        HomogPoly lin(m, 1);
        for (int k = 0; k < m; ++k) {
            Exponents e(m, 0);
            e[k] = 1;
            lin.add_term(e, A[k][j]);
        }
        subst.push_back(lin);
    }

    HomogPoly result(m, d_);
    for (const auto& [exps, c] : coeffs_) {
        HomogPoly term = HomogPoly::monomial(m, Exponents(m, 0), c);
        for (int j = 0; j < n_; ++j)
            for (int rep = 0; rep < exps[j]; ++rep) term = term * subst[j];
        result = result + term;
    }
    return result;
}

HomogPoly HomogPoly::operator+(const HomogPoly& other) const {
    if (n_ != other.n_ || d_ != other.d_)
        throw std::invalid_argument("polynomials live in different spaces");
    HomogPoly result = *this;
    for (const auto& [exps, c] : other.coeffs_) result.add_term(exps, c);
    return result;
}

HomogPoly HomogPoly::operator-(const HomogPoly& other) const { return *this + (-other); }

HomogPoly HomogPoly::operator-() const { return scale(-1); }

HomogPoly HomogPoly::scale(const Rat& c) const {
    HomogPoly result(n_, d_);
    if (c == 0) return result;
    for (const auto& [exps, coeff] : coeffs_) result.coeffs_[exps] = coeff * c;
    return result;
}

HomogPoly HomogPoly::operator*(const HomogPoly& other) const {
    if (n_ != other.n_)
        throw std::invalid_argument("polynomials have different variable counts");
    HomogPoly result(n_, d_ + other.d_);
    for (const auto& [ea, ca] : coeffs_)
        for (const auto& [eb, cb] : other.coeffs_)
            result.add_term(add_exponents(ea, eb), ca * cb);
    return result;
}

std::string HomogPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    // Map iteration is ascending lex; canonical order is descending.
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [exps, c] = *it;
        const bool negative = c < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const Rat mag = negative ? Rat(-c) : c;
        std::string factors;
        for (int i = 0; i < n_; ++i) {
            if (exps[i] == 0) continue;
            if (!factors.empty()) factors += " ";
            factors += "x" + std::to_string(i + 1);
            if (exps[i] > 1) factors += "^" + std::to_string(exps[i]);
        }
        if (factors.empty()) {
            out += poscert::to_string(mag);
        } else if (mag == 1) {
            out += factors;
        } else {
            out += poscert::to_string(mag) + " " + factors;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return text[pos];
    }
    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("syntax error at position " + std::to_string(pos) + ": " + why);
    }
    std::string read_digits() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return text.substr(start, pos - start);
    }
};

struct Term {
    Rat coeff = 1;
    Exponents exps;
};

Term parse_term(Cursor& cur, int n) {
    Term term;
    term.exps.assign(n, 0);
    bool saw_atom = false;
    while (!cur.done()) {
        char c = cur.peek();
        if (c == '+' || c == '-') break;
        if (c == '*') {
            ++cur.pos;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = cur.read_digits();
            if (!cur.done() && cur.peek() == '/') {
                ++cur.pos;
                std::string den = cur.read_digits();
                term.coeff *= rational_from_string(num + "/" + den);
            } else {
                term.coeff *= rational_from_string(num);
            }
            saw_atom = true;
            continue;
        }
        if (c == 'x' || c == 'X') {
            ++cur.pos;
            std::string idx = cur.read_digits();
            int i = std::stoi(idx);
            if (i < 1 || i > n)
                throw std::invalid_argument("variable index out of range: x" + idx);
            int e = 1;
            if (!cur.done() && cur.peek() == '^') {
                ++cur.pos;
                e = std::stoi(cur.read_digits());
            }
            term.exps[i - 1] += e;
            saw_atom = true;
            continue;
        }
        cur.fail(std::string("unexpected character '") + c + "'");
    }
    if (!saw_atom) cur.fail("empty term");
    return term;
}

}  // namespace

HomogPoly HomogPoly::parse(const std::string& text, int n) {
    if (n < 1) throw std::invalid_argument("variable count must be >= 1");
    Cursor cur{text};
    if (cur.done()) throw std::invalid_argument("empty polynomial text");

    std::vector<Term> terms;
    bool first = true;
    while (!cur.done()) {
        int sign = 1;
        if (cur.peek() == '+' || cur.peek() == '-') {
            sign = cur.peek() == '-' ? -1 : 1;
            ++cur.pos;
        } else if (!first) {
            cur.fail("expected '+' or '-' between terms");
        }
        Term t = parse_term(cur, n);
        t.coeff *= sign;
        terms.push_back(std::move(t));
        first = false;
    }

    int d = total_degree(terms.front().exps);
    for (const Term& t : terms)
        if (total_degree(t.exps) != d)
            throw std::invalid_argument("polynomial is not homogeneous: terms of degree " +
                                        std::to_string(d) + " and " +
                                        std::to_string(total_degree(t.exps)));
    HomogPoly p(n, d);
    for (const Term& t : terms) p.add_term(t.exps, t.coeff);
    return p;
}

}  // namespace poscert
