#include "poscert/unipoly.hpp"

#include <cctype>
#include <stdexcept>

namespace poscert {

UniPoly::UniPoly(std::vector<Rat> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
    trim();
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const Rat& c) { return UniPoly({c}); }

UniPoly UniPoly::term(const Rat& c, int k) {
    if (k < 0) throw std::invalid_argument("negative power");
    std::vector<Rat> v(k + 1, Rat(0));
    v[k] = c;
    return UniPoly(std::move(v));
}

Rat UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[k];
}

Rat UniPoly::leading() const {
    if (is_zero()) throw std::invalid_argument("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Rat UniPoly::operator()(const Rat& t) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UniPoly UniPoly::operator+(const UniPoly& other) const {
    std::vector<Rat> v(std::max(coeffs_.size(), other.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < other.coeffs_.size(); ++i) v[i] += other.coeffs_[i];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& other) const { return *this + (-other); }

UniPoly UniPoly::operator-() const { return scale(-1); }

UniPoly UniPoly::scale(const Rat& c) const {
    if (c == 0) return UniPoly();
    std::vector<Rat> v = coeffs_;
    for (Rat& x : v) x *= c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const UniPoly& other) const {
    if (is_zero() || other.is_zero()) return UniPoly();
    std::vector<Rat> v(coeffs_.size() + other.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < other.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * other.coeffs_[j];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly();
    std::vector<Rat> v(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<int>(i);
    return UniPoly(std::move(v));
}

UniPoly UniPoly::make_monic() const {
    if (is_zero()) return *this;
    return scale(Rat(1) / leading());
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    UniPoly rem = *this;
    if (degree() < divisor.degree()) return {UniPoly(), rem};
    std::vector<Rat> q(degree() - divisor.degree() + 1, Rat(0));
    const Rat lead = divisor.leading();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        const int shift = rem.degree() - divisor.degree();
        const Rat factor = rem.leading() / lead;
        q[shift] = factor;
        rem = rem - (divisor * UniPoly::term(factor, shift));
    }
    return {UniPoly(std::move(q)), rem};
}

UniPoly UniPoly::divide_exact(const UniPoly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw std::invalid_argument("division is not exact");
    return q;
}

int UniPoly::valuation_at_zero() const {
    if (is_zero()) throw std::invalid_argument("zero polynomial has no valuation");
    int k = 0;
    while (coeffs_[k] == 0) ++k;
    return k;
}

UniPoly UniPoly::shift_down(int k) const {
    if (k == 0) return *this;
    if (valuation_at_zero() < k) throw std::invalid_argument("t^k does not divide polynomial");
    return UniPoly(std::vector<Rat>(coeffs_.begin() + k, coeffs_.end()));
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rat& c = coeffs_[k];
        if (c == 0) continue;
        const bool negative = c < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const Rat mag = negative ? Rat(-c) : c;
        std::string power;
        if (k >= 1) {
            power = var;
            if (k > 1) power += "^" + std::to_string(k);
        }
        if (power.empty()) {
            out += poscert::to_string(mag);
        } else if (mag == 1) {
            out += power;
        } else {
            out += poscert::to_string(mag) + " " + power;
        }
    }
    return out;
}

UniPoly UniPoly::parse(const std::string& text) {
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_digits = [&]() -> std::string {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("expected digits in polynomial text");
        return text.substr(start, pos - start);
    };

    UniPoly result;
    bool first = true;
    skip_ws();
    if (pos >= text.size()) throw std::invalid_argument("empty polynomial text");
    while (true) {
        skip_ws();
        if (pos >= text.size()) break;
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' between terms");
        }
        Rat coeff = 1;
        int power = 0;
        bool saw_atom = false;
        while (true) {
            skip_ws();
            if (pos >= text.size()) break;
            char c = text[pos];
            if (c == '+' || c == '-') break;
            if (c == '*') {
                ++pos;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num = read_digits();
                skip_ws();
                if (pos < text.size() && text[pos] == '/') {
                    ++pos;
                    num += "/" + read_digits();
                }
                coeff *= rational_from_string(num);
                saw_atom = true;
                continue;
            }
            if (c == 't' || c == 'x' || c == 'T' || c == 'X') {
                ++pos;
                int e = 1;
                skip_ws();
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    e = std::stoi(read_digits());
                }
                power += e;
                saw_atom = true;
                continue;
            }
            throw std::invalid_argument(std::string("unexpected character '") + c +
                                        "' in polynomial text");
        }
        if (!saw_atom) throw std::invalid_argument("empty term in polynomial text");
        result = result + UniPoly::term(sign * coeff, power);
        first = false;
    }
    return result;
}

// ---------------------------------------------------------------------------

UniPoly primitive_scale(const UniPoly& p) {
    if (p.is_zero()) return p;
    Int den_lcm = 1;
    for (const Rat& c : p.coeffs())
        if (c != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    Int content = 0;
    for (const Rat& c : p.coeffs()) {
        if (c == 0) continue;
        Int num = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
    }
    return p.scale(make_rational(den_lcm, content));
}

UniPoly unipoly_gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly f = primitive_scale(a);
    UniPoly g = primitive_scale(b);
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        UniPoly r = f.divmod(g).second;
        f = std::move(g);
        g = primitive_scale(r);
    }
    return f.make_monic();
}

UniPoly lagrange_interpolate(const std::vector<Rat>& nodes, const std::vector<Rat>& values) {
    if (nodes.size() != values.size())
        throw std::invalid_argument("node and value counts differ");
    if (nodes.empty()) throw std::invalid_argument("no interpolation nodes");
    UniPoly result;
    for (size_t i = 0; i < nodes.size(); ++i) {
        UniPoly basis = UniPoly::constant(1);
        Rat denom = 1;
        for (size_t j = 0; j < nodes.size(); ++j) {
            if (j == i) continue;
            basis = basis * UniPoly({-nodes[j], Rat(1)});
            denom *= nodes[i] - nodes[j];
        }
        if (denom == 0) throw std::invalid_argument("interpolation nodes are not distinct");
        result = result + basis.scale(values[i] / denom);
    }
    return result;
}

}  // namespace poscert
