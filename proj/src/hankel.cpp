#include "poscert/hankel.hpp"

#include <stdexcept>

namespace poscert {

Rat pairing(const Exponents& alpha, const Exponents& beta, int d) {
    if (total_degree(alpha) != d || total_degree(beta) != d)
        throw std::invalid_argument("pairing arguments must have total degree d");
    if (alpha != beta) return 0;
    return make_rational(exponent_factorial(alpha), factorial(static_cast<unsigned>(d)));
}

Rat c_coefficient(const Exponents& alpha, const Exponents& beta) {
    const int d = total_degree(alpha);
    const int e = total_degree(beta);
    const Exponents gamma = add_exponents(alpha, beta);
    Rat value = make_rational(factorial(static_cast<unsigned>(d)), exponent_factorial(alpha));
    value *= make_rational(factorial(static_cast<unsigned>(e)), exponent_factorial(beta));
    value *= make_rational(exponent_factorial(gamma), factorial(static_cast<unsigned>(d + e)));
    return value;
}

HankelForm hankel_matrix(const HomogPoly& F) {
    const int two_d = F.degree();
    if (two_d % 2 != 0) throw std::invalid_argument("hankel_matrix requires even degree");
    const int d = two_d / 2;
    MonomialBasis basis(F.var_count(), d);
    const int size = basis.size();
    SymMatrix m(size);
    const Int deg_fact = factorial(static_cast<unsigned>(two_d));
    for (int i = 0; i < size; ++i)
        for (int j = i; j < size; ++j) {
            const Exponents gamma = add_exponents(basis.at(i), basis.at(j));
            const Rat f = F.coefficient(gamma);
            if (f != 0) m.set(i, j, f * make_rational(exponent_factorial(gamma), deg_fact));
        }
    return {std::move(basis), std::move(m)};
}

HomogPoly mu(const HankelForm& G) {
    const int n = G.basis.var_count();
    const int d = G.basis.degree();
    if (G.matrix.dim() != G.basis.size())
        throw std::invalid_argument("mu: matrix dimension does not match basis");
    const Int d_fact = factorial(static_cast<unsigned>(d));
    HomogPoly result(n, 2 * d);
    for (int i = 0; i < G.basis.size(); ++i) {
        const Rat scale_i = make_rational(d_fact, exponent_factorial(G.basis.at(i)));
        for (int j = 0; j < G.basis.size(); ++j) {
            const Rat& g = G.matrix.at(i, j);
            if (g == 0) continue;
            const Rat scale_j = make_rational(d_fact, exponent_factorial(G.basis.at(j)));
            result = result + HomogPoly::monomial(n, add_exponents(G.basis.at(i), G.basis.at(j)),
                                                  g * scale_i * scale_j);
        }
    }
    return result;
}

bool verify_mu_h_identity(int n, int two_d) {
    if (two_d % 2 != 0 || two_d < 2)
        throw std::invalid_argument("verify_mu_h_identity requires even degree >= 2");
    const int d = two_d / 2;
    const MonomialBasis gammas(n, two_d);
    const MonomialBasis half(n, d);
    const Int d_fact = factorial(static_cast<unsigned>(d));
    const Int full_fact = factorial(static_cast<unsigned>(two_d));
    for (int g = 0; g < gammas.size(); ++g) {
        const Exponents& gamma = gammas.at(g);
        const HomogPoly mono = HomogPoly::monomial(n, gamma, 1);
        if (mu(hankel_matrix(mono)) != mono) return false;

        // Convolution identity: sum over splittings gamma = alpha + beta.
        Rat acc = 0;
        for (int i = 0; i < half.size(); ++i) {
            const Exponents& alpha = half.at(i);
            Exponents beta(gamma.size());
            bool valid = true;
            for (size_t v = 0; v < beta.size(); ++v) {
                beta[v] = gamma[v] - alpha[v];
                if (beta[v] < 0) {
                    valid = false;
                    break;
                }
            }
            if (!valid) continue;
            acc += make_rational(d_fact, exponent_factorial(alpha)) *
                   make_rational(d_fact, exponent_factorial(beta));
        }
        if (acc != make_rational(full_fact, exponent_factorial(gamma))) return false;
    }
    return true;
}

const char* to_string(Definiteness d) {
    switch (d) {
        case Definiteness::ZERO: return "ZERO";
        case Definiteness::POSITIVE_DEFINITE: return "POSITIVE_DEFINITE";
        case Definiteness::POSITIVE_SEMIDEFINITE: return "POSITIVE_SEMIDEFINITE";
        case Definiteness::NEGATIVE_DEFINITE: return "NEGATIVE_DEFINITE";
        case Definiteness::NEGATIVE_SEMIDEFINITE: return "NEGATIVE_SEMIDEFINITE";
        case Definiteness::INDEFINITE: return "INDEFINITE";
    }
    return "?";
}

Definiteness definiteness(const SymMatrix& m) {
    const SignatureReport s = signature(m);
    if (s.rank == 0) return Definiteness::ZERO;
    if (s.positive == m.dim()) return Definiteness::POSITIVE_DEFINITE;
    if (s.negative == m.dim()) return Definiteness::NEGATIVE_DEFINITE;
    if (s.negative == 0) return Definiteness::POSITIVE_SEMIDEFINITE;
    if (s.positive == 0) return Definiteness::NEGATIVE_SEMIDEFINITE;
    return Definiteness::INDEFINITE;
}

Definiteness definiteness(const HankelForm& h) { return definiteness(h.matrix); }

}  // namespace poscert
