#ifndef POSCERT_HANKEL_HPP
#define POSCERT_HANKEL_HPP

#include "poscert/homog_poly.hpp"
#include "poscert/monomial.hpp"
#include "poscert/symmatrix.hpp"

namespace poscert {

/// Quadratic form h(F) on the space of degree-d forms, for F of degree 2d.
/// Entries are written in the scaled basis X^alpha = (d!/alpha!) x^alpha, so
/// entry (alpha, beta) is the X-coordinate of F at alpha+beta and depends on
/// alpha+beta only (generalized Hankel property).
struct HankelForm {
    MonomialBasis basis;  // degree-d monomials in n variables
    SymMatrix matrix;     // dimension basis.size()
};

/// Polarization pairing (x^beta, e^alpha) = alpha!/d! when alpha = beta,
/// else 0. Both vectors must have total degree d.
Rat pairing(const Exponents& alpha, const Exponents& beta, int d);

/// c_{alpha,beta} = (d!/alpha!) (e!/beta!) ((alpha+beta)!/(d+e)!) with
/// d = |alpha|, e = |beta|: the comultiplication coefficient of h on the
/// plain monomial basis.
Rat c_coefficient(const Exponents& alpha, const Exponents& beta);

/// Matrix of h(F) in the scaled basis: entry (alpha, beta) = F_hat_{alpha+beta}
/// where F_hat_gamma = (gamma!/(2d)!) F_gamma. F must have even degree.
HankelForm hankel_matrix(const HomogPoly& F);

/// Multiplication map: expands sum_{alpha,beta} G[alpha][beta] X^alpha X^beta
/// back into a degree-2d polynomial. Defined for any symmetric matrix over
/// the degree-d basis, Hankel or not.
HomogPoly mu(const HankelForm& G);

/// Checks mu(hankel_matrix(x^gamma)) == x^gamma for every gamma of degree
/// two_d, together with the multinomial convolution identity
/// sum_{alpha+beta=gamma} (d!/alpha!)(e!/beta!) = (d+e)!/gamma!.
bool verify_mu_h_identity(int n, int two_d);

enum class Definiteness {
    ZERO,
    POSITIVE_DEFINITE,
    POSITIVE_SEMIDEFINITE,
    NEGATIVE_DEFINITE,
    NEGATIVE_SEMIDEFINITE,
    INDEFINITE,
};

const char* to_string(Definiteness d);

/// Classification from the exact inertia of the matrix.
Definiteness definiteness(const HankelForm& h);
Definiteness definiteness(const SymMatrix& m);

}  // namespace poscert

#endif
