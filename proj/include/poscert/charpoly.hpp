#ifndef POSCERT_CHARPOLY_HPP
#define POSCERT_CHARPOLY_HPP

#include <vector>

#include "poscert/homog_poly.hpp"
#include "poscert/unipoly.hpp"

namespace poscert {

/// Characteristic polynomial of F with respect to the reference form J:
/// the univariate polynomial t -> discriminant(F + t J). Monic of degree
/// exactly n(d-1)^{n-1}; its constant term is discriminant(F).
///
/// Computed by exact evaluation at D+1 rational nodes and Lagrange
/// interpolation. Nodes hitting a degenerate Macaulay specialization are
/// replaced along a deterministic schedule; the result is re-verified at a
/// fresh node and checked monic. Requires d even, d >= 2.
///
/// `parallel` evaluates the nodes on multiple threads; the result is
/// identical either way.
UniPoly char_poly(const HomogPoly& F, bool parallel = false);

/// char_poly of the restriction of F to the coordinate subspace spanned by
/// `keep` (1-based indices). The reference form of the subspace is the
/// restriction of J.
UniPoly char_poly_on_subspace(const HomogPoly& F, const std::vector<int>& keep,
                              bool parallel = false);

/// Pointwise value of the generalized characteristic polynomial:
/// discriminant(F + sum_i ts[i] * Js[i]).
Rat generalized_char_eval(const HomogPoly& F, const std::vector<HomogPoly>& Js,
                          const std::vector<Rat>& ts);

/// discriminant(F), recovering the value as the constant term of the
/// interpolated pencil t -> discriminant(F + t J) when the direct Macaulay
/// specialization at F is degenerate. Works for every degree >= 2.
Rat robust_discriminant(const HomogPoly& F);

}  // namespace poscert

#endif
