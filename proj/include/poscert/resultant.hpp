#ifndef POSCERT_RESULTANT_HPP
#define POSCERT_RESULTANT_HPP

#include "poscert/homog_poly.hpp"
#include "poscert/rational.hpp"

namespace poscert {

/// Degree D = n (d-1)^{n-1} of the discriminant hypersurface in the
/// coefficients of a degree-d form in n variables.
Int discriminant_degree(int n, int d);

/// Size of the square matrix whose determinant evaluates the gradient
/// resultant: 1 for n = 1, the Sylvester size 2(d-1) for n = 2, the Macaulay
/// size binomial(n(d-2)+n, n-1) for n >= 3.
Int resultant_matrix_size(int n, int d);

/// Resultant of the gradient (dF/dx_1, ..., dF/dx_n); zero exactly when the
/// gradient has a common nonzero complex root. n = 1 returns the single
/// coefficient of F; n = 2 uses the Sylvester matrix of the two partials;
/// n >= 3 uses the Macaulay determinant ratio.
///
/// Throws capacity_error outside the supported range (n <= 4, Macaulay
/// matrix size <= 500) and degenerate_specialization_error when the Macaulay
/// denominator minor vanishes at this specialization.
Rat gradient_resultant(const HomogPoly& F);

/// Normalized discriminant: gradient_resultant(F) / gradient_resultant(J)
/// with J the reference form, so discriminant(J) = 1 exactly.
Rat discriminant(const HomogPoly& F);

/// Homogeneous resultant of two binary forms (Sylvester determinant).
/// Exposed for cross-checks against the univariate classics.
Rat sylvester_resultant(const HomogPoly& p, const HomogPoly& q);

/// Exact determinant of a square rational matrix (fraction-free Bareiss
/// elimination after clearing row denominators).
Rat determinant(const Matrix& m);

}  // namespace poscert

#endif
