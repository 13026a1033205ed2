#ifndef POSCERT_REALROOTS_HPP
#define POSCERT_REALROOTS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "poscert/symmatrix.hpp"
#include "poscert/unipoly.hpp"

namespace poscert {

/// s_0 .. s_{count-1} with s_k = sum of k-th powers of the complex roots of
/// the monic polynomial p (with multiplicity), via Newton's identities.
std::vector<Rat> power_sums(const UniPoly& p, int count);

/// Matrix of the quadratic form x -> tr(u x^2) on R[t]/(p) in the monomial
/// basis 1, t, ..., t^{m-1}. p must be monic of degree m >= 1.
SymMatrix trace_form(const UniPoly& p, const UniPoly& u);

struct RootCounts {
    int real_roots = 0;           // distinct real roots
    int positive_real_roots = 0;  // distinct roots > 0
    bool operator==(const RootCounts&) const = default;
};

/// Distinct-root counts from the signatures of the trace forms Q_1 and Q_t:
/// real = sg(Q_1), positive = (sg(Q_1) + sg(Q_t)) / 2.
/// Requires p monic with p(0) != 0; callers must divide out any root at 0 first.
RootCounts sylvester_root_counts(const UniPoly& p);

/// p / gcd(p, p'), made monic. Same roots as p, all simple.
UniPoly squarefree_part(const UniPoly& p);

/// Yun decomposition: returns monic pairs (factor, multiplicity) with
/// p = lc * prod factor_i^{mult_i}, each factor squarefree, pairwise coprime.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

/// Product of the squarefree factors of odd multiplicity; its real roots are
/// exactly the points where p changes sign.
UniPoly odd_multiplicity_part(const UniPoly& p);

/// Endpoint of a real interval; finite or one of the two infinities.
struct Extended {
    enum class Kind { NegInf, Finite, PosInf };
    Kind kind = Kind::Finite;
    Rat value;

    static Extended neg_inf() { return {Kind::NegInf, Rat(0)}; }
    static Extended pos_inf() { return {Kind::PosInf, Rat(0)}; }
    static Extended at(const Rat& v) { return {Kind::Finite, v}; }
};

/// Number of distinct real roots of p in (a, b) by Sturm's theorem.
/// Finite endpoints must not be roots of p.
int sturm_count(const UniPoly& p, const Extended& a, const Extended& b);

/// Strict bound B with every complex root of p inside |z| < B.
Rat cauchy_root_bound(const UniPoly& p);

/// Open interval (lo, hi) containing exactly one real root; endpoints are
/// not roots.
struct RootInterval {
    Rat lo;
    Rat hi;
};

/// Isolating intervals for all roots of a squarefree polynomial in (lo, hi),
/// in increasing order. Requires sf(lo) != 0 and sf(hi) != 0.
std::vector<RootInterval> isolate_real_roots(const UniPoly& sf, const Rat& lo, const Rat& hi);

/// True iff p(t) >= 0 for all t >= 0. Requires p nonzero with positive
/// leading coefficient. Decided exactly: after dividing out t^k, the value at
/// 0 must be positive and the odd-multiplicity part must have no root in
/// (0, inf).
bool is_nonneg_on_ray(const UniPoly& p);

/// True iff p(t) > 0 for all t >= 0. Requires p nonzero with positive
/// leading coefficient. Decided via p(0) > 0 and a zero Sylvester count of
/// distinct positive roots of the squarefree part.
bool is_positive_on_ray(const UniPoly& p);

/// Exact rational t >= 0 with p(t) < 0, when one exists. Complements
/// is_nonneg_on_ray with a checkable witness.
std::optional<Rat> find_negative_on_ray(const UniPoly& p);

/// Exact rational t (any sign) with p(t) < 0, when one exists.
std::optional<Rat> find_negative_real(const UniPoly& p);

}  // namespace poscert

#endif
