#ifndef POSCERT_CERTIFY_HPP
#define POSCERT_CERTIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "poscert/hankel.hpp"
#include "poscert/homog_poly.hpp"
#include "poscert/symmatrix.hpp"
#include "poscert/unipoly.hpp"

namespace poscert {

enum class VerdictKind { POSITIVE, NONNEGATIVE, NOT_NONNEGATIVE, UNKNOWN };

const char* to_string(VerdictKind v);

enum class CertificateKind {
    HANKEL_PD,
    HANKEL_PSD,
    CHI_POSITIVE_RAY,
    CHI_NECESSARY_VIOLATED,
    DISC_NEGATIVE,
    SUBSPACE_VIOLATED,
    SYLVESTER_MINORS,
    WITNESS_POINT,
};

const char* to_string(CertificateKind k);

/// One principal minor D_J of the symmetric matrix of a quadratic form.
struct MinorValue {
    std::vector<int> subset;  // 1-based variable indices, ascending
    Rat value;
};

/// Every certificate carries the exact objects needed to re-verify its claim
/// independently of the pipeline; see verify_certificate().
struct Certificate {
    CertificateKind kind;
    std::string summary;
    std::vector<int> subset;             // subspace payload (1-based)
    std::optional<SymMatrix> matrix;     // Hankel payload
    std::optional<SignatureReport> inertia;
    std::optional<UniPoly> chi;          // characteristic polynomial payload
    std::optional<Rat> value;            // discriminant / minor / witness value
    std::vector<Rat> point;              // witness payload
    std::vector<MinorValue> minors;      // Sylvester payload
};

struct SylvesterReport {
    bool positive = false;
    bool nonnegative = false;
    std::vector<MinorValue> leading_minors;    // D_r for r = 1..n
    std::vector<MinorValue> principal_minors;  // D_J for all non-empty J
};

/// Necessary-condition outcome on one coordinate subspace.
struct SubspaceCheck {
    std::vector<int> subset;
    bool ran = false;
    std::string skip_reason;
    UniPoly chi;
    Rat disc;  // chi(0)
    bool chi_nonneg_on_ray = false;

    bool violated() const { return ran && (sgn(disc) < 0 || !chi_nonneg_on_ray); }
};

struct NecessaryReport {
    std::vector<SubspaceCheck> checks;  // full space first, then proper subsets

    bool any_violation() const;
    const SubspaceCheck* full_space() const;
};

struct SufficientReport {
    Definiteness hankel = Definiteness::ZERO;
    SignatureReport hankel_inertia;
    double hankel_ms = 0.0;
    bool chi_ran = false;
    std::string chi_skip_reason;
    UniPoly chi;
    bool chi_positive_on_ray = false;
    double chi_ms = 0.0;
};

struct CertifyOptions {
    /// Random sample points tried by the counterexample search.
    int counterexample_budget = 200;
    /// Run the coordinate-subspace necessary conditions (n <= 4).
    bool subspace_checks = true;
    /// Skip characteristic-polynomial paths when deg(chi) would exceed this.
    int max_charpoly_degree = 40;
    /// Skip characteristic-polynomial paths when the resultant evaluation
    /// matrix would be bigger than this.
    int max_resultant_matrix = 80;
    /// Evaluate interpolation nodes on multiple threads.
    bool parallel = false;
};

struct TestOutcome {
    std::string name;
    std::string outcome;
    double milliseconds = 0.0;
};

struct Verdict {
    VerdictKind kind = VerdictKind::UNKNOWN;
    std::vector<Certificate> certificates;
    std::optional<std::vector<Rat>> witness;  // point with F(witness) < 0

    std::optional<SylvesterReport> sylvester;  // d = 2 only
    std::optional<SufficientReport> sufficient;
    std::optional<NecessaryReport> necessary;
    std::vector<TestOutcome> tests;
};

/// Exact Sylvester criterion for quadratic forms (d = 2): positive iff all
/// leading principal minors are > 0; nonnegative iff all principal minors
/// are >= 0.
SylvesterReport sylvester_quadratic(const HomogPoly& F);

/// Necessary conditions: discriminant sign and ray-nonnegativity of chi on
/// the full space and on every coordinate subspace. Any violation proves
/// F is not nonnegative.
NecessaryReport necessary_report(const HomogPoly& F, const CertifyOptions& options = {});

/// Sufficient conditions: definiteness of the Hankel form and strict
/// ray-positivity of chi.
SufficientReport sufficient_report(const HomogPoly& F, const CertifyOptions& options = {});

/// Searches for a rational point with F < 0: unit points, sign patterns,
/// seeded random points on the cube boundary, and (n = 2) exact sign checks
/// of the dehomogenizations between Sturm-isolated roots.
std::optional<std::vector<Rat>> find_counterexample(const HomogPoly& F, int budget);

/// Full decision pipeline; see the README for the priority order. Requires
/// F nonzero of even degree.
Verdict certify(const HomogPoly& F, const CertifyOptions& options = {});

/// Re-checks a certificate against F from its payload alone.
bool verify_certificate(const HomogPoly& F, const Certificate& c);

}  // namespace poscert

#endif
