#include "poscert/certify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>

#include "poscert/charpoly.hpp"
#include "poscert/errors.hpp"
#include "poscert/realroots.hpp"
#include "poscert/resultant.hpp"

namespace poscert {

const char* to_string(VerdictKind v) {
    switch (v) {
        case VerdictKind::POSITIVE: return "POSITIVE";
        case VerdictKind::NONNEGATIVE: return "NONNEGATIVE";
        case VerdictKind::NOT_NONNEGATIVE: return "NOT_NONNEGATIVE";
        case VerdictKind::UNKNOWN: return "UNKNOWN";
    }
    return "?";
}

const char* to_string(CertificateKind k) {
    switch (k) {
        case CertificateKind::HANKEL_PD: return "HANKEL_PD";
        case CertificateKind::HANKEL_PSD: return "HANKEL_PSD";
        case CertificateKind::CHI_POSITIVE_RAY: return "CHI_POSITIVE_RAY";
        case CertificateKind::CHI_NECESSARY_VIOLATED: return "CHI_NECESSARY_VIOLATED";
        case CertificateKind::DISC_NEGATIVE: return "DISC_NEGATIVE";
        case CertificateKind::SUBSPACE_VIOLATED: return "SUBSPACE_VIOLATED";
        case CertificateKind::SYLVESTER_MINORS: return "SYLVESTER_MINORS";
        case CertificateKind::WITNESS_POINT: return "WITNESS_POINT";
    }
    return "?";
}

bool NecessaryReport::any_violation() const {
    return std::any_of(checks.begin(), checks.end(),
                       [](const SubspaceCheck& c) { return c.violated(); });
}

const SubspaceCheck* NecessaryReport::full_space() const {
    return checks.empty() ? nullptr : &checks.front();
}

// ---------------------------------------------------------------------------
// Sylvester criterion (d = 2)

namespace {

SymMatrix quadratic_form_matrix(const HomogPoly& F) {
    // hankel_matrix at 2d = 2 is exactly the symmetric matrix with the
    // off-diagonal monomial coefficients split evenly.
    return hankel_matrix(F).matrix;
}

Rat principal_minor(const SymMatrix& a, const std::vector<int>& subset) {
    const int k = static_cast<int>(subset.size());
    Matrix sub(k, std::vector<Rat>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub[i][j] = a.at(subset[i] - 1, subset[j] - 1);
    return determinant(sub);
}

}  // namespace

SylvesterReport sylvester_quadratic(const HomogPoly& F) {
    if (F.degree() != 2) throw std::invalid_argument("sylvester_quadratic requires degree 2");
    const int n = F.var_count();
    if (n > 16) throw capacity_error("principal minor enumeration supports at most 16 variables");
    const SymMatrix a = quadratic_form_matrix(F);

    SylvesterReport report;
    report.positive = true;
    std::vector<int> leading;
    for (int r = 1; r <= n; ++r) {
        leading.push_back(r);
        Rat value = principal_minor(a, leading);
        if (value <= 0) report.positive = false;
        report.leading_minors.push_back({leading, std::move(value)});
    }
    report.nonnegative = true;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) subset.push_back(i + 1);
        Rat value = principal_minor(a, subset);
        if (value < 0) report.nonnegative = false;
        report.principal_minors.push_back({std::move(subset), std::move(value)});
    }
    return report;
}

// ---------------------------------------------------------------------------
// Necessary / sufficient reports

namespace {

std::string chi_capacity_reason(int n, int d, const CertifyOptions& options) {
    const Int D = discriminant_degree(n, d);
    if (D > options.max_charpoly_degree)
        return "char_poly degree " + to_string(D) + " exceeds the configured limit of " +
               std::to_string(options.max_charpoly_degree);
    const Int size = resultant_matrix_size(n, d);
    if (size > options.max_resultant_matrix)
        return "resultant matrix size " + to_string(size) +
               " exceeds the configured limit of " + std::to_string(options.max_resultant_matrix);
    if (n > 4) return "gradient_resultant supports at most 4 variables";
    if (resultant_matrix_size(n, d) > 500) return "Macaulay matrix exceeds the hard limit of 500";
    return "";
}

void run_subspace_check(const HomogPoly& F, const std::vector<int>& subset,
                        const CertifyOptions& options, SubspaceCheck& check) {
    check.subset = subset;
    const HomogPoly restricted = F.restrict(subset);
    const std::string reason =
        chi_capacity_reason(restricted.var_count(), restricted.degree(), options);
    if (!reason.empty()) {
        check.skip_reason = reason;
        return;
    }
    try {
        check.chi = char_poly(restricted, options.parallel);
    } catch (const capacity_error& e) {
        check.skip_reason = e.what();
        return;
    } catch (const degenerate_specialization_error& e) {
        check.skip_reason = e.what();
        return;
    }
    check.disc = check.chi.coeff(0);
    check.chi_nonneg_on_ray = is_nonneg_on_ray(check.chi);
    check.ran = true;
}

}  // namespace

NecessaryReport necessary_report(const HomogPoly& F, const CertifyOptions& options) {
    const int n = F.var_count();
    const int d = F.degree();
    if (d < 2 || d % 2 != 0)
        throw std::invalid_argument("necessary_report requires even degree >= 2");

    NecessaryReport report;
    std::vector<int> full(n);
    for (int i = 0; i < n; ++i) full[i] = i + 1;
    report.checks.emplace_back();
    run_subspace_check(F, full, options, report.checks.back());

    if (options.subspace_checks && n <= 4) {
        // Proper subsets, larger first, lexicographic within a size.
        std::vector<std::vector<int>> subsets;
        for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
            std::vector<int> s;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) s.push_back(i + 1);
            subsets.push_back(std::move(s));
        }
        std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() > b.size();
            return a < b;
        });
        for (const auto& s : subsets) {
            report.checks.emplace_back();
            run_subspace_check(F, s, options, report.checks.back());
        }
    }
    return report;
}

SufficientReport sufficient_report(const HomogPoly& F, const CertifyOptions& options) {
    const int d = F.degree();
    if (d < 2 || d % 2 != 0)
        throw std::invalid_argument("sufficient_report requires even degree >= 2");

    SufficientReport report;
    const auto hankel_start = std::chrono::steady_clock::now();
    const HankelForm h = hankel_matrix(F);
    report.hankel_inertia = signature(h.matrix);
    report.hankel = definiteness(h.matrix);
    report.hankel_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - hankel_start)
                           .count();

    const auto chi_start = std::chrono::steady_clock::now();
    const std::string reason = chi_capacity_reason(F.var_count(), d, options);
    if (!reason.empty()) {
        report.chi_skip_reason = reason;
        return report;
    }
    try {
        report.chi = char_poly(F, options.parallel);
        report.chi_ran = true;
        report.chi_positive_on_ray = is_positive_on_ray(report.chi);
    } catch (const capacity_error& e) {
        report.chi_skip_reason = e.what();
    } catch (const degenerate_specialization_error& e) {
        report.chi_skip_reason = e.what();
    }
    report.chi_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - chi_start)
            .count();
    return report;
}

// ---------------------------------------------------------------------------
// Counterexample search

namespace {

UniPoly dehomogenize(const HomogPoly& F, bool first_var_is_one) {
    const int d = F.degree();
    std::vector<Rat> coeffs(d + 1);
    for (int k = 0; k <= d; ++k)
        coeffs[k] = first_var_is_one ? F.coefficient({d - k, k}) : F.coefficient({k, d - k});
    return UniPoly(std::move(coeffs));
}

}  // namespace

std::optional<std::vector<Rat>> find_counterexample(const HomogPoly& F, int budget) {
    if (budget < 0) throw std::invalid_argument("negative budget");
    const int n = F.var_count();

    auto candidate = [&](const std::vector<Rat>& x) -> bool { return F.evaluate(x) < 0; };

    std::vector<Rat> x(n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int s : {1, -1}) {
            std::fill(x.begin(), x.end(), Rat(0));
            x[i] = s;
            if (candidate(x)) return x;
        }

    if (n <= 16)
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            for (int i = 0; i < n; ++i) x[i] = (mask & (1u << i)) ? -1 : 1;
            if (candidate(x)) return x;
        }

    if (n == 2) {
        // Exact: a binary form is negative somewhere iff one of its
        // dehomogenizations is negative at a real point.
        if (auto t = find_negative_real(dehomogenize(F, true))) return std::vector<Rat>{1, *t};
        if (auto t = find_negative_real(dehomogenize(F, false))) return std::vector<Rat>{*t, 1};
        return std::nullopt;
    }

    std::mt19937_64 rng(0x706f736365727431ull);  // fixed seed: identical runs
    std::uniform_int_distribution<int> den_dist(1, 16);
    std::uniform_int_distribution<int> face(0, n - 1);
    std::uniform_int_distribution<int> sign_dist(0, 1);
    for (int trial = 0; trial < budget; ++trial) {
        for (int i = 0; i < n; ++i) {
            const int q = den_dist(rng);
            std::uniform_int_distribution<int> num_dist(-q, q);
            x[i] = make_rational(num_dist(rng), q);
        }
        x[face(rng)] = sign_dist(rng) ? 1 : -1;  // land on the cube boundary
        if (candidate(x)) return x;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Verdict assembly

namespace {

std::string subset_label(const std::vector<int>& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

Certificate witness_certificate(const HomogPoly& F, const std::vector<Rat>& point) {
    Certificate c;
    c.kind = CertificateKind::WITNESS_POINT;
    c.point = point;
    c.value = F.evaluate(point);
    c.summary = "F evaluates to " + to_string(*c.value) + " < 0 at a rational point";
    return c;
}

class PhaseTimer {
  public:
    PhaseTimer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

Certificate violation_certificate(const SubspaceCheck& check, int n) {
    Certificate c;
    c.subset = check.subset;
    c.chi = check.chi;
    c.value = check.disc;
    const bool full = static_cast<int>(check.subset.size()) == n;
    if (sgn(check.disc) < 0) {
        c.kind = CertificateKind::DISC_NEGATIVE;
        c.summary = "discriminant on " + subset_label(check.subset) + " is " +
                    to_string(check.disc) + " < 0";
    } else if (full) {
        c.kind = CertificateKind::CHI_NECESSARY_VIOLATED;
        c.summary = "char_poly takes a negative value on t >= 0";
    } else {
        c.kind = CertificateKind::SUBSPACE_VIOLATED;
        c.summary = "char_poly on subspace " + subset_label(check.subset) +
                    " takes a negative value on t >= 0";
    }
    return c;
}

}  // namespace

Verdict certify(const HomogPoly& F, const CertifyOptions& options) {
    if (F.is_zero()) throw std::invalid_argument("certify: zero polynomial");
    const int d = F.degree();
    if (d % 2 != 0 || d < 2) throw std::invalid_argument("certify: degree must be even and >= 2");
    const int n = F.var_count();

    Verdict verdict;

    if (d == 2) {
        const PhaseTimer timer;
        SylvesterReport rep = sylvester_quadratic(F);
        Certificate cert;
        cert.kind = CertificateKind::SYLVESTER_MINORS;
        if (rep.positive) {
            verdict.kind = VerdictKind::POSITIVE;
            cert.minors = rep.leading_minors;
            cert.summary = "all leading principal minors are positive";
        } else if (rep.nonnegative) {
            verdict.kind = VerdictKind::NONNEGATIVE;
            cert.minors = rep.principal_minors;
            cert.summary = "all principal minors are nonnegative";
        } else {
            verdict.kind = VerdictKind::NOT_NONNEGATIVE;
            for (const MinorValue& m : rep.principal_minors)
                if (m.value < 0) {
                    cert.minors.push_back(m);
                    cert.subset = m.subset;
                    cert.value = m.value;
                    break;
                }
            cert.summary = "principal minor D_" + subset_label(cert.subset) + " = " +
                           to_string(*cert.value) + " < 0";
        }
        verdict.tests.push_back({"sylvester_minors", to_string(verdict.kind), timer.ms()});
        verdict.certificates.push_back(std::move(cert));
        verdict.sylvester = std::move(rep);
        if (verdict.kind == VerdictKind::NOT_NONNEGATIVE)
            if (auto w = find_counterexample(F, std::min(options.counterexample_budget, 64))) {
                verdict.certificates.push_back(witness_certificate(F, *w));
                verdict.witness = *w;
            }
        return verdict;
    }

    // d >= 4: run everything, then fold by the fixed priority list.
    SufficientReport suff = sufficient_report(F, options);
    verdict.tests.push_back({"hankel", to_string(suff.hankel), suff.hankel_ms});
    verdict.tests.push_back(
        {"char_poly_ray",
         suff.chi_ran ? (suff.chi_positive_on_ray ? "POSITIVE_ON_RAY" : "NOT_POSITIVE_ON_RAY")
                      : "SKIPPED: " + suff.chi_skip_reason,
         suff.chi_ms});

    const PhaseTimer nec_timer;
    NecessaryReport nec = necessary_report(F, options);
    int violations = 0;
    for (const SubspaceCheck& c : nec.checks) violations += c.violated() ? 1 : 0;
    verdict.tests.push_back({"necessary_conditions",
                             violations ? std::to_string(violations) + " VIOLATED" : "PASSED",
                             nec_timer.ms()});

    const PhaseTimer cex_timer;
    auto counterexample = find_counterexample(F, options.counterexample_budget);
    verdict.tests.push_back(
        {"counterexample_search", counterexample ? "FOUND" : "NONE", cex_timer.ms()});

    const bool sufficient_fired = suff.hankel == Definiteness::POSITIVE_DEFINITE ||
                                  suff.hankel == Definiteness::POSITIVE_SEMIDEFINITE ||
                                  (suff.chi_ran && suff.chi_positive_on_ray);
    if (sufficient_fired && (nec.any_violation() || counterexample))
        throw std::logic_error(
            "certify: sufficient certificate and necessary violation for the same form");

    if (suff.hankel == Definiteness::POSITIVE_DEFINITE) {
        verdict.kind = VerdictKind::POSITIVE;
        Certificate c;
        c.kind = CertificateKind::HANKEL_PD;
        c.matrix = hankel_matrix(F).matrix;
        c.inertia = suff.hankel_inertia;
        c.summary = "Hankel form is positive definite";
        verdict.certificates.push_back(std::move(c));
    } else if (suff.chi_ran && suff.chi_positive_on_ray) {
        verdict.kind = VerdictKind::POSITIVE;
        Certificate c;
        c.kind = CertificateKind::CHI_POSITIVE_RAY;
        c.chi = suff.chi;
        c.summary = "char_poly is strictly positive on t >= 0";
        verdict.certificates.push_back(std::move(c));
        if (suff.hankel == Definiteness::POSITIVE_SEMIDEFINITE) {
            Certificate h;
            h.kind = CertificateKind::HANKEL_PSD;
            h.matrix = hankel_matrix(F).matrix;
            h.inertia = suff.hankel_inertia;
            h.summary = "Hankel form is positive semidefinite";
            verdict.certificates.push_back(std::move(h));
        }
    } else if (suff.hankel == Definiteness::POSITIVE_SEMIDEFINITE) {
        verdict.kind = VerdictKind::NONNEGATIVE;
        Certificate c;
        c.kind = CertificateKind::HANKEL_PSD;
        c.matrix = hankel_matrix(F).matrix;
        c.inertia = suff.hankel_inertia;
        c.summary = "Hankel form is positive semidefinite";
        verdict.certificates.push_back(std::move(c));
    } else if (nec.any_violation()) {
        verdict.kind = VerdictKind::NOT_NONNEGATIVE;
        for (const SubspaceCheck& check : nec.checks)
            if (check.violated()) verdict.certificates.push_back(violation_certificate(check, n));
        if (counterexample) {
            verdict.certificates.push_back(witness_certificate(F, *counterexample));
            verdict.witness = *counterexample;
        }
    } else if (counterexample) {
        verdict.kind = VerdictKind::NOT_NONNEGATIVE;
        verdict.certificates.push_back(witness_certificate(F, *counterexample));
        verdict.witness = *counterexample;
    } else {
        verdict.kind = VerdictKind::UNKNOWN;
    }

    verdict.sufficient = std::move(suff);
    verdict.necessary = std::move(nec);
    return verdict;
}

// ---------------------------------------------------------------------------

bool verify_certificate(const HomogPoly& F, const Certificate& c) {
    switch (c.kind) {
        case CertificateKind::HANKEL_PD:
        case CertificateKind::HANKEL_PSD: {
            if (!c.matrix || !c.inertia) return false;
            const HankelForm h = hankel_matrix(F);
            if (!(h.matrix == *c.matrix)) return false;
            if (!(signature(h.matrix) == *c.inertia)) return false;
            const Definiteness def = definiteness(h);
            return c.kind == CertificateKind::HANKEL_PD
                       ? def == Definiteness::POSITIVE_DEFINITE
                       : def == Definiteness::POSITIVE_SEMIDEFINITE;
        }
        case CertificateKind::CHI_POSITIVE_RAY: {
            if (!c.chi) return false;
            return char_poly(F) == *c.chi && is_positive_on_ray(*c.chi);
        }
        case CertificateKind::CHI_NECESSARY_VIOLATED:
        case CertificateKind::SUBSPACE_VIOLATED:
        case CertificateKind::DISC_NEGATIVE: {
            if (!c.chi || c.subset.empty()) return false;
            const UniPoly chi = char_poly(F.restrict(c.subset));
            if (!(chi == *c.chi)) return false;
            if (c.kind == CertificateKind::DISC_NEGATIVE)
                return c.value && chi.coeff(0) == *c.value && *c.value < 0;
            return !is_nonneg_on_ray(chi);
        }
        case CertificateKind::SYLVESTER_MINORS: {
            if (F.degree() != 2 || c.minors.empty()) return false;
            const SymMatrix a = quadratic_form_matrix(F);
            for (const MinorValue& m : c.minors)
                if (principal_minor(a, m.subset) != m.value) return false;
            return true;
        }
        case CertificateKind::WITNESS_POINT: {
            if (c.point.empty() || !c.value) return false;
            bool nonzero = false;
            for (const Rat& x : c.point) nonzero = nonzero || x != 0;
            return nonzero && F.evaluate(c.point) == *c.value && *c.value < 0;
        }
    }
    return false;
}

}  // namespace poscert
