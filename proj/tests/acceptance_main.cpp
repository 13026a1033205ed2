// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Everything is exact; no tolerances are involved beyond
// the stated runtime ceilings.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "poscert/certify.hpp"
#include "poscert/charpoly.hpp"
#include "poscert/realroots.hpp"
#include "poscert/resultant.hpp"
#include "test_support.hpp"

using namespace poscert;
using poscert::testing::cofactor_det;
using poscert::testing::quadratic_from_matrix;
using poscert::testing::random_monic;
using poscert::testing::random_poly;
using poscert::testing::random_power_combination;
using poscert::testing::random_rational;
using poscert::testing::random_symmetric;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

// The shared nonnegative family for criteria 6 and 7: 50 forms cycling
// through every (n, 2d) with n <= 3, 2d <= 6.
std::vector<HomogPoly> nonneg_family() {
    static const std::vector<std::pair<int, int>> pairs{
        {1, 2}, {2, 2}, {3, 2}, {1, 4}, {2, 4}, {3, 4}, {1, 6}, {2, 6}, {3, 6}};
    std::mt19937_64 rng(2024);
    std::vector<HomogPoly> family;
    for (int i = 0; i < 50; ++i) {
        const auto& [n, two_d] = pairs[i % pairs.size()];
        family.push_back(random_power_combination(rng, n, two_d, 1 + i % 4));
    }
    return family;
}

// --------------------------------------------------------------------------

void criterion_normalization_and_degree() {
    std::mt19937_64 rng(101);
    const auto sweep_start = std::chrono::steady_clock::now();
    const std::vector<std::pair<int, int>> pairs{{2, 2}, {2, 4}, {2, 6}, {3, 2}, {3, 4}};
    for (const auto& [n, d] : pairs) {
        require(discriminant(HomogPoly::reference_form(n, d)) == 1,
                "discriminant(J) != 1 at n=" + std::to_string(n) + " d=" + std::to_string(d));
        const Int D = discriminant_degree(n, d);
        for (int trial = 0; trial < 20; ++trial) {
            const HomogPoly f = random_poly(rng, n, d, 6);
            const auto start = std::chrono::steady_clock::now();
            const UniPoly chi = char_poly(f, true);
            const double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            require(chi.degree() == D, "char_poly degree mismatch");
            require(chi.leading() == 1, "char_poly is not monic");
            if (n == 3 && d == 4)
                require(secs <= 60.0, "char_poly at (3,4) took " + std::to_string(secs) + " s");
        }
    }
    const double sweep_secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - sweep_start).count();
    require(sweep_secs <= 600.0, "full sweep took " + std::to_string(sweep_secs) + " s");
}

void criterion_d2_oracle() {
    std::mt19937_64 rng(102);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + trial % 3;
        const SymMatrix a = random_symmetric(rng, n);
        const HomogPoly f = quadratic_from_matrix(a);
        if (f.is_zero()) continue;
        std::vector<std::vector<Rat>> dense(n, std::vector<Rat>(n));
        std::vector<std::vector<UniPoly>> pencil(n, std::vector<UniPoly>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                dense[i][j] = a.at(i, j);
                pencil[i][j] = UniPoly::constant(a.at(i, j));
                if (i == j) pencil[i][j] = pencil[i][j] + UniPoly::term(1, 1);
            }
        require(discriminant(f) == cofactor_det(dense), "discriminant != det(A)");
        require(char_poly(f) == cofactor_det(pencil), "char_poly != det(A + tI)");
    }
}

void criterion_binary_quartic_fixture() {
    for (int c : {1, 2, 5}) {
        const HomogPoly base = HomogPoly::parse("x1^2 + " + std::to_string(c) + " x2^2", 2);
        require(discriminant(base * base) == 0,
                "discriminant((x1^2 + " + std::to_string(c) + " x2^2)^2) != 0");
    }
    std::mt19937_64 rng(103);
    const HomogPoly smooth = random_poly(rng, 2, 4, 6);
    require(discriminant(smooth) != 0, "random binary quartic came out singular");
}

void criterion_sylvester_sturm() {
    std::mt19937_64 rng(104);
    // 100 random monic polynomials, degree <= 8, p(0) != 0.
    for (int trial = 0; trial < 100; ++trial) {
        const UniPoly p = random_monic(rng, 2 + trial % 7, true);
        const UniPoly sf = squarefree_part(p);
        const RootCounts counts = sylvester_root_counts(sf);
        const int sturm_pos = sturm_count(sf, Extended::at(0), Extended::pos_inf());
        const int sturm_neg = sturm_count(sf, Extended::neg_inf(), Extended::at(0));
        require(counts.positive_real_roots == sturm_pos, "positive count != sturm count");
        require(counts.real_roots == sturm_pos + sturm_neg, "real count != sturm count");
        // 2P = sg(Q_1) + sg(Q_t), entrywise on the trace-form signatures.
        const int sg1 = signature(trace_form(sf, UniPoly::constant(1))).sig();
        const int sgt = signature(trace_form(sf, UniPoly::term(1, 1))).sig();
        require(2 * sturm_pos == sg1 + sgt, "2P != sg(Q_1) + sg(Q_t)");
    }
    // Constructed factorizations with known root counts.
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<int> root_dist(-6, 6);
        std::uniform_int_distribution<int> mult_dist(1, 3);
        std::set<int> roots;
        UniPoly p = UniPoly::constant(1);
        for (int i = 0; i < 3; ++i) {
            const int r = root_dist(rng);
            if (r == 0 || roots.count(r)) continue;
            roots.insert(r);
            for (int m = mult_dist(rng); m > 0; --m) p = p * UniPoly({-r, Rat(1)});
        }
        p = p * UniPoly({4, 0, 1});  // +-2i
        int positive = 0;
        for (int r : roots) positive += r > 0;
        const RootCounts counts = sylvester_root_counts(p);
        require(counts == RootCounts{static_cast<int>(roots.size()), positive},
                "constructed factorization counts disagree");
    }
}

void criterion_mu_h_identity() {
    const auto start = std::chrono::steady_clock::now();
    for (int n = 1; n <= 3; ++n)
        for (int two_d = 2; two_d <= 8; two_d += 2)
            require(verify_mu_h_identity(n, two_d),
                    "mu-h identity failed at n=" + std::to_string(n) +
                        " 2d=" + std::to_string(two_d));
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    require(secs <= 30.0, "mu-h sweep took " + std::to_string(secs) + " s");
}

void criterion_sufficiency_soundness() {
    std::mt19937_64 rng(106);
    for (const HomogPoly& f : nonneg_family()) {
        const Definiteness def = definiteness(hankel_matrix(f));
        require(def == Definiteness::POSITIVE_SEMIDEFINITE ||
                    def == Definiteness::POSITIVE_DEFINITE,
                "hankel of a sum of even powers is not PSD: " + f.to_string());
        const Verdict v = certify(f);
        require(v.kind == VerdictKind::POSITIVE || v.kind == VerdictKind::NONNEGATIVE,
                "certify refused a nonnegative-by-construction form: " + f.to_string());
        for (int s = 0; s < 1000; ++s) {
            std::vector<Rat> x(f.var_count());
            for (Rat& coord : x) coord = random_rational(rng, 9, 5);
            require(f.evaluate(x) >= 0, "negative sample on a PSD-certified form");
        }
    }
}

void criterion_necessity() {
    CertifyOptions options;
    options.max_charpoly_degree = 100;  // run chi everywhere, (3,6) included
    options.max_resultant_matrix = 200;
    options.parallel = true;
    for (const HomogPoly& f : nonneg_family()) {
        const NecessaryReport report = necessary_report(f, options);
        for (const SubspaceCheck& check : report.checks) {
            require(check.ran, "necessary check skipped unexpectedly: " + check.skip_reason);
            require(check.disc >= 0, "discriminant negative on a nonnegative form");
            require(check.chi_nonneg_on_ray,
                    "chi not nonnegative on the ray for a nonnegative form");
        }
        require(!report.any_violation(), "violation flagged on a nonnegative form");
    }
}

void criterion_one_sidedness() {
    // certify(x1^2 x2^2) = UNKNOWN with the exact indefinite Hankel matrix.
    const HomogPoly cross = HomogPoly::parse("x1^2 x2^2", 2);
    const Verdict v = certify(cross);
    require(v.kind == VerdictKind::UNKNOWN, "certify(x1^2 x2^2) != UNKNOWN");
    require(v.sufficient.has_value(), "missing sufficient report");
    require(v.sufficient->hankel == Definiteness::INDEFINITE, "hankel not INDEFINITE");
    const HankelForm h = hankel_matrix(cross);
    const Rat sixth = make_rational(1, 6);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            require(h.matrix.at(i, j) == (i + j == 2 ? sixth : Rat(0)),
                    "hankel matrix of x1^2 x2^2 differs from [[0,0,1/6],[0,1/6,0],[1/6,0,0]]");

    // necessary_report(-(x1^2 + x2^2)): chi = (t-1)^2 passes the ray test on
    // the full space, while the Sylvester criterion and a witness prove
    // NOT_NONNEGATIVE.
    const HomogPoly minus_j = -HomogPoly::reference_form(2, 2);
    const NecessaryReport nec = necessary_report(minus_j);
    const SubspaceCheck* full = nec.full_space();
    require(full != nullptr && full->ran, "missing full-space check");
    require(full->chi == UniPoly({1, -2, 1}), "chi(-J) != (t-1)^2");
    require(full->chi_nonneg_on_ray, "(t-1)^2 failed the ray test");
    require(full->disc == 1, "discriminant(-J) != 1");
    const SylvesterReport sylv = sylvester_quadratic(minus_j);
    require(!sylv.nonnegative, "sylvester accepted -J");
    const Verdict vneg = certify(minus_j);
    require(vneg.kind == VerdictKind::NOT_NONNEGATIVE, "certify(-J) != NOT_NONNEGATIVE");
    require(vneg.witness.has_value() && minus_j.evaluate(*vneg.witness) < 0,
            "certify(-J) carries no negative witness");
}

void criterion_indefinite_detection() {
    const HomogPoly f = HomogPoly::parse("x1^4 - 3 x1^2 x2^2 + x2^4", 2);
    const Verdict v = certify(f);
    require(v.kind == VerdictKind::NOT_NONNEGATIVE, "certify != NOT_NONNEGATIVE");
    require(v.witness.has_value(), "no witness attached");
    require(*v.witness == std::vector<Rat>{1, 1}, "witness is not (1,1)");
    require(f.evaluate(*v.witness) == -1, "witness value is not exactly -1");
}

std::string verdict_fingerprint(const Verdict& v) {
    std::ostringstream out;
    out << to_string(v.kind) << "\n";
    for (const TestOutcome& t : v.tests) out << t.name << "=" << t.outcome << "\n";
    for (const Certificate& c : v.certificates) {
        out << to_string(c.kind) << "|" << c.summary << "|";
        for (int s : c.subset) out << s << ",";
        if (c.chi) out << c.chi->to_string();
        out << "|";
        if (c.value) out << to_string(*c.value);
        out << "|";
        for (const Rat& x : c.point) out << to_string(x) << ",";
        if (c.matrix)
            for (int i = 0; i < c.matrix->dim(); ++i)
                for (int j = 0; j < c.matrix->dim(); ++j)
                    out << to_string(c.matrix->at(i, j)) << ";";
        for (const MinorValue& m : c.minors) {
            for (int s : m.subset) out << s << ",";
            out << "=" << to_string(m.value) << ";";
        }
        out << "\n";
    }
    if (v.witness) {
        out << "witness:";
        for (const Rat& x : *v.witness) out << " " << to_string(x);
        out << "\n";
    }
    return out.str();
}

void criterion_determinism() {
    std::mt19937_64 rng(110);
    std::vector<HomogPoly> fixtures{
        HomogPoly::reference_form(2, 4),
        HomogPoly::parse("x1^4 - 3 x1^2 x2^2 + x2^4", 2),
        HomogPoly::parse("x1^2 x2^2", 2),
        -HomogPoly::reference_form(2, 2),
        HomogPoly::parse("x1^2 + 2 x2^2", 2),
    };
    for (int trial = 0; trial < 5; ++trial) fixtures.push_back(random_poly(rng, 2, 4, 5));
    for (int trial = 0; trial < 3; ++trial) fixtures.push_back(random_poly(rng, 3, 2, 5));
    std::string first, second;
    for (const HomogPoly& f : fixtures) first += verdict_fingerprint(certify(f));
    for (const HomogPoly& f : fixtures) second += verdict_fingerprint(certify(f));
    require(first == second, "two runs produced different verdicts or certificates");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void()>>> criteria{
        {"normalization and degree of chi over (n,d) sweep", criterion_normalization_and_degree},
        {"d=2 oracle equivalence (det and characteristic pencil)", criterion_d2_oracle},
        {"binary quartic fixture (x1^2 + c x2^2)^2", criterion_binary_quartic_fixture},
        {"sylvester trace-form counts vs sturm and factorizations", criterion_sylvester_sturm},
        {"mu-h identity and convolution identity (n<=3, 2d<=8)", criterion_mu_h_identity},
        {"sufficiency soundness on sums of even powers", criterion_sufficiency_soundness},
        {"necessity: discriminant and ray tests on every subspace", criterion_necessity},
        {"one-sidedness: UNKNOWN crossterm and -J behavior", criterion_one_sidedness},
        {"indefinite detection with exact witness", criterion_indefinite_detection},
        {"determinism of verdicts and certificates", criterion_determinism},
    };

    int failures = 0;
    const auto suite_start = std::chrono::steady_clock::now();
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            criteria[i].second();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line << (error.empty() ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first
             << "  (" << secs << " s)";
        if (!error.empty()) line << "  -- " << error;
        std::cout << line.str() << std::endl;
        if (!error.empty()) ++failures;
    }
    const double total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - suite_start).count();
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
              << "  (" << total << " s total)" << std::endl;
    return failures;
}
