// poscert: exact positivity certificates for homogeneous polynomials.
//
// Subcommands: certify, discriminant, charpoly, hankel, roots, restrict.
// Exit codes: 0 POSITIVE/NONNEGATIVE (or plain success), 1 NOT_NONNEGATIVE,
// 2 UNKNOWN, 64 usage error, 65 capacity error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "poscert/certify.hpp"
#include "poscert/charpoly.hpp"
#include "poscert/errors.hpp"
#include "poscert/hankel.hpp"
#include "poscert/realroots.hpp"
#include "poscert/resultant.hpp"

using json = nlohmann::ordered_json;
using namespace poscert;

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitCapacity = 65;

struct PolyInput {
    std::string text;
    std::string file;
    int n = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("polynomial", text, "polynomial, e.g. \"x1^4 - 3 x1^2 x2^2\"");
        cmd->add_option("-n,--vars", n, "number of variables")->required();
        cmd->add_option("--file", file, "read the polynomial from a file instead");
    }

    HomogPoly parse() const {
        std::string body = text;
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) throw std::invalid_argument("cannot open file: " + file);
            std::stringstream ss;
            ss << in.rdbuf();
            body = ss.str();
        }
        if (body.empty())
            throw std::invalid_argument("no polynomial given (positional argument or --file)");
        return HomogPoly::parse(body, n);
    }
};

json rat_str(const Rat& r) { return to_string(r); }

json point_json(const std::vector<Rat>& pt) {
    json a = json::array();
    for (const Rat& x : pt) a.push_back(rat_str(x));
    return a;
}

json matrix_json(const SymMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(rat_str(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json inertia_json(const SignatureReport& s) {
    return json{{"rank", s.rank}, {"positive", s.positive}, {"negative", s.negative}};
}

json certificate_json(const Certificate& c) {
    json j;
    j["kind"] = to_string(c.kind);
    j["summary"] = c.summary;
    if (!c.subset.empty()) j["subset"] = c.subset;
    if (c.matrix) j["matrix"] = matrix_json(*c.matrix);
    if (c.inertia) j["inertia"] = inertia_json(*c.inertia);
    if (c.chi) j["chi"] = c.chi->to_string();
    if (c.value) j["value"] = rat_str(*c.value);
    if (!c.point.empty()) j["point"] = point_json(c.point);
    if (!c.minors.empty()) {
        json minors = json::array();
        for (const MinorValue& m : c.minors)
            minors.push_back(json{{"subset", m.subset}, {"value", rat_str(m.value)}});
        j["minors"] = std::move(minors);
    }
    return j;
}

json input_json(const HomogPoly& f) {
    json j;
    j["polynomial"] = f.to_string();
    j["n"] = f.var_count();
    j["degree"] = f.degree();
    j["space_dimension"] = to_string(space_dimension(f.var_count(), f.degree()));
    if (f.degree() >= 2)
        j["discriminant_degree"] = to_string(discriminant_degree(f.var_count(), f.degree()));
    return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int verdict_exit_code(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::POSITIVE:
        case VerdictKind::NONNEGATIVE:
            return 0;
        case VerdictKind::NOT_NONNEGATIVE:
            return 1;
        case VerdictKind::UNKNOWN:
            return 2;
    }
    return 2;
}

int run_certify(const PolyInput& input, const CertifyOptions& options, bool as_json) {
    const auto start = std::chrono::steady_clock::now();
    const HomogPoly f = input.parse();
    const Verdict verdict = certify(f, options);
    const double total_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();

    if (as_json) {
        json j;
        j["input"] = input_json(f);
        j["verdict"] = to_string(verdict.kind);
        j["exit_code"] = verdict_exit_code(verdict.kind);
        json tests = json::array();
        for (const TestOutcome& t : verdict.tests)
            tests.push_back(json{{"name", t.name}, {"outcome", t.outcome}});
        j["tests"] = std::move(tests);
        json certs = json::array();
        for (const Certificate& c : verdict.certificates) certs.push_back(certificate_json(c));
        j["certificates"] = std::move(certs);
        if (verdict.witness) j["witness"] = point_json(*verdict.witness);
        if (verdict.necessary) {
            json checks = json::array();
            for (const SubspaceCheck& c : verdict.necessary->checks) {
                json e;
                e["subset"] = c.subset;
                if (c.ran) {
                    e["chi"] = c.chi.to_string();
                    e["discriminant"] = rat_str(c.disc);
                    e["chi_nonneg_on_ray"] = c.chi_nonneg_on_ray;
                    e["violated"] = c.violated();
                } else {
                    e["skipped"] = c.skip_reason;
                }
                checks.push_back(std::move(e));
            }
            j["necessary_checks"] = std::move(checks);
        }
        // Timings last so the deterministic prefix is easy to compare.
        json timings;
        for (const TestOutcome& t : verdict.tests) timings[t.name] = t.milliseconds;
        timings["total_ms"] = total_ms;
        j["timings"] = std::move(timings);
        emit(j);
    } else {
        std::cout << "input: " << f.to_string() << "\n";
        std::cout << "space: n=" << f.var_count() << " d=" << f.degree()
                  << " N=" << to_string(space_dimension(f.var_count(), f.degree()))
                  << " D=" << to_string(discriminant_degree(f.var_count(), f.degree())) << "\n";
        std::cout << "tests:\n";
        for (const TestOutcome& t : verdict.tests)
            std::cout << "  " << t.name << ": " << t.outcome << "\n";
        if (!verdict.certificates.empty()) {
            std::cout << "certificates:\n";
            for (const Certificate& c : verdict.certificates)
                std::cout << "  " << to_string(c.kind) << ": " << c.summary << "\n";
        }
        if (verdict.witness) {
            std::cout << "witness: (";
            for (size_t i = 0; i < verdict.witness->size(); ++i) {
                if (i) std::cout << ", ";
                std::cout << to_string((*verdict.witness)[i]);
            }
            std::cout << ")\n";
        }
        std::cout << "verdict: " << to_string(verdict.kind) << "\n";
    }
    return verdict_exit_code(verdict.kind);
}

int run_discriminant(const PolyInput& input, bool as_json) {
    const HomogPoly f = input.parse();
    const Rat disc = robust_discriminant(f);
    if (as_json) {
        json j;
        j["input"] = input_json(f);
        j["discriminant"] = rat_str(disc);
        emit(j);
    } else {
        std::cout << to_string(disc) << "\n";
    }
    return 0;
}

int run_charpoly(const PolyInput& input, const std::string& table_path, bool parallel,
                 bool as_json) {
    const HomogPoly f = input.parse();
    const UniPoly chi = char_poly(f, parallel);
    if (as_json) {
        json j;
        j["input"] = input_json(f);
        j["char_poly"] = chi.to_string();
        json coeffs = json::array();
        for (int k = 0; k <= chi.degree(); ++k) coeffs.push_back(rat_str(chi.coeff(k)));
        j["coefficients_ascending"] = std::move(coeffs);
        emit(j);
    } else {
        std::cout << chi.to_string() << "\n";
    }
    if (!table_path.empty()) {
        std::ofstream out(table_path);
        if (!out) throw std::invalid_argument("cannot write table file: " + table_path);
        for (int t = 0; t <= 2 * chi.degree(); ++t)
            out << t << " " << to_string(chi(Rat(t))) << "\n";
    }
    return 0;
}

int run_hankel(const PolyInput& input, bool as_json) {
    const HomogPoly f = input.parse();
    const HankelForm h = hankel_matrix(f);
    const SignatureReport sig = signature(h.matrix);
    const Definiteness def = definiteness(h);
    if (as_json) {
        json j;
        j["input"] = input_json(f);
        j["dimension"] = h.matrix.dim();
        j["matrix"] = matrix_json(h.matrix);
        j["inertia"] = inertia_json(sig);
        j["definiteness"] = to_string(def);
        emit(j);
    } else {
        std::cout << "dimension: " << h.matrix.dim() << "\n";
        for (int i = 0; i < h.matrix.dim(); ++i) {
            for (int j = 0; j < h.matrix.dim(); ++j)
                std::cout << (j ? " " : "") << to_string(h.matrix.at(i, j));
            std::cout << "\n";
        }
        std::cout << "inertia: rank=" << sig.rank << " positive=" << sig.positive
                  << " negative=" << sig.negative << "\n";
        std::cout << "definiteness: " << to_string(def) << "\n";
    }
    return 0;
}

int run_roots(const std::string& text, bool as_json) {
    const UniPoly p = UniPoly::parse(text);
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
    const int zero_mult = p.valuation_at_zero();
    const UniPoly q = p.shift_down(zero_mult);
    const UniPoly sf = squarefree_part(q);
    const RootCounts counts = sylvester_root_counts(sf);

    const bool positive_lead = p.leading() > 0;
    const bool nonneg = positive_lead && is_nonneg_on_ray(p);
    const bool positive = positive_lead && is_positive_on_ray(p);
    std::optional<Rat> witness;
    if (!nonneg)
        witness = positive_lead ? find_negative_on_ray(p)
                                : std::optional<Rat>(cauchy_root_bound(p) /* beyond all roots */);

    if (as_json) {
        json j;
        j["polynomial"] = p.to_string();
        j["degree"] = p.degree();
        j["root_multiplicity_at_zero"] = zero_mult;
        j["distinct_real_roots"] = counts.real_roots + (zero_mult > 0 ? 1 : 0);
        j["distinct_positive_real_roots"] = counts.positive_real_roots;
        j["nonneg_on_ray"] = nonneg;
        j["positive_on_ray"] = positive;
        if (witness) {
            j["negative_at"] = rat_str(*witness);
            j["value"] = rat_str(p(*witness));
        }
        emit(j);
    } else {
        std::cout << "polynomial: " << p.to_string() << "\n";
        std::cout << "distinct real roots: " << counts.real_roots + (zero_mult > 0 ? 1 : 0)
                  << " (positive: " << counts.positive_real_roots
                  << ", multiplicity at 0: " << zero_mult << ")\n";
        std::cout << "nonnegative on [0,inf): " << (nonneg ? "yes" : "no") << "\n";
        std::cout << "strictly positive on [0,inf): " << (positive ? "yes" : "no") << "\n";
        if (witness)
            std::cout << "negative at t = " << to_string(*witness) << " (value "
                      << to_string(p(*witness)) << ")\n";
    }
    return 0;
}

int run_restrict(const PolyInput& input, const std::vector<int>& keep, bool as_json) {
    const HomogPoly f = input.parse();
    const HomogPoly g = f.restrict(keep);
    if (as_json) {
        json j;
        j["input"] = input_json(f);
        j["keep"] = keep;
        j["restricted"] = g.to_string();
        j["n"] = g.var_count();
        emit(j);
    } else {
        std::cout << g.to_string() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact positivity and nonnegativity certificates for homogeneous polynomials"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    PolyInput certify_in, disc_in, chi_in, hankel_in, restrict_in;
    CertifyOptions options;
    bool parallel = false;

    CLI::App* cmd_certify = app.add_subcommand("certify", "run the full decision pipeline");
    cmd_certify->fallthrough();
    certify_in.attach(cmd_certify);
    cmd_certify->add_option("--budget", options.counterexample_budget,
                            "random points for the counterexample search");
    cmd_certify->add_option("--chi-max-degree", options.max_charpoly_degree,
                            "skip char_poly paths above this degree");
    cmd_certify->add_option("--chi-max-matrix", options.max_resultant_matrix,
                            "skip char_poly paths above this resultant matrix size");
    cmd_certify->add_flag("--subspaces,!--no-subspaces", options.subspace_checks,
                          "coordinate-subspace necessary checks (default on)");
    cmd_certify->add_flag("--parallel", options.parallel,
                          "evaluate interpolation nodes concurrently");

    CLI::App* cmd_disc = app.add_subcommand("discriminant", "normalized discriminant of F");
    cmd_disc->fallthrough();
    disc_in.attach(cmd_disc);

    std::string table_path;
    CLI::App* cmd_chi =
        app.add_subcommand("charpoly", "characteristic polynomial det-style pencil in t");
    cmd_chi->fallthrough();
    chi_in.attach(cmd_chi);
    cmd_chi->add_option("--table", table_path, "write a (t, chi(t)) sample table to this file");
    cmd_chi->add_flag("--parallel", parallel, "evaluate interpolation nodes concurrently");

    CLI::App* cmd_hankel = app.add_subcommand("hankel", "Hankel form of F, inertia, definiteness");
    cmd_hankel->fallthrough();
    hankel_in.attach(cmd_hankel);

    std::string roots_poly;
    CLI::App* cmd_roots = app.add_subcommand("roots", "univariate real-root counts and ray tests");
    cmd_roots->fallthrough();
    cmd_roots->add_option("polynomial", roots_poly, "univariate polynomial in t")->required();

    CLI::App* cmd_restrict = app.add_subcommand("restrict", "restrict F to a coordinate subspace");
    cmd_restrict->fallthrough();
    restrict_in.attach(cmd_restrict);
    std::string keep_spec;
    cmd_restrict
        ->add_option("--keep", keep_spec, "comma-separated 1-based variable indices to keep")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (cmd_certify->parsed()) return run_certify(certify_in, options, as_json);
        if (cmd_disc->parsed()) return run_discriminant(disc_in, as_json);
        if (cmd_chi->parsed()) return run_charpoly(chi_in, table_path, parallel, as_json);
        if (cmd_hankel->parsed()) return run_hankel(hankel_in, as_json);
        if (cmd_roots->parsed()) return run_roots(roots_poly, as_json);
        if (cmd_restrict->parsed()) {
            std::vector<int> keep;
            std::stringstream ss(keep_spec);
            for (std::string item; std::getline(ss, item, ',');) {
                size_t used = 0;
                const int v = std::stoi(item, &used);
                if (used != item.size()) throw std::invalid_argument("bad --keep entry: " + item);
                keep.push_back(v);
            }
            return run_restrict(restrict_in, keep, as_json);
        }
    } catch (const capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const degenerate_specialization_error& e) {
        std::cerr << "degenerate specialization: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
