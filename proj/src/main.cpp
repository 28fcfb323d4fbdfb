#include "innertwist/examples.hpp"
#include "innertwist/itwfile.hpp"
#include "innertwist/tensoralg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace innertwist;
using nlohmann::ordered_json;

namespace {

/// One verification target: a central bialgebra plus an optional pairing.
struct Subject {
    std::string name;
    CentralBialgebra bialgebra;
    std::optional<GradedMorphism> pairing;
};

/// Largest truncation degree whose heaviest materialized coalgebra stays
/// within a safe number of matrix entries.  With a pairing the bounded
/// table reaches word length 2*degree; without one, degree.
long max_degree(long dim, bool with_pairing) {
    constexpr long kMaxEntries = 2'000'000;
    long best = 0;
    for (long n = 1; n <= 64; ++n) {
        long words = with_pairing ? 2 * n : n;
        // cost of the word-length-w comultiplication: dim^(3w) entries
        long cost = 1;
        for (long k = 0; k < 3 * words; ++k) {
            if (cost > kMaxEntries / std::max<long>(dim, 1)) return best;
            cost *= dim;
        }
        if (cost > kMaxEntries) return best;
        best = n;
    }
    return best;
}

CheckList assemble_suite(const Subject& s, bool skip_hopf, long degree) {
    CheckList checks;
    auto add = [&](CheckList more) {
        for (auto& c : more) checks.push_back(std::move(c));
    };
    const CentralBialgebra& cb = s.bialgebra;
    if (cb.antipode && !skip_hopf)
        add(check_hopf(HopfAlgebra(cb.bialgebra, *cb.antipode), s.name));
    else
        add(check_bialgebra(cb.bialgebra, s.name));
    add(check_central_axioms(cb, s.name));
    add(check_derived_sigma_identities(cb, s.name));
    add(check_schauenburg(cb, s.name));
    if (s.pairing) add(check_cqt_all(cb, *s.pairing, s.name, !skip_hopf));
    if (degree >= 1) {
        long cap = max_degree(cb.carrier().dim(), s.pairing.has_value());
        if (degree > cap)
            throw StructuralError(
                "degree " + std::to_string(degree) + " is too large for a " +
                std::to_string(cb.carrier().dim()) +
                "-dimensional instance; the maximum here is " +
                std::to_string(cap));
        CentralCoalgebra cc(cb.bialgebra.as_coalgebra(), cb.sigma);
        add(check_truncated_tensor_bialgebra(
            truncated_tensor_bialgebra(cc, degree), s.name));
        if (s.pairing) {
            auto bc = extend_bicharacter(cc, *s.pairing, degree);
            add(check_bicharacter(bc, s.name));
            add(check_diagram_R(bc, s.name));
        }
    }
    return checks;
}

const char* status_word(CheckStatus s) {
    return s == CheckStatus::Pass ? "pass"
           : s == CheckStatus::Fail ? "fail"
                                    : "skip";
}

int emit_report(const Report& rep, const std::string& subject, bool as_json,
                long elapsed_ms) {
    long total = static_cast<long>(rep.results().size());
    if (as_json) {
        ordered_json out;
        out["schema"] = 1;
        out["subject"] = subject;
        out["checks"] = ordered_json::array();
        for (const CheckResult& r : rep.results()) {
            ordered_json c;
            c["anchor"] = r.anchor;
            c["subject"] = r.subject;
            c["status"] = status_word(r.status);
            c["detail"] = r.detail;
            out["checks"].push_back(std::move(c));
        }
        out["passed"] = total - rep.failures() - rep.skips();
        out["failed"] = rep.failures();
        out["skipped"] = rep.skips();
        out["elapsed_ms"] = elapsed_ms;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << rep.render_text();
        std::cout << total << " checks: "
                  << (total - rep.failures() - rep.skips()) << " passed, "
                  << rep.failures() << " failed, " << rep.skips()
                  << " skipped (" << elapsed_ms << " ms)\n";
    }
    return rep.failures() == 0 ? 0 : 1;
}

int run_subject(const Subject& s, bool as_json, bool skip_hopf, long degree) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep = run_checks(assemble_suite(s, skip_hopf, degree));
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    return emit_report(rep, s.name, as_json, elapsed);
}

Subject subject_from_file(const std::string& path) {
    StructureSession session = parse_structure_file(path);
    if (!session.bialgebra)
        throw StructuralError("'" + path + "' declares no bialgebra");
    return {session.bialgebra_name, *session.bialgebra, session.pairing};
}

Subject demo_subject(const std::string& name,
                     const std::vector<long>& params) {
    auto want = [&](std::size_t n) {
        if (params.size() != n)
            throw StructuralError("demo '" + name + "' takes " +
                                  std::to_string(n) + " parameter(s), got " +
                                  std::to_string(params.size()));
    };
    if (name == "group-algebra") {
        want(2);
        auto ex = build_group_algebra_cqt(params[0], params[1]);
        return {ex.name, ex.bialgebra, ex.pairing};
    }
    if (name == "exterior-line") {
        want(1);
        auto ex = build_exterior_line(params[0]);
        return {ex.name, ex.bialgebra, ex.pairing};
    }
    if (name == "sweedler") {
        want(0);
        auto cb = build_sweedler();
        auto sols = cqt_ansatz_solver(cb, sweedler_support());
        if (sols.empty())
            throw StructuralError(
                "the pairing search on the four-dimensional example came "
                "back empty");
        return {"H4 (found pairing)", cb, sols.front()};
    }
    throw StructuralError("unknown demo '" + name +
                          "'; available: group-algebra n k, sweedler, "
                          "exterior-line alpha");
}

SupportPattern parse_support(const std::string& pattern,
                             const GradedObject& carrier) {
    if (pattern == "full") return full_support(carrier);
    SupportPattern out;
    std::size_t start = 0;
    while (start <= pattern.size()) {
        auto stop = pattern.find(',', start);
        if (stop == std::string::npos) stop = pattern.size();
        std::string pair = pattern.substr(start, stop - start);
        auto colon = pair.find(':');
        if (colon == std::string::npos)
            throw StructuralError("support entry '" + pair +
                                  "' is not label:label");
        out.push_back({pair.substr(0, colon), pair.substr(colon + 1)});
        start = stop + 1;
    }
    return out;
}

int run_oracle(const std::string& path, const std::string& pattern,
               bool as_json) {
    Subject s = subject_from_file(path);
    const GradedObject& carrier = s.bialgebra.carrier();
    auto sols =
        cqt_ansatz_solver(s.bialgebra, parse_support(pattern, carrier));
    long d = carrier.dim();
    if (as_json) {
        ordered_json out;
        out["schema"] = 1;
        out["subject"] = s.name;
        out["pairings"] = ordered_json::array();
        for (const GradedMorphism& r : sols) {
            ordered_json entries;
            for (long i = 0; i < d; ++i)
                for (long j = 0; j < d; ++j)
                    if (!r.matrix().at(0, i * d + j).is_zero())
                        entries[carrier.label_of(i) + ":" +
                                carrier.label_of(j)] =
                            format_scalar(r.matrix().at(0, i * d + j));
            out["pairings"].push_back(std::move(entries));
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << sols.size() << " pairing(s) found for " << s.name
                  << "\n";
        for (std::size_t n = 0; n < sols.size(); ++n) {
            std::cout << "pairing " << (n + 1) << ":\n";
            for (long i = 0; i < d; ++i)
                for (long j = 0; j < d; ++j)
                    if (!sols[n].matrix().at(0, i * d + j).is_zero())
                        std::cout << "  r(" << carrier.label_of(i) << " (x) "
                                  << carrier.label_of(j) << ") = "
                                  << format_scalar(
                                         sols[n].matrix().at(0, i * d + j))
                                  << "\n";
        }
    }
    return sols.empty() ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of bialgebra, Hopf, central and "
                 "coquasitriangular structures over cyclotomic fields"};
    app.require_subcommand(1);

    std::string file, demo_name, support = "full";
    std::vector<long> demo_params;
    bool as_json = false, skip_hopf = false;
    long degree = 0;

    CLI::App* verify =
        app.add_subcommand("verify", "run the verification suite on a "
                                     "structure file");
    verify->add_option("file", file, "structure file")->required();
    verify->add_flag("--json", as_json, "emit the report as JSON");
    verify->add_flag("--skip-hopf", skip_hopf,
                     "bialgebra-level checks only (no antipode)");
    verify->add_option("--degree", degree,
                       "also check the truncated tensor algebra and the "
                       "pairing table up to this degree");

    CLI::App* demo = app.add_subcommand(
        "demo", "verify a built-in instance: group-algebra n k, sweedler, "
                "exterior-line alpha");
    demo->add_option("name", demo_name, "instance name")->required();
    demo->add_option("params", demo_params, "instance parameters");
    demo->add_flag("--json", as_json, "emit the report as JSON");
    demo->add_flag("--skip-hopf", skip_hopf,
                   "bialgebra-level checks only (no antipode)");
    demo->add_option("--degree", degree,
                     "also check the truncated tensor algebra and the "
                     "pairing table up to this degree");

    CLI::App* oracle = app.add_subcommand(
        "oracle", "search for structures on a declared instance");
    CLI::App* oracle_cqt = oracle->add_subcommand(
        "cqt", "exhaustive search for coquasitriangular pairings; exits 0 "
               "iff at least one is found");
    oracle_cqt->add_option("file", file, "structure file")->required();
    oracle_cqt->add_option("--support", support,
                           "'full' or comma-separated label:label pairs");
    oracle_cqt->add_flag("--json", as_json, "emit the pairings as JSON");
    oracle->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed())
            return run_subject(subject_from_file(file), as_json, skip_hopf,
                               degree);
        if (demo->parsed())
            return run_subject(demo_subject(demo_name, demo_params), as_json,
                               skip_hopf, degree);
        if (oracle->parsed()) return run_oracle(file, support, as_json);
    } catch (const ParseError& e) {
        std::cerr << file << ":" << e.line;
        if (e.column > 0) std::cerr << ":" << e.column;
        std::cerr << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
