// Batch command-line front end: enumerate, compute, verify, report.
//
// Subcommands:
//   poly <id> [params]            print a named polynomial
//   enumerate <family> [params]   stream a family as JSON lines
//   stat <family> <stat> [params] print a statistic distribution
//   biject <id> [--inverse]       map a JSON object from stdin
//   orbits <family> <action>      print the orbit profile
//   verify <triple> [--n-range]   run the verification engine
//   verify-all [--max-n N]        run every registered triple
//
// Output is byte-deterministic for a fixed configuration; wall-time lives
// in a separate meta block.  Exit codes: 0 all good, 1 verification
// mismatch (strict mode), 2 usage error.

#include "cspkit/runner.hpp"
#include "cspkit/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace cspkit;

namespace {

struct ParamFlags {
    long n = 0, s = 0, k = 0, e = 0, l = 0, r = 0;
    void attach(CLI::App* cmd) {
        cmd->add_option("--n", n, "size parameter");
        cmd->add_option("--s", s, "depth / shift parameter");
        cmd->add_option("--k", k, "refinement index");
        cmd->add_option("--e", e, "proper edge count");
        cmd->add_option("--l", l, "loop count");
        cmd->add_option("--r", r, "marked region count");
    }
    FamilyParams family() const { return {n, s, k, e, l, r}; }
    PolyParams poly() const { return {n, k, s, e, l, r}; }
    TripleParams triple() const { return {n, k, e, l, r}; }
};

std::pair<long, long> parse_range(const std::string& text) {
    auto pos = text.find("..");
    if (pos == std::string::npos) {
        long v = std::stol(text);
        return {v, v};
    }
    return {std::stol(text.substr(0, pos)), std::stol(text.substr(pos + 2))};
}

std::ostream& open_sink(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw CLI::ValidationError("--out", "cannot open " + path);
    return file;
}

int emit_reports(const RunSummary& summary, const std::string& format, std::ostream& os,
                 bool strict) {
    if (format == "csv") {
        os << report_csv_header() << "\n";
        for (const auto& rep : summary.reports)
            for (const auto& line : report_to_csv(rep)) os << line << "\n";
    } else if (format == "json") {
        json arr = json::array();
        for (const auto& rep : summary.reports) arr.push_back(report_to_json(rep));
        json out{{"schema", 1}, {"reports", arr}};
        json outcomes = json::array();
        for (const auto& o : summary.outcomes)
            outcomes.push_back(json{{"triple", o.id},
                                    {"cases", o.cases},
                                    {"failures", o.failures},
                                    {"as_expected", o.as_expected}});
        out["outcomes"] = outcomes;
        os << out.dump(2) << "\n";
    } else {
        for (const auto& rep : summary.reports) {
            os << rep.triple_id << " " << rep.params.to_string() << " order=" << rep.group_order
               << (rep.pass ? " pass" : " FAIL") << "\n";
            if (!rep.pass || format == "text-full") {
                for (const auto& row : rep.rows)
                    os << "  d=" << row.d << " fixed=" << row.fixed.str() << " eval="
                       << (row.integral ? row.eval.str() : std::string("non-integral"))
                       << (row.ok ? "" : "  <- mismatch") << "\n";
            }
        }
        for (const auto& o : summary.outcomes)
            os << o.id << ": " << o.cases << " cases, " << o.failures << " failures"
               << (o.as_expected ? " (as expected)" : " (UNEXPECTED)") << "\n";
    }
    if (strict && !summary.all_ok) return 1;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Catalan-object enumeration and cyclic sieving verification"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    std::string format = "text";
    std::string outPath;
    int threads = default_thread_count();
    app.add_option("--format", format, "output format: text|json|csv")->capture_default_str();
    app.add_option("--out", outPath, "write output to a file instead of stdout");
    app.add_option("--threads", threads, "worker pool size")->capture_default_str();

    // poly
    auto* polyCmd = app.add_subcommand("poly", "print a named polynomial");
    std::string polyId;
    polyCmd->add_option("id", polyId, "polynomial id, e.g. CAT, NAR, TRI_EAR")->required();
    ParamFlags polyParams;
    polyParams.attach(polyCmd);

    // enumerate
    auto* enumCmd = app.add_subcommand("enumerate", "stream the objects of a family");
    std::string enumFamily;
    enumCmd->add_option("family", enumFamily, "family id, e.g. NCM, TRI, OI")->required();
    ParamFlags enumParams;
    enumParams.attach(enumCmd);

    // stat
    auto* statCmd = app.add_subcommand("stat", "print a statistic distribution");
    std::string statFamily, statName;
    long statShift = 0;
    statCmd->add_option("family", statFamily)->required();
    statCmd->add_option("stat", statName)->required();
    statCmd->add_option("--shift", statShift, "add this to every exponent");
    ParamFlags statParams;
    statParams.attach(statCmd);

    // biject
    auto* bijCmd = app.add_subcommand("biject", "apply a bijection to a JSON object on stdin");
    std::string bijId;
    bool bijInverse = false;
    bijCmd->add_option("id", bijId)->required();
    bijCmd->add_flag("--inverse", bijInverse, "apply the inverse map");
    ParamFlags bijParams;
    bijParams.attach(bijCmd);

    // orbits
    auto* orbCmd = app.add_subcommand("orbits", "print the orbit profile of an action");
    std::string orbFamily, orbAction;
    long orbOrder = 0;
    orbCmd->add_option("family", orbFamily)->required();
    orbCmd->add_option("action", orbAction)->required();
    orbCmd->add_option("--order", orbOrder, "declared group order")->required();
    ParamFlags orbParams;
    orbParams.attach(orbCmd);

    // verify
    auto* verCmd = app.add_subcommand("verify", "verify one registered triple");
    std::string verId, verRange;
    bool verFull = false, verNoStrict = false;
    verCmd->add_option("triple", verId, "triple id, e.g. T14")->required();
    verCmd->add_option("--n-range", verRange, "n range a..b (default: the shipped bounds)");
    verCmd->add_flag("--full-sweep", verFull, "check every exponent, not just divisors");
    verCmd->add_flag("--no-strict", verNoStrict, "always exit 0");

    // verify-all
    auto* allCmd = app.add_subcommand("verify-all", "verify every registered triple");
    long allMaxN = 1 << 20;
    bool allFull = false, allNoStrict = false;
    allCmd->add_option("--max-n", allMaxN, "cap n across all triples");
    allCmd->add_flag("--full-sweep", allFull, "check every exponent, not just divisors");
    allCmd->add_flag("--no-strict", allNoStrict, "always exit 0");

    // list
    auto* listCmd = app.add_subcommand("list", "list registered triples and bounds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2; // usage errors exit 2
    }

    std::ofstream file;
    std::ostream& os = open_sink(file, outPath);

    try {
        if (*polyCmd) {
            IntPoly f = named_polynomial(polyId, polyParams.poly());
            if (format == "json") {
                os << json{{"schema", 1}, {"id", polyId}, {"coeffs", poly_to_json(f)}}.dump()
                   << "\n";
            } else {
                os << f.to_string() << "\n";
            }
            return 0;
        }
        if (*enumCmd) {
            FamilySpec spec{family_from_name(enumFamily), enumParams.family()};
            for (const auto& x : enumerate(spec)) os << object_to_json(x).dump() << "\n";
            return 0;
        }
        if (*statCmd) {
            FamilySpec spec{family_from_name(statFamily), statParams.family()};
            StatId stat = stat_from_name(statName);
            IntPoly f = distribution(spec, stat, statShift);
            if (format == "json") os << distribution_to_json(spec, stat, statShift, f).dump() << "\n";
            else os << f.to_string() << "\n";
            return 0;
        }
        if (*bijCmd) {
            json in;
            std::cin >> in;
            CombObject x = object_from_json(in);
            if (!validate(x)) {
                std::cerr << "error: input object fails its family invariants\n";
                return 2;
            }
            BijectionId id = bijection_from_name(bijId);
            CombObject y = bijInverse ? inverse_bijection(id, bijParams.family(), x)
                                      : apply_bijection(id, bijParams.family(), x);
            os << object_to_json(y).dump() << "\n";
            return 0;
        }
        if (*orbCmd) {
            FamilySpec spec{family_from_name(orbFamily), orbParams.family()};
            ActionSpec a{action_from_name(orbAction), orbOrder};
            auto profile = orbit_profile(a, spec);
            std::map<long, long> bydSize;
            for (long s : profile) bydSize[s] += 1;
            if (format == "json") {
                json sizes = json::array();
                for (long s : profile) sizes.push_back(s);
                os << json{{"schema", 1}, {"orbit_sizes", sizes}}.dump() << "\n";
            } else {
                for (auto& [size, count] : bydSize) os << count << " orbit(s) of size " << size << "\n";
            }
            return 0;
        }
        if (*verCmd) {
            const CSPTriple& t = triple_by_id(verId);
            std::vector<TripleParams> params;
            if (verRange.empty()) {
                params = t.domain(t.default_max_n);
            } else {
                auto [lo, hi] = parse_range(verRange);
                for (const auto& p : t.domain(hi))
                    if (p.n >= lo) params.push_back(p);
            }
            RunSummary summary;
            TripleOutcome outcome;
            outcome.id = t.id;
            outcome.expect = t.expect;
            for (const auto& p : params) {
                auto rep = verify_triple(t, p, verFull);
                ++outcome.cases;
                if (!rep.pass) ++outcome.failures;
                summary.reports.push_back(std::move(rep));
            }
            switch (t.expect) {
            case Expectation::Pass: outcome.as_expected = outcome.failures == 0; break;
            case Expectation::FailThis: outcome.as_expected = outcome.failures == outcome.cases; break;
            case Expectation::FailSome: outcome.as_expected = outcome.failures > 0; break;
            }
            summary.all_ok = outcome.as_expected;
            summary.outcomes.push_back(outcome);
            return emit_reports(summary, format, os, !verNoStrict);
        }
        if (*allCmd) {
            auto summary = run_verification(all_triple_ids(), allMaxN, threads, allFull);
            return emit_reports(summary, format, os, !allNoStrict);
        }
        if (*listCmd) {
            for (const auto& t : csp_registry()) {
                os << t.id << "  (default n <= " << t.default_max_n
                   << (t.expect == Expectation::Pass ? "" : ", expected to fail") << ")  "
                   << t.summary << "\n";
            }
            return 0;
        }
    } catch (const CLI::Error& err) {
        return app.exit(err);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
