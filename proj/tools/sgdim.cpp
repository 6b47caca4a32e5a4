// sgdim: exact singularity-bound toolkit, command-line front end.
//
// Verbs:
//   bounds <doc>   certify the presentation and report the dimension bounds
//   koszul <doc>   Koszul homology lab: homology, depth, annihilation, tower
//   verify         run a verification suite (--corpus selects which)
//
// Exit codes: 0 success (including certified-regular input), 2 parse or input
// error, 3 isolation not certified, 4 inconclusive within resource limits,
// 5 suite failure, 1 internal error.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "sgdim/error.hpp"
#include "sgdim/invariants.hpp"
#include "sgdim/parse.hpp"
#include "sgdim/report.hpp"
#include "sgdim/suites.hpp"

namespace {

using namespace sgdim;

int exit_code_for(const sg_error& e) {
    switch (e.code()) {
        case errc::parse:
        case errc::invalid_presentation:
        case errc::arity_mismatch:
        case errc::field_mismatch:
        case errc::unit_defining_ideal:
        case errc::index_range:
            return 2;
        case errc::not_isolated:
            return 3;
        case errc::inconclusive:
        case errc::resource:
            return 4;
        case errc::internal:
        default:
            return 1;
    }
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    try {
        return read_text_file(path);
    } catch (const sg_error& e) {
        // an unreadable document is an input error, not a resource limit
        fail(errc::parse, e.what());
    }
}

Schedule parse_schedule_flag(const std::string& text) {
    Schedule sched;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t at = text.find(',', start);
        std::string part =
            at == std::string::npos ? text.substr(start) : text.substr(start, at - start);
        std::size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(part, &pos);
        } catch (const std::exception&) {
            fail(errc::parse, "bad schedule entry '" + part + "'");
        }
        if (pos != part.size() || v < 2)
            fail(errc::parse, "schedule entries must be integers >= 2, got '" + part + "'");
        if (!sched.empty() && v <= sched.back())
            fail(errc::parse, "schedule must be strictly increasing");
        sched.push_back(int(v));
        if (at == std::string::npos) break;
        start = at + 1;
    }
    if (sched.empty()) fail(errc::parse, "schedule is empty");
    return sched;
}

struct Timer {
    bool enabled = false;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    ~Timer() {
        if (!enabled) return;
        auto dt = std::chrono::steady_clock::now() - t0;
        auto ms = std::chrono::duration_cast<std::chrono::microseconds>(dt).count();
        std::fprintf(stderr, "# timing: total %.3f ms\n", double(ms) / 1000.0);
    }
};

int cmd_bounds(const std::string& path, bool table, const std::string& schedule_flag,
               std::optional<std::uint64_t> seed_flag, std::optional<int> n_max_flag,
               const std::string& field_flag, bool no_hilbert, bool timings) {
    Timer timer;
    timer.enabled = timings;

    std::optional<CoefficientField> field_override;
    if (!field_flag.empty()) field_override = field_from_name(field_flag);
    InputDocument doc = parse_document(read_input(path), field_override);

    BoundsOptions opt;
    if (doc.schedule) opt.schedule = *doc.schedule;
    if (doc.seed) opt.seed = *doc.seed;
    if (doc.n_max) opt.n_max = *doc.n_max;
    if (!schedule_flag.empty()) opt.schedule = parse_schedule_flag(schedule_flag);
    if (seed_flag) opt.seed = *seed_flag;
    if (n_max_flag) opt.n_max = *n_max_flag;
    if (no_hilbert) opt.with_hilbert = false;

    BoundsReport R = compute_bounds(doc.presentation(), opt);
    if (table)
        std::cout << bounds_report_table(R, doc, opt);
    else
        std::cout << bounds_report_json(R, doc, opt).dump(2) << "\n";
    return R.st == BoundsReport::status::not_certified_isolated ? 3 : 0;
}

int cmd_koszul(const std::string& path, bool table, const std::string& schedule_flag,
               const std::string& field_flag, bool timings) {
    Timer timer;
    timer.enabled = timings;

    std::optional<CoefficientField> field_override;
    if (!field_flag.empty()) field_override = field_from_name(field_flag);
    InputDocument doc = parse_document(read_input(path), field_override);

    Schedule sched = default_schedule();
    if (doc.schedule) sched = *doc.schedule;
    if (!schedule_flag.empty()) sched = parse_schedule_flag(schedule_flag);

    KoszulRun run = run_koszul(doc, sched);
    if (table)
        std::cout << koszul_report_table(run, doc);
    else
        std::cout << koszul_report_json(run, doc).dump(2) << "\n";
    return 0;
}

int cmd_verify(const std::string& corpus, std::uint64_t seed, int cases,
               const std::string& corpus_dir, bool timings) {
    Timer timer;
    timer.enabled = timings;

    if (corpus.empty())
        fail(errc::parse, "verify needs a suite selector: --corpus "
                          "ade-curves|oracle-random|koszul-random|all");

    nlohmann::json out;
    bool ok = true;
    auto run_one = [&](const std::string& name) {
        if (name == "ade-curves") {
            CorpusSuiteResult r = suite_corpus(corpus_dir, true);
            ok = ok && r.ok();
            out["suites"].push_back(r.to_json());
        } else if (name == "oracle-random") {
            OracleSuiteResult r = suite_oracle_random(seed);
            ok = ok && r.ok();
            out["suites"].push_back(r.to_json());
        } else if (name == "koszul-random") {
            KoszulSuiteResult r = suite_koszul_random(seed, cases);
            ok = ok && r.ok();
            out["suites"].push_back(r.to_json());
        } else {
            fail(errc::parse, "unknown suite '" + name + "'; expected "
                              "ade-curves, oracle-random, koszul-random, or all");
        }
    };

    out["toolkit"] = toolkit_version;
    out["seed"] = seed;
    out["suites"] = nlohmann::json::array();
    if (corpus == "all") {
        run_one("ade-curves");
        run_one("oracle-random");
        run_one("koszul-random");
    } else {
        run_one(corpus);
    }
    out["ok"] = ok;
    std::cout << out.dump(2) << "\n";
    return ok ? 0 : 5;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact local invariants and singularity-category dimension bounds"};
    app.require_subcommand(1);
    std::string version_line = std::string(sgdim::toolkit_version);
    app.set_version_flag("--version", version_line);

    std::string doc_path;
    std::string schedule_flag;
    std::string field_flag;
    std::optional<std::uint64_t> seed_flag;
    std::optional<int> n_max_flag;
    bool json_flag = false, table_flag = false;
    bool no_hilbert = false, timings = false;

    CLI::App* bounds = app.add_subcommand("bounds", "certify and bound a presentation");
    bounds->add_option("doc", doc_path, "input document ('-' for stdin)")->required();
    bounds->add_flag("--json", json_flag, "JSON report (default)");
    bounds->add_flag("--table", table_flag, "human-readable table report");
    bounds->add_option("--schedule", schedule_flag, "truncation orders, e.g. 4,6,10");
    bounds->add_option("--seed", seed_flag, "seed for the reduction draw");
    bounds->add_option("--n-max", n_max_flag, "highest ideal power for the length table");
    bounds->add_option("--field", field_flag, "override the document field (QQ, Fp:5)");
    bounds->add_flag("--no-hilbert", no_hilbert, "skip the length-table cross-check");
    bounds->add_flag("--timings", timings, "print wall time to stderr");

    CLI::App* koszul = app.add_subcommand("koszul", "Koszul homology lab");
    koszul->add_option("doc", doc_path, "input document ('-' for stdin)")->required();
    koszul->add_flag("--json", json_flag, "JSON report (default)");
    koszul->add_flag("--table", table_flag, "human-readable table report");
    koszul->add_option("--schedule", schedule_flag, "truncation orders, e.g. 4,6,10");
    koszul->add_option("--field", field_flag, "override the document field (QQ, Fp:5)");
    koszul->add_flag("--timings", timings, "print wall time to stderr");

    std::string corpus_selector;
    std::string corpus_dir = "corpus";
    std::uint64_t verify_seed = 42;
    int verify_cases = 100;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--corpus", corpus_selector,
                       "suite: ade-curves, oracle-random, koszul-random, all");
    verify->add_option("--corpus-dir", corpus_dir, "directory with the ADE documents");
    verify->add_option("--seed", verify_seed, "suite seed");
    verify->add_option("--cases", verify_cases, "randomized case count")
        ->check(CLI::Range(1, 10000));
    verify->add_flag("--timings", timings, "print wall time to stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (table_flag && json_flag)
            sgdim::fail(sgdim::errc::parse, "--json and --table are mutually exclusive");
        if (bounds->parsed())
            return cmd_bounds(doc_path, table_flag, schedule_flag, seed_flag, n_max_flag,
                              field_flag, no_hilbert, timings);
        if (koszul->parsed())
            return cmd_koszul(doc_path, table_flag, schedule_flag, field_flag, timings);
        if (verify->parsed())
            return cmd_verify(corpus_selector, verify_seed, verify_cases, corpus_dir,
                              timings);
    } catch (const sgdim::sg_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
