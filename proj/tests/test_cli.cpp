#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

using json = nlohmann::json;

#ifndef SGDIM_CLI_PATH
#error "SGDIM_CLI_PATH must point at the built executable"
#endif
#ifndef SGDIM_CORPUS_DIR
#error "SGDIM_CORPUS_DIR must point at the corpus documents"
#endif

namespace {

struct Run {
    int exit_code = -1;
    std::string out;
};

Run sh(const std::string& tail) {
    Run r;
    std::string cmd = std::string("'") + SGDIM_CLI_PATH + "' " + tail + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    int st = pclose(p);
    if (WIFEXITED(st)) r.exit_code = WEXITSTATUS(st);
    return r;
}

std::string corpus(const std::string& name) {
    return std::string("'") + SGDIM_CORPUS_DIR + "/" + name + ".sgd'";
}

// drops a document next to the build tree and returns its quoted path
std::string temp_doc(const std::string& tag, const std::string& body) {
    std::string path = "cli_doc_" + tag + ".sgd";
    std::ofstream f(path);
    f << body;
    f.close();
    return "'" + path + "'";
}

const std::string cusp_doc = "format: 1\n"
                             "field: QQ\n"
                             "vars: x, y\n"
                             "relations:\n"
                             "  x^2 + y^3\n";

} // namespace

// ======== bounds subcommand ========

TEST_CASE("bounds on a corpus document") {
    Run r = sh("bounds " + corpus("a2"));
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["status"] == "ok");
    CHECK(j["nu"] == 2);
    CHECK(j["ll"] == 2);
    CHECK(j["e"] == 3);
    CHECK(j["bound_main"] == 3);
    CHECK(j["bound_mult"] == 2);
    CHECK(j["bound_hyp"] == 3);
    CHECK(j["field"] == "QQ");
    CHECK(j["e_reduction"] == j["e_hilbert"]);
    CHECK(j["certificates"]["isolated"]["L"] == 2);
}

TEST_CASE("repeated runs are byte-identical") {
    Run a = sh("bounds " + corpus("d4"));
    Run b = sh("bounds " + corpus("d4"));
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("table output is human-oriented") {
    Run r = sh("bounds --table " + corpus("a1"));
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find('{') == std::string::npos);
    CHECK(r.out.find("nu") != std::string::npos);
    CHECK(r.out.find("bound") != std::string::npos);
}

TEST_CASE("documents arrive on stdin with a dash") {
    std::string path = temp_doc("stdin", cusp_doc);
    Run r = sh("bounds - < " + path);
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["e"] == 3);
}

TEST_CASE("field override recomputes over the prime field") {
    Run r = sh("bounds --field F5 " + corpus("a2"));
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["field"] == "F5");
    CHECK(j["nu"] == 2);
    CHECK(j["e"] == 3);
    CHECK(j["hypotheses"]["k_infinite"] == false);
    // the long spelling parses too
    Run r2 = sh("bounds --field Fp:5 " + corpus("a2"));
    REQUIRE(r2.exit_code == 0);
    CHECK(r2.out == r.out);
}

TEST_CASE("regular input reports cleanly") {
    std::string path = temp_doc("regular", "format: 1\n"
                                           "field: QQ\n"
                                           "vars: x, y\n"
                                           "relations:\n"
                                           "  x\n");
    Run r = sh("bounds " + path);
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["status"] == "regular");
    CHECK(j["is_regular"] == true);
    CHECK_FALSE(j.contains("nu"));
}

// ======== exit-status contract ========

TEST_CASE("syntax errors exit 2") {
    std::string path = temp_doc("syntax", "format: 1\n"
                                          "field: QQ\n"
                                          "vars: x, y\n"
                                          "relations:\n"
                                          "  x^-1\n");
    CHECK(sh("bounds " + path).exit_code == 2);
    std::string bad_format = temp_doc("format", "format: 9\nfield: QQ\nvars: x\n");
    CHECK(sh("bounds " + bad_format).exit_code == 2);
    CHECK(sh("bounds missing_file_9321.sgd").exit_code == 2);
    CHECK(sh("bounds --schedule 9,4 " + corpus("a1")).exit_code == 2);
    CHECK(sh("bounds --no-such-flag " + corpus("a1")).exit_code == 2);
    CHECK(sh("").exit_code == 2); // a subcommand is required
}

TEST_CASE("non-isolated singular loci exit 3") {
    std::string path = temp_doc("line", "format: 1\n"
                                        "field: QQ\n"
                                        "vars: x, y\n"
                                        "relations:\n"
                                        "  x^2\n");
    Run r = sh("bounds " + path);
    CHECK(r.exit_code == 3);
    json j = json::parse(r.out);
    CHECK(j["status"] == "not_certified_isolated");
    CHECK_FALSE(j.contains("bound_main"));
}

TEST_CASE("oversized module models exit 4") {
    std::string row = "  x";
    for (int i = 1; i < 2049; ++i) row += ", x";
    std::string doc = "format: 1\n"
                      "field: QQ\n"
                      "vars: x\n"
                      "relations:\n"
                      "  x^2\n"
                      "module:\n" +
                      row + "\n";
    std::string path = temp_doc("huge", doc);
    CHECK(sh("koszul " + path).exit_code == 4);
}

TEST_CASE("version flag prints the toolkit stamp") {
    Run r = sh("--version");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("sgdim 1.0.0") != std::string::npos);
}

// ======== koszul subcommand ========

TEST_CASE("koszul lab on the double point") {
    std::string path = temp_doc("koszul1", "format: 1\n"
                                           "field: QQ\n"
                                           "vars: x\n"
                                           "relations:\n"
                                           "  x^2\n");
    Run r = sh("koszul " + path);
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["module_dim"] == 2);
    CHECK(j["sequence_size"] == 1); // defaults to all variables
    CHECK(j["annihilation"] == true);
    CHECK(j["euler_char_terms"] == 0);
    CHECK(j["euler_char_homology"] == 0);
    CHECK(j["homology"] == json::array({json::array({-1, 1}), json::array({0, 1})}));
    CHECK(j["truncation"]["all_verified"] == true);
    CHECK(j["truncation"]["final_acyclic"] == true);
    CHECK(j["truncation"]["count"] == 2);
}

TEST_CASE("an empty sequence section means the bare module") {
    std::string path = temp_doc("koszul2", "format: 1\n"
                                           "field: QQ\n"
                                           "vars: x\n"
                                           "relations:\n"
                                           "  x^2\n"
                                           "sequence:\n");
    Run r = sh("koszul " + path);
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["sequence_size"] == 0);
    CHECK(j["homology"] == json::array({json::array({0, 2})}));
}

TEST_CASE("presented modules feed the complex") {
    std::string path = temp_doc("koszul3", "format: 1\n"
                                           "field: QQ\n"
                                           "vars: x, y\n"
                                           "relations:\n"
                                           "  x^2\n"
                                           "  y^2\n"
                                           "module:\n"
                                           "  x\n"
                                           "  y\n"
                                           "sequence:\n"
                                           "  x\n"
                                           "  y\n");
    Run r = sh("koszul " + path);
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["module_dim"] == 5); // T^2 modulo the column (x, y)
    CHECK(j["annihilation"] == true);
    CHECK(j["truncation"]["all_verified"] == true);
}

// ======== verify subcommand ========

TEST_CASE("the corpus suite passes end to end") {
    Run r = sh(std::string("verify --corpus ade-curves --corpus-dir '") +
               SGDIM_CORPUS_DIR + "'");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["ok"] == true);
    REQUIRE(j["suites"].size() == 1);
    CHECK(j["suites"][0]["entries"] == 11);
    CHECK(j["suites"][0]["failures"] == 0);
}

TEST_CASE("small randomized verify runs pass") {
    Run r = sh("verify --corpus koszul-random --cases 5 --seed 7");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["ok"] == true);
    CHECK(j["suites"][0]["cases"] == 5);
}
