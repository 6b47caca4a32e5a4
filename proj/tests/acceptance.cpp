// Acceptance gate: eight go/no-go checks over the shipped corpus and the
// randomized suites, one pass/fail line each. Exits nonzero if any fail.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "oracle.hpp"
#include "sgdim/error.hpp"
#include "sgdim/invariants.hpp"
#include "sgdim/koszul.hpp"
#include "sgdim/parse.hpp"
#include "sgdim/report.hpp"
#include "sgdim/suites.hpp"
#include "sgdim/trunc.hpp"

using namespace sgdim;

namespace {

int g_failures = 0;

void verdict(int n, const std::string& what, bool pass, const std::string& detail) {
    std::printf("criterion %d (%s): %s\n", n, what.c_str(), pass ? "PASS" : "FAIL");
    if (!pass) {
        ++g_failures;
        if (!detail.empty()) std::fprintf(stderr, "  criterion %d detail: %s\n", n, detail.c_str());
    }
}

oracle::TermPoly to_oracle(const Polynomial& p) {
    oracle::TermPoly out;
    for (const auto& [m, c] : p.terms()) out.emplace_back(m.exps(), c.rat());
    return out;
}

std::vector<oracle::TermPoly> to_oracle(const std::vector<Polynomial>& v) {
    std::vector<oracle::TermPoly> out;
    for (const auto& p : v) out.push_back(to_oracle(p));
    return out;
}

struct Entry {
    std::string name;
    InputDocument doc;
    BoundsOptions opt;
    BoundsReport rep;
};

struct CliRun {
    int exit_code = -1;
    std::string out;
};

CliRun run_cli(const std::string& cli, const std::string& args) {
    CliRun r;
    std::string cmd = "'" + cli + "' " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    int st = pclose(p);
    if (WIFEXITED(st)) r.exit_code = WEXITSTATUS(st);
    return r;
}

RingPresentation monomial_ci_ring(const std::vector<unsigned>& exps) {
    const CoefficientField f = CoefficientField::rationals();
    RingPresentation P;
    P.field = f;
    P.nvars = unsigned(exps.size());
    for (unsigned i = 0; i < exps.size(); ++i) {
        Polynomial xi = Polynomial::variable(f, P.nvars, i);
        Polynomial acc = xi;
        for (unsigned k = 1; k < exps[i]; ++k) acc = acc * xi;
        P.relations.push_back(acc);
    }
    P.complete_intersection = true;
    return P;
}

} // namespace

int main(int argc, char** argv) {
    std::string corpus_dir = "corpus";
    std::string cli_path;
    for (int i = 1; i + 1 < argc; i += 2) {
        std::string key = argv[i];
        if (key == "--corpus-dir") corpus_dir = argv[i + 1];
        else if (key == "--cli-path") cli_path = argv[i + 1];
    }

    // shared: run the whole corpus through the library once
    std::vector<Entry> entries;
    std::string load_err;
    try {
        for (const auto& name : corpus_names()) {
            Entry e;
            e.name = name;
            e.doc = parse_document(read_text_file(corpus_dir + "/" + name + ".sgd"));
            if (e.doc.schedule) e.opt.schedule = *e.doc.schedule;
            if (e.doc.seed) e.opt.seed = *e.doc.seed;
            if (e.doc.n_max) e.opt.n_max = *e.doc.n_max;
            e.rep = compute_bounds(e.doc.presentation(), e.opt);
            entries.push_back(std::move(e));
        }
    } catch (const sg_error& err) {
        load_err = err.what();
    }

    // 1. corpus exactness: closed-form A-family values, certified status,
    //    independent-oracle agreement, and byte-exact golden reports
    {
        std::string detail = load_err;
        bool pass = load_err.empty() && entries.size() == 11;
        for (std::size_t i = 0; pass && i < entries.size(); ++i) {
            const Entry& e = entries[i];
            auto fb = [&](const std::string& msg) {
                pass = false;
                detail = e.name + ": " + msg;
            };
            if (e.rep.st != BoundsReport::status::ok) {
                fb("status not ok");
                continue;
            }
            if (!e.rep.reduction || !e.rep.hilbert) {
                fb("missing a multiplicity certificate");
                continue;
            }
            if (e.rep.reduction->e != e.rep.hilbert->e) fb("multiplicity routes disagree");

            if (i < 5) { // A_k family, k = i+1
                long k = long(i) + 1;
                if (e.rep.nu != 2 || e.rep.ll != k || e.rep.e != k + 1 ||
                    e.rep.bound_main != 2 * k - 1 || e.rep.bound_mult != k ||
                    !e.rep.bound_hyp || *e.rep.bound_hyp != 2 * k - 1)
                    fb("A-family values drifted from the closed form");
            }

            // independent oracle at the certified order
            auto F = to_oracle(e.doc.relations);
            auto J = to_oracle(e.rep.jacobian_gens);
            int N = e.rep.iso_N;
            oracle::Basis B = oracle::make_basis(2, N);
            std::vector<oracle::TermPoly> FJ = F;
            FJ.insert(FJ.end(), J.begin(), J.end());
            oracle::span_ideal(B, FJ);
            if (oracle::least_contained_power(B) != int(e.rep.ll)) fb("oracle Loewy length differs");
            if (oracle::min_gens(2, N, F, J) != long(e.rep.nu)) fb("oracle generator count differs");
            if (i < 5) {
                oracle::HilbertResult h =
                    oracle::hilbert_e(2, F, J, e.rep.d, e.rep.hilbert->orders);
                if (!h.stabilized || h.e != e.rep.e) fb("oracle multiplicity differs");
                if (h.lengths != e.rep.hilbert->lengths) fb("oracle length table differs");
            }

            std::string got = corpus_report_string(corpus_dir + "/" + e.name + ".sgd");
            std::string want = read_text_file(corpus_dir + "/golden/" + e.name + ".json");
            if (got != want) fb("report differs from the reviewed golden file");
        }
        if (entries.size() != 11 && load_err.empty()) detail = "corpus incomplete";
        verdict(1, "corpus exactness against oracle and goldens", pass, detail);
    }

    // 2 and 3. randomized multiplicity agreement and the reduction chain
    {
        OracleSuiteResult r = suite_oracle_random(42);
        std::string notes;
        for (const auto& s : r.notes) notes += s + "; ";
        verdict(2, "two multiplicity routes agree on random ideals",
                r.rings == 5 && r.ideals == 25 && r.reduction_runs == 125 &&
                    r.value_failures == 0,
                notes);
        verdict(3, "reduction chain: nu(Q)=d and ll<=len=e", r.chain_failures == 0, notes);
    }

    // 4. hypersurface bound comparison on every corpus entry
    {
        bool pass = entries.size() == 11;
        std::string detail;
        for (const auto& e : entries) {
            if (!e.rep.bound_hyp) {
                pass = false;
                detail = e.name + ": no hypersurface bound";
            } else if (e.rep.bound_main > *e.rep.bound_hyp) {
                pass = false;
                detail = e.name + ": main bound exceeds the hypersurface bound";
            }
        }
        verdict(4, "main bound never exceeds the hypersurface bound", pass, detail);
    }

    // 5. randomized Koszul property suite
    {
        KoszulSuiteResult r = suite_koszul_random(42, 100);
        std::string notes;
        for (const auto& s : r.notes) notes += s + "; ";
        verdict(5, "koszul complex property suite", r.cases == 100 && r.failures == 0, notes);
    }

    // 6. stable-annihilation suite plus the factorization controls
    {
        bool pass = true;
        std::string detail;
        try {
            for (unsigned n = 2; n <= 6; ++n) {
                RingPresentation P = monomial_ci_ring({n});
                StableAnnihilationReport rep =
                    jacobian_stable_annihilation(P, 42, default_schedule(), 20);
                if (!rep.ok || rep.modules < 20) {
                    pass = false;
                    detail = "power ring n=" + std::to_string(n) + ": " +
                             (rep.failures.empty() ? "too few modules" : rep.failures[0]);
                }
            }
            {
                RingPresentation P = monomial_ci_ring({2, 2});
                StableAnnihilationReport rep =
                    jacobian_stable_annihilation(P, 42, default_schedule(), 20);
                if (!rep.ok || rep.modules < 20) {
                    pass = false;
                    detail = "two-variable ring: " +
                             (rep.failures.empty() ? std::string("too few modules")
                                                   : rep.failures[0]);
                }
            }
            // negative control: over k[x]/(x^4) no map Lambda/(x^2) -> Lambda
            // reaches multiplication by x, since Hom lands in (x^2)
            {
                const CoefficientField f = CoefficientField::rationals();
                AlgebraCache cache(f, 1, monomial_ci_ring({4}).relations);
                AlgebraPtr T = cache.at(6);
                Polynomial x = Polynomial::variable(f, 1, 0);
                ModulePresentation M = ModulePresentation::cyclic_quotient(T, {x * x});
                StablyZero sz = stably_zero(x, M);
                if (sz.zero) {
                    pass = false;
                    detail = "negative control factored unexpectedly";
                }
            }
            // over k[x]/(x^3) the same shape DOES factor: h(1) = x is a
            // valid witness; pin that as a regression
            {
                const CoefficientField f = CoefficientField::rationals();
                AlgebraCache cache(f, 1, monomial_ci_ring({3}).relations);
                AlgebraPtr T = cache.at(5);
                Polynomial x = Polynomial::variable(f, 1, 0);
                ModulePresentation M = ModulePresentation::cyclic_quotient(T, {x * x});
                StablyZero sz = stably_zero(x, M);
                if (!sz.zero) {
                    pass = false;
                    detail = "positive control failed to factor";
                }
            }
        } catch (const sg_error& err) {
            pass = false;
            detail = err.what();
        }
        verdict(6, "stable annihilation by the Jacobian ideal", pass, detail);
    }

    // 7. stability: recompute every certified number two orders deeper
    {
        bool pass = entries.size() == 11;
        std::string detail;
        try {
            for (const auto& e : entries) {
                auto fb = [&](const std::string& msg) {
                    pass = false;
                    detail = e.name + ": " + msg;
                };
                RingPresentation P = e.doc.presentation();
                AlgebraCache cache(P.field, P.nvars, P.relations);

                IdealSpan J2 = ideal_span(cache.at(e.rep.iso_N + 2), e.rep.jacobian_gens);
                if (!J2.cert.certified) {
                    fb("Jacobian span lost its certificate two orders deeper");
                    continue;
                }
                if (min_num_gens(J2) != e.rep.nu) fb("nu drifted");
                if (loewy_length(J2) != e.rep.ll) fb("ll drifted");

                ReductionMultiplicity red2 = multiplicity_reduction(
                    P, e.rep.jacobian_gens, e.opt.seed, cache, {e.rep.reduction->N + 2});
                if (red2.e != e.rep.reduction->e) fb("reduction multiplicity drifted");

                const auto& hil = *e.rep.hilbert;
                for (std::size_t t = 0; t < hil.orders.size(); ++t) {
                    int N2 = hil.orders[t] + 2;
                    IdealSpan sp = ideal_span(
                        cache.at(N2),
                        power_products(e.rep.jacobian_gens, unsigned(t) + 1, unsigned(N2)));
                    if (!sp.cert.certified || colength(sp) != hil.lengths[t])
                        fb("length table drifted at power " + std::to_string(t + 1));
                }
            }
        } catch (const sg_error& err) {
            pass = false;
            detail = err.what();
        }
        verdict(7, "certified values identical two truncation orders deeper", pass, detail);
    }

    // 8. determinism: three library passes and three CLI processes per entry,
    //    all byte-identical
    {
        bool pass = entries.size() == 11 && !cli_path.empty();
        std::string detail = cli_path.empty() ? "no --cli-path given" : "";
        try {
            for (const auto& e : entries) {
                if (!pass) break;
                std::string doc_path = corpus_dir + "/" + e.name + ".sgd";
                std::string first = corpus_report_string(doc_path);
                for (int k = 0; k < 2; ++k)
                    if (corpus_report_string(doc_path) != first) {
                        pass = false;
                        detail = e.name + ": library report not deterministic";
                    }
                for (int k = 0; k < 3 && pass; ++k) {
                    CliRun r = run_cli(cli_path, "bounds '" + doc_path + "'");
                    if (r.exit_code != 0) {
                        pass = false;
                        detail = e.name + ": CLI exit " + std::to_string(r.exit_code);
                    } else if (r.out != first) {
                        pass = false;
                        detail = e.name + ": CLI bytes differ from the library report";
                    }
                }
            }
        } catch (const sg_error& err) {
            pass = false;
            detail = err.what();
        }
        verdict(8, "byte-identical reports across repeated runs", pass, detail);
    }

    if (g_failures > 0) {
        std::printf("acceptance: %d criterion(s) failing\n", g_failures);
        return 1;
    }
    std::printf("acceptance: all criteria pass\n");
    return 0;
}
