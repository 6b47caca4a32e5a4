#include "sgdim/suites.hpp"

#include <fstream>
#include <sstream>

#include "sgdim/error.hpp"
#include "sgdim/invariants.hpp"
#include "sgdim/koszul.hpp"
#include "sgdim/parse.hpp"
#include "sgdim/report.hpp"
#include "sgdim/rng.hpp"

namespace sgdim {

namespace {

void note_failure(std::vector<std::string>& notes, int& counter, const std::string& msg) {
    ++counter;
    if (notes.size() < 40) notes.push_back(msg);
}

} // namespace

// ======== oracle-style random suite ========

nlohmann::json OracleSuiteResult::to_json() const {
    nlohmann::json j;
    j["suite"] = "oracle-random";
    j["rings"] = rings;
    j["ideals"] = ideals;
    j["reduction_runs"] = reduction_runs;
    j["value_failures"] = value_failures;
    j["chain_failures"] = chain_failures;
    j["ok"] = ok();
    j["notes"] = nlohmann::json(notes);
    return j;
}

OracleSuiteResult suite_oracle_random(std::uint64_t seed) {
    OracleSuiteResult res;
    Rng rng(seed);
    const CoefficientField f = CoefficientField::rationals();
    const Schedule sched = default_schedule();

    auto var = [&](unsigned n, unsigned i) { return Polynomial::variable(f, n, i); };
    auto pow = [&](const Polynomial& p, unsigned e) {
        Polynomial acc = Polynomial::constant(f, p.nvars(), Coeff::one(f));
        for (unsigned k = 0; k < e; ++k) acc = acc * p;
        return acc;
    };

    struct RingCase {
        RingPresentation P;
        std::string label;
    };
    std::vector<RingCase> rings;

    // two artinian complete intersections in two variables
    for (int k = 0; k < 2; ++k) {
        unsigned a = 2 + unsigned(rng.below(2)); // 2..3
        unsigned b = 2 + unsigned(rng.below(2));
        unsigned g = 2 + unsigned(rng.below(2));
        long c = rng.range(1, 9);
        RingPresentation P;
        P.field = f;
        P.nvars = 2;
        P.relations = {pow(var(2, 0), a) + pow(var(2, 1), b).scaled(Coeff::of_int(f, c)),
                       pow(var(2, 1), g)};
        P.complete_intersection = true;
        rings.push_back({P, "artinian#" + std::to_string(k)});
    }
    // three one-dimensional hypersurface curves
    for (int k = 0; k < 3; ++k) {
        unsigned a = 2 + unsigned(rng.below(3)); // 2..4
        unsigned b = a + unsigned(rng.below(2)); // a..a+1, keeps e small
        long c = rng.range(1, 9);
        RingPresentation P;
        P.field = f;
        P.nvars = 2;
        P.relations = {pow(var(2, 0), a) + pow(var(2, 1), b).scaled(Coeff::of_int(f, c))};
        P.complete_intersection = true;
        rings.push_back({P, "hypersurface#" + std::to_string(k)});
    }

    for (const auto& rc : rings) {
        ++res.rings;
        const RingPresentation& P = rc.P;
        const int d = P.dim();
        AlgebraCache cache(P.field, P.nvars, P.relations);

        for (int ideal_idx = 0; ideal_idx < 5; ++ideal_idx) {
            ++res.ideals;
            unsigned i = 1 + unsigned(rng.below(3));
            unsigned j = 1 + unsigned(rng.below(3));
            unsigned k = 1 + unsigned(rng.below(3));
            long c = rng.range(1, 9);
            std::vector<Polynomial> gens = {
                pow(var(2, 0), i) + pow(var(2, 1), j).scaled(Coeff::of_int(f, c)),
                pow(var(2, 1), k)};
            std::string label = rc.label + " ideal#" + std::to_string(ideal_idx);

            long e_h = -1;
            try {
                e_h = multiplicity_hilbert(P, gens, d + 2, cache, sched).e;
            } catch (const sg_error& err) {
                note_failure(res.notes, res.value_failures,
                             label + ": Hilbert route failed: " + err.what());
                continue;
            }

            for (int sv = 0; sv < 5; ++sv) {
                ++res.reduction_runs;
                std::uint64_t rseed = rng.next();
                try {
                    ReductionMultiplicity red =
                        multiplicity_reduction(P, gens, rseed, cache, sched);
                    if (red.e != e_h)
                        note_failure(res.notes, res.value_failures,
                                     label + ": routes disagree, reduction " +
                                         std::to_string(red.e) + " vs Hilbert " +
                                         std::to_string(e_h));
                    if (red.nu_q != d)
                        note_failure(res.notes, res.chain_failures,
                                     label + ": nu(Q) = " + std::to_string(red.nu_q) +
                                         " but dim = " + std::to_string(d));
                    if (red.ll_q > red.len_q)
                        note_failure(res.notes, res.chain_failures,
                                     label + ": ll(R/Q) exceeds l(R/Q)");
                    if (red.len_q != red.e)
                        note_failure(res.notes, res.chain_failures,
                                     label + ": l(R/Q) differs from e");
                } catch (const sg_error& err) {
                    note_failure(res.notes, res.value_failures,
                                 label + ": reduction route failed: " + err.what());
                }
            }
        }
    }
    return res;
}

// ======== randomized Koszul suite ========

nlohmann::json KoszulSuiteResult::to_json() const {
    nlohmann::json j;
    j["suite"] = "koszul-random";
    j["cases"] = cases;
    j["checks"] = checks;
    j["failures"] = failures;
    j["ok"] = ok();
    j["notes"] = nlohmann::json(notes);
    return j;
}

namespace {

Polynomial suite_random_poly(Rng& rng, const CoefficientField& f, unsigned nvars,
                             unsigned mindeg, unsigned maxdeg, unsigned maxterms) {
    auto mons = monomials_below(nvars, maxdeg + 1);
    std::vector<Monomial> eligible;
    for (const auto& m : mons)
        if (m.deg() >= mindeg) eligible.push_back(m);
    Polynomial p = Polynomial::zero(f, nvars);
    unsigned terms = 1 + unsigned(rng.below(maxterms));
    for (unsigned t = 0; t < terms && !eligible.empty(); ++t) {
        const Monomial& mon = eligible[rng.below(eligible.size())];
        Coeff c = f.is_rational()
                      ? Coeff::of_int(f, rng.range(1, 4) * (rng.below(2) ? 1 : -1))
                      : Coeff::of_int(f, 1 + long(rng.below(f.p - 1)));
        p.add_term(mon, c);
    }
    return p;
}

} // namespace

KoszulSuiteResult suite_koszul_random(std::uint64_t seed, int cases) {
    KoszulSuiteResult res;
    Rng rng(seed);

    for (int case_idx = 0; case_idx < cases; ++case_idx) {
        const CoefficientField f = case_idx % 4 == 3
                                       ? CoefficientField::prime(case_idx % 8 == 7 ? 7 : 5)
                                       : CoefficientField::rationals();
        const unsigned n = 1 + unsigned(rng.below(3));
        std::string label = "case#" + std::to_string(case_idx);
        auto flunk = [&](const std::string& what) {
            note_failure(res.notes, res.failures, label + ": " + what);
        };

        try {
            // artinian model: x_i^{a_i} with small exponents, sometimes an
            // extra relation of order >= 2
            std::vector<Polynomial> rels;
            for (unsigned i = 0; i < n; ++i) {
                unsigned a = n == 3 ? 2 : 2 + unsigned(rng.below(n == 1 ? 3 : 2));
                Polynomial xi = Polynomial::variable(f, n, i);
                Polynomial acc = xi;
                for (unsigned k = 1; k < a; ++k) acc = acc * xi;
                rels.push_back(acc);
            }
            if (rng.below(3) == 0) rels.push_back(suite_random_poly(rng, f, n, 2, 3, 2));

            AlgebraCache cache(f, n, rels);
            AlgebraPtr T;
            for (int N : {6, 8}) {
                AlgebraPtr cand = cache.at(N);
                if (cand->nilpotency().certified) {
                    T = cand;
                    break;
                }
            }
            ++res.cases;
            ++res.checks;
            if (!T) {
                flunk("designed artinian model failed to certify");
                continue;
            }

            // module: free, cyclic, or a small cokernel
            ModulePresentation M;
            for (int attempt = 0;; ++attempt) {
                std::uint64_t kind = rng.below(3);
                if (kind == 0) {
                    M = ModulePresentation::free_module(T, 1);
                } else if (kind == 1) {
                    std::vector<Polynomial> gens;
                    unsigned count = 1 + unsigned(rng.below(2));
                    for (unsigned i = 0; i < count; ++i)
                        gens.push_back(suite_random_poly(rng, f, n, 1, 2, 2));
                    M = ModulePresentation::cyclic_quotient(T, gens);
                } else {
                    std::vector<std::vector<Polynomial>> pres(
                        2, std::vector<Polynomial>());
                    std::size_t q = 1 + rng.below(2);
                    for (std::size_t i = 0; i < 2; ++i)
                        for (std::size_t j = 0; j < q; ++j)
                            pres[i].push_back(suite_random_poly(rng, f, n, 1, 2, 2));
                    M = ModulePresentation::cokernel(T, pres);
                }
                if (M.dim >= 1 && M.dim <= 12) break;
                if (attempt >= 5) {
                    std::vector<Polynomial> vars;
                    for (unsigned i = 0; i < n; ++i)
                        vars.push_back(Polynomial::variable(f, n, i));
                    M = ModulePresentation::cyclic_quotient(T, vars);
                    break;
                }
            }
            ++res.checks;
            M.validate();

            // sequence: a power of every variable, sometimes one extra
            std::vector<Polynomial> seq;
            for (unsigned i = 0; i < n; ++i) {
                unsigned b = 1 + unsigned(rng.below(2));
                Polynomial xi = Polynomial::variable(f, n, i);
                Polynomial acc = xi;
                for (unsigned k = 1; k < b; ++k) acc = acc * xi;
                seq.push_back(acc);
            }
            if (rng.below(3) == 0) seq.push_back(suite_random_poly(rng, f, n, 1, 2, 2));
            const int s = int(seq.size());

            // koszul_complex checks d^2 = 0 internally
            FiniteComplex K = koszul_complex(seq, M);
            ++res.checks;
            Homology H = homology(K);

            ++res.checks;
            long chi_terms = 0;
            for (std::size_t i = 0; i < K.dims.size(); ++i) {
                int deg = K.lo + int(i);
                chi_terms += (deg % 2 == 0) ? long(K.dims[i]) : -long(K.dims[i]);
            }
            if (chi_terms != 0 || H.euler_char() != 0)
                flunk("Euler characteristic is nonzero");

            ++res.checks;
            bool ann = true;
            for (const auto& g : seq) ann = ann && annihilates_homology(K, H, M, g);
            if (!ann) flunk("sequence ideal does not annihilate homology");

            ++res.checks;
            int t = depth_via_koszul(M);
            int lo_expected = t - s;
            bool range_ok = H.h_at(0) > 0 && H.h_at(lo_expected) > 0;
            for (int deg = K.lo; deg < lo_expected; ++deg)
                range_ok = range_ok && H.h_at(deg) == 0;
            if (!range_ok) flunk("homology range disagrees with depth");

            ++res.checks;
            TruncationTower tower = truncate_complex(K);
            if (!tower.all_verified()) {
                std::string det;
                for (const auto& st : tower.steps)
                    if (!st.verified())
                        det += " [deg " + std::to_string(st.degree) +
                               " ses=" + std::to_string(st.ses_exact) +
                               " chain=" + std::to_string(st.chain_maps_ok) +
                               " hom=" + std::to_string(st.homology_match) + "]";
                if (!tower.final_acyclic) det += " [not acyclic at the end]";
                flunk("truncation tower failed verification" + det);
            }
            if (int(tower.steps.size()) != 0 - lo_expected + 1)
                flunk("truncation step count differs from the homology range");
        } catch (const sg_error& err) {
            flunk(std::string("exception: ") + err.what());
        }
    }
    return res;
}

// ======== corpus suite ========

nlohmann::json CorpusSuiteResult::to_json() const {
    nlohmann::json j;
    j["suite"] = "ade-corpus";
    j["entries"] = entries;
    j["failures"] = failures;
    j["ok"] = ok();
    j["notes"] = nlohmann::json(notes);
    return j;
}

std::vector<std::string> corpus_names() {
    return {"a1", "a2", "a3", "a4", "a5", "d4", "d5", "d6", "e6", "e7", "e8"};
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::resource, "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string corpus_report_string(const std::string& doc_path) {
    InputDocument doc = parse_document(read_text_file(doc_path));
    BoundsOptions opt;
    if (doc.schedule) opt.schedule = *doc.schedule;
    if (doc.seed) opt.seed = *doc.seed;
    if (doc.n_max) opt.n_max = *doc.n_max;
    BoundsReport R = compute_bounds(doc.presentation(), opt);
    return bounds_report_json(R, doc, opt).dump(2) + "\n";
}

CorpusSuiteResult suite_corpus(const std::string& corpus_dir, bool check_golden) {
    CorpusSuiteResult res;
    for (const auto& name : corpus_names()) {
        ++res.entries;
        std::string doc_path = corpus_dir + "/" + name + ".sgd";
        try {
            std::string got = corpus_report_string(doc_path);
            if (check_golden) {
                std::string want = read_text_file(corpus_dir + "/golden/" + name + ".json");
                if (got != want)
                    note_failure(res.notes, res.failures,
                                 name + ": report differs from the golden file");
            }
        } catch (const sg_error& err) {
            note_failure(res.notes, res.failures, name + ": " + err.what());
        }
    }
    return res;
}

} // namespace sgdim
