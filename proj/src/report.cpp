#include "sgdim/report.hpp"

#include <sstream>

#include "sgdim/error.hpp"

namespace sgdim {

namespace {

json poly_list(const std::vector<Polynomial>& ps, const std::vector<std::string>& names) {
    json a = json::array();
    for (const auto& p : ps) a.push_back(p.str(names));
    return a;
}

json schedule_json(const Schedule& s) {
    json a = json::array();
    for (int v : s) a.push_back(v);
    return a;
}

const char* status_name(BoundsReport::status st) {
    switch (st) {
    case BoundsReport::status::ok: return "ok";
    case BoundsReport::status::regular: return "regular";
    default: return "not_certified_isolated";
    }
}

} // namespace

json bounds_report_json(const BoundsReport& R, const InputDocument& doc,
                        const BoundsOptions& opt) {
    json j;
    j["toolkit"] = toolkit_version;
    j["format"] = 1;
    j["field"] = doc.field.name();
    j["vars"] = json(doc.vars);
    j["relations"] = poly_list(doc.relations, doc.vars);
    j["d"] = R.d;
    j["h"] = R.h;
    j["status"] = status_name(R.st);
    j["is_regular"] = R.st == BoundsReport::status::regular;
    j["schedule"] = schedule_json(opt.schedule);
    j["seed"] = opt.seed;
    j["jacobian_gens"] = poly_list(R.jacobian_gens, doc.vars);

    json hyp;
    hyp["hypersurface"] = R.hypersurface;
    hyp["complete_intersection"] = R.complete_intersection;
    hyp["k_infinite"] = R.k_infinite;
    hyp["char_zero"] = R.char_zero;
    hyp["positive_char_caveat"] = !R.char_zero;
    j["hypotheses"] = hyp;

    if (R.st == BoundsReport::status::not_certified_isolated) {
        j["note"] = "isolated singularity not certified within the schedule";
        return j;
    }

    json certs;
    certs["isolated"] = json{{"N", R.iso_N}, {"L", R.iso_L}};
    if (R.st == BoundsReport::status::regular) {
        j["certificates"] = certs;
        j["bound_main"] = -1;
        j["bound_mult"] = -1;
        return j;
    }

    j["nu"] = R.nu;
    j["ll"] = R.ll;
    j["e"] = R.e;
    certs["ll"] = json{{"N", R.ll_N}, {"L", R.ll}};
    certs["nu"] = json{{"N", R.ll_N}};
    if (R.reduction) {
        const auto& red = *R.reduction;
        j["e_reduction"] = red.e;
        j["q_gens"] = poly_list(red.q_gens, doc.vars);
        certs["e_reduction"] = json{{"N", red.N},     {"L", red.L},
                                    {"r", red.r},     {"seed", red.seed},
                                    {"redraws", red.redraws}, {"nu_q", red.nu_q},
                                    {"ll_q", red.ll_q}};
    }
    if (R.hilbert) {
        const auto& hil = *R.hilbert;
        j["e_hilbert"] = hil.e;
        json lengths = json::array();
        for (long v : hil.lengths) lengths.push_back(v);
        json orders = json::array();
        for (int v : hil.orders) orders.push_back(v);
        certs["e_hilbert"] = json{{"n_max", hil.n_max},
                                  {"lengths", lengths},
                                  {"orders", orders},
                                  {"retried", hil.retried}};
    }
    j["certificates"] = certs;
    j["bound_main"] = R.bound_main;
    j["bound_mult"] = R.bound_mult;
    if (R.bound_hyp) j["bound_hyp"] = *R.bound_hyp;
    return j;
}

std::string bounds_report_table(const BoundsReport& R, const InputDocument& doc,
                                const BoundsOptions& opt) {
    std::ostringstream os;
    auto row = [&](const std::string& k, const std::string& v) {
        os << "  " << k;
        for (std::size_t i = k.size(); i < 22; ++i) os << ' ';
        os << v << "\n";
    };
    os << "ring k[" << [&] {
        std::string s;
        for (std::size_t i = 0; i < doc.vars.size(); ++i)
            s += (i ? "," : "") + doc.vars[i];
        return s;
    }() << "] / (";
    for (std::size_t i = 0; i < doc.relations.size(); ++i)
        os << (i ? ", " : "") << doc.relations[i].str(doc.vars);
    os << ")  over " << doc.field.name() << "\n";
    row("status", status_name(R.st));
    row("dim", std::to_string(R.d));
    row("height", std::to_string(R.h));
    if (R.st == BoundsReport::status::not_certified_isolated) {
        row("note", "isolated singularity not certified within the schedule");
        return os.str();
    }
    row("isolated cert", "N=" + std::to_string(R.iso_N) + " L=" + std::to_string(R.iso_L));
    if (R.st == BoundsReport::status::regular) {
        row("note", "Jacobian ideal is the whole ring: regular point");
        return os.str();
    }
    row("nu(J)", std::to_string(R.nu));
    row("ll(R/J)", std::to_string(R.ll));
    row("e(J)", std::to_string(R.e));
    if (R.reduction)
        row("e via reduction", std::to_string(R.reduction->e) + "  (r=" +
                                   std::to_string(R.reduction->r) + ", N=" +
                                   std::to_string(R.reduction->N) + ", seed=" +
                                   std::to_string(R.reduction->seed) + ")");
    if (R.hilbert)
        row("e via Hilbert", std::to_string(R.hilbert->e) + "  (n_max=" +
                                 std::to_string(R.hilbert->n_max) + ")");
    row("bound (nu-d+1)*ll-1", std::to_string(R.bound_main));
    row("bound e-1", std::to_string(R.bound_mult));
    if (R.bound_hyp) row("bound 2*ll-1", std::to_string(*R.bound_hyp));
    if (!R.char_zero) row("caveat", "positive characteristic: Jacobian criterion caveat");
    (void)opt;
    return os.str();
}

// ======== Koszul lab ========

KoszulRun run_koszul(const InputDocument& doc, const Schedule& schedule) {
    RingPresentation P = doc.presentation();
    P.validate();
    AlgebraCache cache(P.field, P.nvars, P.relations);
    AlgebraPtr T;
    for (int N : schedule) {
        AlgebraPtr cand = cache.at(N);
        if (cand->nilpotency().certified) {
            T = cand;
            break;
        }
    }
    if (!T)
        fail(errc::inconclusive,
             "presentation not certified artinian within the schedule; the lab needs a "
             "finite model");

    if (!doc.module_rows.empty() && !doc.module_rows.front().empty()) {
        std::size_t cols = doc.module_rows.front().size();
        if (cols * T->dim() > 4096)
            fail(errc::resource,
                 "module model would exceed 4096 dimensions; shrink the presentation "
                 "or the truncation order");
    }
    ModulePresentation M = doc.module_rows.empty()
                               ? ModulePresentation::free_module(T)
                               : ModulePresentation::cokernel(T, doc.module_rows);
    if (M.dim == 0) fail(errc::invalid_presentation, "module presentation is the zero module");
    if (M.dim > 4096)
        fail(errc::resource, "module model exceeds 4096 dimensions; refusing to run");
    M.validate();

    // An absent sequence section defaults to the full variable sequence; a
    // present-but-empty one means the empty sequence (the complex is M alone).
    std::vector<Polynomial> seq = doc.sequence;
    if (!doc.has_sequence && seq.empty())
        for (unsigned i = 0; i < P.nvars; ++i)
            seq.push_back(Polynomial::variable(P.field, P.nvars, i));

    KoszulRun run;
    run.module_dim = M.dim;
    run.sequence_size = seq.size();
    run.complex = koszul_complex(seq, M);
    run.H = homology(run.complex);
    run.depth = depth_via_koszul(M);
    run.annihilation = true;
    for (const auto& g : seq)
        run.annihilation = run.annihilation && annihilates_homology(run.complex, run.H, M, g);
    run.tower = truncate_complex(run.complex);
    return run;
}

json koszul_report_json(const KoszulRun& run, const InputDocument& doc) {
    json j;
    j["toolkit"] = toolkit_version;
    j["format"] = 1;
    j["field"] = doc.field.name();
    j["vars"] = json(doc.vars);
    j["relations"] = poly_list(doc.relations, doc.vars);
    j["module_dim"] = run.module_dim;
    j["sequence_size"] = run.sequence_size;

    json terms = json::array();
    for (std::size_t i = 0; i < run.complex.dims.size(); ++i)
        terms.push_back(json::array({run.complex.lo + int(i), run.complex.dims[i]}));
    j["complex"] = terms;

    json hom = json::array();
    long chi_terms = 0;
    for (std::size_t i = 0; i < run.complex.dims.size(); ++i) {
        int deg = run.complex.lo + int(i);
        chi_terms += (deg % 2 == 0) ? long(run.complex.dims[i]) : -long(run.complex.dims[i]);
        hom.push_back(json::array({deg, run.H.h_dims[i]}));
    }
    j["homology"] = hom;
    j["euler_char_terms"] = chi_terms;
    j["euler_char_homology"] = run.H.euler_char();
    j["depth"] = run.depth;
    j["annihilation"] = run.annihilation;

    json steps = json::array();
    for (const auto& s : run.tower.steps)
        steps.push_back(json{{"degree", s.degree},
                             {"h_dim", s.h_dim},
                             {"verified", s.verified()}});
    j["truncation"] = json{{"steps", steps},
                           {"count", run.tower.steps.size()},
                           {"final_acyclic", run.tower.final_acyclic},
                           {"all_verified", run.tower.all_verified()}};
    return j;
}

std::string koszul_report_table(const KoszulRun& run, const InputDocument& doc) {
    std::ostringstream os;
    os << "Koszul lab over " << doc.field.name() << ", module dim " << run.module_dim
       << ", sequence size " << run.sequence_size << "\n";
    os << "  degree  term  homology\n";
    for (std::size_t i = 0; i < run.complex.dims.size(); ++i) {
        int deg = run.complex.lo + int(i);
        os << "  " << deg << (deg >= 0 ? " " : "") << "      " << run.complex.dims[i]
           << "     " << run.H.h_dims[i] << "\n";
    }
    os << "  depth " << run.depth << ", annihilation "
       << (run.annihilation ? "verified" : "FAILED") << "\n";
    os << "  truncation tower: " << run.tower.steps.size() << " steps, "
       << (run.tower.all_verified() ? "all verified" : "VERIFICATION FAILED") << "\n";
    return os.str();
}

} // namespace sgdim
