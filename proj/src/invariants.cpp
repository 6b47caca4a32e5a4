#include "sgdim/invariants.hpp"

#include <algorithm>

#include "sgdim/error.hpp"
#include "sgdim/rng.hpp"

namespace sgdim {

void RingPresentation::validate() const {
    if (nvars == 0) fail(errc::invalid_presentation, "need at least one variable");
    for (const auto& g : relations) {
        check_same_field(g.field(), field, "relation");
        if (g.nvars() != nvars)
            fail(errc::arity_mismatch, "relation uses a different number of variables");
        if (g.is_zero())
            fail(errc::invalid_presentation, "zero relation in the presentation");
        if (!g.constant_term().is_zero())
            fail(errc::unit_defining_ideal,
                 "defining ideal contains a unit: relation has nonzero constant term");
    }
}

int RingPresentation::dim() const {
    validate();
    // A single accepted relation is nonzero with zero constant term, so its
    // height is exactly one: the hypersurface case never needs the flag.
    if (complete_intersection || relations.size() <= 1) {
        int d = int(nvars) - int(relations.size());
        if (d < 0)
            fail(errc::invalid_presentation,
                 "complete intersection with more relations than variables");
        if (declared_dim && *declared_dim != d)
            fail(errc::invalid_presentation,
                 "declared dimension disagrees with the complete intersection codimension");
        return d;
    }
    if (declared_dim) {
        if (*declared_dim < 0 || unsigned(*declared_dim) > nvars)
            fail(errc::invalid_presentation, "declared dimension out of range");
        return *declared_dim;
    }
    fail(errc::invalid_presentation,
         "dimension unknown: mark the presentation complete_intersection or declare dim");
}

unsigned RingPresentation::height() const { return nvars - unsigned(dim()); }

std::vector<Polynomial> jacobian_ideal(const RingPresentation& P) {
    unsigned h = P.height();
    if (h == 0) {
        // size-0 minors: the empty determinant is 1, so the ideal is the
        // whole ring and the singular locus is empty
        return {Polynomial::constant(P.field, P.nvars, Coeff::one(P.field))};
    }
    if (h > P.relations.size())
        fail(errc::invalid_presentation,
             "declared dimension needs more Jacobian height than relations can provide");
    return jacobian_minors(P.relations, h);
}

IsolatedCheck check_isolated(const RingPresentation& P, AlgebraCache& cache,
                             const Schedule& schedule) {
    auto minors = jacobian_ideal(P);
    IsolatedCheck out;
    for (int N : schedule) {
        IdealSpan sp = ideal_span(cache.at(N), minors);
        if (sp.contains_unit) {
            // 1 = j + h with h in m^N forces j to be a unit, so the Jacobian
            // ideal is the whole ring at any truncation order
            out.result = IsolatedCheck::outcome::regular;
            out.N = N;
            out.L = 0;
            return out;
        }
        if (sp.cert.certified) {
            out.result = IsolatedCheck::outcome::certified;
            out.N = N;
            out.L = *sp.cert.L;
            return out;
        }
    }
    out.result = IsolatedCheck::outcome::not_certified;
    out.N = schedule.empty() ? 0 : schedule.back();
    return out;
}

namespace {

Coeff random_combination_coeff(Rng& rng, const CoefficientField& f) {
    if (f.is_rational()) return Coeff::of_int(f, rng.range(1, 1000));
    return Coeff::of_int(f, long(rng.below(f.p)));
}

// rank A == rank B decides span equality here because B ⊆ A is automatic:
// every Q-generator is a combination of the I-generators.
bool spans_equal_nested(const IdealSpan& big, const IdealSpan& small) {
    return big.rank() == small.rank();
}

} // namespace

ReductionMultiplicity multiplicity_reduction(const RingPresentation& P,
                                             const std::vector<Polynomial>& gens,
                                             std::uint64_t seed,
                                             AlgebraCache& cache,
                                             const Schedule& schedule, int r_max) {
    P.validate();
    const int d = P.dim();
    if (gens.empty()) fail(errc::invalid_presentation, "multiplicity of the empty ideal");
    Rng rng(seed);
    const int max_redraws = 5;

    ReductionMultiplicity out;
    out.seed = seed;

    for (int attempt = 0; attempt <= max_redraws; ++attempt) {
        std::vector<Polynomial> q;
        for (int j = 0; j < d; ++j) {
            Polynomial c = Polynomial::zero(P.field, P.nvars);
            for (const auto& g : gens) c = c + g.scaled(random_combination_coeff(rng, P.field));
            q.push_back(std::move(c));
        }

        for (int N : schedule) {
            AlgebraPtr T = cache.at(N);
            IdealSpan spQ = ideal_span(T, q);
            if (!spQ.cert.certified) continue;

            bool verified = false;
            int r_found = -1;
            for (int r = 0; r <= r_max; ++r) {
                IdealSpan spA = ideal_span(T, power_products(gens, unsigned(r + 1), unsigned(N)));
                if (!spA.cert.certified) break; // I^{r+1} outgrew this order
                IdealSpan spB =
                    r == 0 ? spQ
                           : [&] {
                                 std::vector<Polynomial> prod;
                                 for (const auto& qg : q)
                                     for (const auto& pw :
                                          power_products(gens, unsigned(r), unsigned(N))) {
                                         Polynomial p = (qg * pw).truncated_below(unsigned(N));
                                         if (!p.is_zero()) prod.push_back(std::move(p));
                                     }
                                 return ideal_span(T, prod);
                             }();
                if (spans_equal_nested(spA, spB)) {
                    verified = true;
                    r_found = r;
                    break;
                }
            }
            if (!verified) continue;

            out.e = colength(spQ);
            out.r = r_found;
            out.N = N;
            out.L = *spQ.cert.L;
            out.q_gens = q;
            out.nu_q = min_num_gens(spQ);
            out.ll_q = loewy_length(spQ);
            out.len_q = out.e;
            return out;
        }
        out.redraws = attempt + 1;
    }
    fail(errc::inconclusive,
         "no reduction verified within the truncation schedule; widen the schedule or reseed");
}

long finite_difference(const std::vector<long>& v, int order, int base) {
    if (base < 0 || order < 0 || base + order >= int(v.size()))
        fail(errc::index_range, "finite difference window out of range");
    std::vector<long> w(v.begin() + base, v.begin() + base + order + 1);
    for (int k = 0; k < order; ++k)
        for (std::size_t i = 0; i + 1 < w.size() - std::size_t(k); ++i) w[i] = w[i + 1] - w[i];
    return w[0];
}

namespace {

std::pair<long, int> certified_power_length(
                                            const std::vector<Polynomial>& gens,
                                            unsigned power, AlgebraCache& cache,
                                            const Schedule& schedule) {
    for (int N : schedule) {
        AlgebraPtr T = cache.at(N);
        IdealSpan sp = ideal_span(T, power_products(gens, power, unsigned(N)));
        if (sp.cert.certified) return {colength(sp), N};
    }
    fail(errc::inconclusive, "power colength not certified within the truncation schedule");
}

} // namespace

HilbertMultiplicity multiplicity_hilbert(const RingPresentation& P,
                                         const std::vector<Polynomial>& gens,
                                         int n_max, AlgebraCache& cache,
                                         const Schedule& schedule) {
    P.validate();
    const int d = P.dim();
    if (gens.empty()) fail(errc::invalid_presentation, "multiplicity of the empty ideal");
    if (n_max < d + 2)
        fail(errc::index_range, "Hilbert window too small: need n_max >= dim + 2");

    HilbertMultiplicity H;
    H.n_max = n_max;
    auto extend_to = [&](int upto) {
        for (int t = int(H.lengths.size()); t <= upto; ++t) {
            auto [len, N] = certified_power_length(gens, unsigned(t + 1), cache, schedule);
            H.lengths.push_back(len);
            H.orders.push_back(N);
        }
    };
    extend_to(n_max);

    // the (d+1)-st difference of a degree-d polynomial vanishes; insist on
    // that before reading the leading coefficient off the last window
    if (finite_difference(H.lengths, d + 1, n_max - d - 1) != 0) {
        H.retried = true;
        H.n_max = n_max + 2;
        extend_to(H.n_max);
        if (finite_difference(H.lengths, d + 1, H.n_max - d - 1) != 0)
            fail(errc::inconclusive,
                 "length function is not yet polynomial in the sampled window; raise n_max");
    }
    H.e = finite_difference(H.lengths, d, H.n_max - d);
    if (H.e <= 0) fail(errc::inconclusive, "nonpositive leading difference; raise n_max");
    return H;
}

BoundsReport compute_bounds(const RingPresentation& P, const BoundsOptions& opt) {
    P.validate();
    BoundsReport R;
    R.d = P.dim();
    R.h = P.height();
    R.complete_intersection = P.complete_intersection;
    R.hypersurface = P.relations.size() == 1;
    R.k_infinite = P.field.is_rational();
    R.char_zero = R.k_infinite;
    R.jacobian_gens = jacobian_ideal(P);

    AlgebraCache cache(P.field, P.nvars, P.relations);
    IsolatedCheck iso = check_isolated(P, cache, opt.schedule);
    if (iso.result == IsolatedCheck::outcome::regular) {
        R.st = BoundsReport::status::regular;
        R.iso_N = iso.N;
        R.iso_L = iso.L;
        return R;
    }
    if (iso.result == IsolatedCheck::outcome::not_certified) {
        R.st = BoundsReport::status::not_certified_isolated;
        return R;
    }

    R.st = BoundsReport::status::ok;
    R.iso_N = iso.N;
    R.iso_L = iso.L;

    IdealSpan J = ideal_span(cache.at(iso.N), R.jacobian_gens);
    R.nu = min_num_gens(J);
    R.ll = loewy_length(J);
    R.ll_N = iso.N;

    if (opt.with_reduction) {
        R.reduction = multiplicity_reduction(P, R.jacobian_gens, opt.seed, cache, opt.schedule);
        R.e = R.reduction->e;
    }
    if (opt.with_hilbert) {
        R.hilbert = multiplicity_hilbert(P, R.jacobian_gens, opt.n_max.value_or(R.d + 2),
                                         cache, opt.schedule);
        if (R.e >= 0 && R.hilbert->e != R.e)
            fail(errc::internal, "multiplicity routes disagree; this is a bug");
        R.e = R.hilbert->e;
    }

    R.bound_main = (long(R.nu) - R.d + 1) * R.ll - 1;
    if (R.e >= 0) R.bound_mult = R.e - 1;
    if (R.hypersurface) R.bound_hyp = 2L * R.ll - 1;
    return R;
}

} // namespace sgdim
