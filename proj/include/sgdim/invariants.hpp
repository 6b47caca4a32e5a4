#ifndef SGDIM_INVARIANTS_HPP
#define SGDIM_INVARIANTS_HPP

// The bound pipeline: presentation validation, Jacobian ideal, certified
// isolation check, Loewy length, minimal generator count, and Hilbert-Samuel
// multiplicity by two independent routes (superficial-element reduction and
// Hilbert-function finite differences).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgdim/poly.hpp"
#include "sgdim/trunc.hpp"

namespace sgdim {

struct RingPresentation {
    CoefficientField field = CoefficientField::rationals();
    unsigned nvars = 0;
    std::vector<Polynomial> relations;
    bool complete_intersection = false;
    std::optional<int> declared_dim;

    // Krull dimension: n - m for complete intersections, else the declared
    // value. Refuses to guess.
    int dim() const;
    // Expected height of the defining ideal, n - dim.
    unsigned height() const;
    void validate() const;
};

// h x h minors of the Jacobian matrix with h = height(F); together with F
// these cut out the singular locus.
std::vector<Polynomial> jacobian_ideal(const RingPresentation& P);

struct IsolatedCheck {
    enum class outcome { regular, certified, not_certified };
    outcome result = outcome::not_certified;
    int N = 0;  // order at which the decision happened
    int L = -1; // m^L inside the Jacobian span when certified
};

IsolatedCheck check_isolated(const RingPresentation& P, AlgebraCache& cache,
                             const Schedule& schedule);

struct ReductionMultiplicity {
    long e = -1;
    int r = -1;            // verified reduction number: I^{r+1} = Q I^r
    int N = 0;             // order carrying all certificates below
    int L = -1;            // m^L inside the span of Q
    std::uint64_t seed = 0;
    int redraws = 0;
    std::vector<Polynomial> q_gens;
    // invariants of the reduction itself, for the chain l l(R/Q) <= l(R/Q) = e
    int nu_q = -1;
    int ll_q = -1;
    long len_q = -1;
};

// e(I) as the colength of a reduction Q generated by d random combinations
// of the generators, verified via I^{r+1} = Q I^r. Throws errc::inconclusive
// when no draw verifies within the schedule.
ReductionMultiplicity multiplicity_reduction(const RingPresentation& P,
                                             const std::vector<Polynomial>& gens,
                                             std::uint64_t seed,
                                             AlgebraCache& cache,
                                             const Schedule& schedule,
                                             int r_max = 6);

struct HilbertMultiplicity {
    long e = -1;
    int n_max = 0;
    std::vector<long> lengths; // l(R/I^{t+1}) for t = 0..n_max
    std::vector<int> orders;   // truncation order certifying each length
    bool retried = false;      // needed one n_max extension
};

// e(I) = d! times the leading coefficient of t -> l(R/I^{t+1}), read off
// with finite differences once the (d+1)-st difference vanishes.
HilbertMultiplicity multiplicity_hilbert(const RingPresentation& P,
                                         const std::vector<Polynomial>& gens,
                                         int n_max, AlgebraCache& cache,
                                         const Schedule& schedule);

struct BoundsOptions {
    Schedule schedule = default_schedule();
    std::uint64_t seed = 42;
    std::optional<int> n_max; // Hilbert route window; default dim + 2
    bool with_hilbert = true;
    bool with_reduction = true;
};

struct BoundsReport {
    enum class status { ok, regular, not_certified_isolated };
    status st = status::not_certified_isolated;

    int d = 0;
    unsigned h = 0;
    std::vector<Polynomial> jacobian_gens;

    // valid when st == ok
    int nu = -1;
    int ll = -1;
    long e = -1;
    int iso_N = 0, iso_L = -1;
    int ll_N = 0;
    std::optional<ReductionMultiplicity> reduction;
    std::optional<HilbertMultiplicity> hilbert;

    long bound_main = -1;     // (nu - d + 1) * ll - 1
    long bound_mult = -1;     // e - 1
    std::optional<long> bound_hyp; // 2*ll - 1, hypersurfaces only

    bool hypersurface = false;
    bool complete_intersection = false;
    bool k_infinite = false;   // multiplicity bound hypothesis
    bool char_zero = false;    // positive characteristic caveat flag
};

BoundsReport compute_bounds(const RingPresentation& P, const BoundsOptions& opt);

// Finite difference helper: order-th difference of v at index base.
long finite_difference(const std::vector<long>& v, int order, int base);

} // namespace sgdim

#endif
