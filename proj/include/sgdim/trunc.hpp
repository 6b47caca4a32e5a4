#ifndef SGDIM_TRUNC_HPP
#define SGDIM_TRUNC_HPP

// Finite-dimensional models k[x1..xn] / ((F) + m^N) of local rings, with
// ideal spans inside them and truncation certificates.
//
// The certificate is the whole soundness story: once some L < N satisfies
// m^L ⊆ I in the model, Nakayama lifts the containment to the local ring,
// and every invariant read off at order N (colength, Loewy length, minimal
// generator counts) equals the true local value. Uncertified numbers are
// never surfaced as results.

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "sgdim/linalg.hpp"
#include "sgdim/poly.hpp"

namespace sgdim {

struct TruncationCertificate {
    int N = 0;            // truncation order of the model
    std::optional<int> L; // least L with m^L inside the span, when found below N
    bool certified = false;
};

class TruncatedAlgebra {
public:
    static std::shared_ptr<const TruncatedAlgebra>
    build(const CoefficientField& f, unsigned nvars,
          std::vector<Polynomial> relations, int order);

    const CoefficientField& field() const { return field_; }
    unsigned nvars() const { return nvars_; }
    int order() const { return order_; }
    const std::vector<Polynomial>& relations() const { return relations_; }

    std::size_t dim() const { return basis_.size(); }
    const std::vector<Monomial>& basis() const { return basis_; }
    const std::vector<Monomial>& ambient() const { return ambient_; }

    // Coordinates of p's class on the standard-monomial basis.
    QVec reduce(const Polynomial& p) const;
    Polynomial normal_form(const Polynomial& p) const;
    Polynomial basis_polynomial(std::size_t j) const;

    // Multiplication by x_i as a dim x dim matrix (cached).
    const Mat& var_action(unsigned i) const;

    // Least L with m^L = 0 in the model: the certificate that the defining
    // ideal itself is m-primary (the ring is artinian).
    const TruncationCertificate& nilpotency() const;

private:
    TruncatedAlgebra(const CoefficientField& f, unsigned nvars, int order)
        : field_(f), nvars_(nvars), order_(order), relation_rows_(f, 0) {}

    QVec ambient_coords(const Polynomial& p) const;

    CoefficientField field_;
    unsigned nvars_;
    int order_;
    std::vector<Polynomial> relations_;
    std::vector<Monomial> ambient_;                 // all monomials of degree < N
    std::map<Monomial, std::size_t, GrevlexLess> index_;
    RowSpace relation_rows_;                        // span of truncated u*f
    std::vector<std::size_t> basis_cols_;
    std::vector<Monomial> basis_;

    mutable std::vector<Mat> actions_;
    mutable std::optional<TruncationCertificate> nilpotency_;
};

using AlgebraPtr = std::shared_ptr<const TruncatedAlgebra>;

struct IdealSpan {
    AlgebraPtr parent;
    std::vector<Polynomial> gens;
    RowSpace span;                 // row space in basis coordinates
    TruncationCertificate cert;    // least L with m^L inside the span
    bool contains_unit = false;    // span is all of the model

    std::size_t rank() const { return span.rank(); }
};

IdealSpan ideal_span(const AlgebraPtr& T, std::vector<Polynomial> gens);

// dim(model) - rank(span). Pair it with span.cert before trusting it.
long colength(const IdealSpan& I);

// Least n >= 1 with m^n inside I; requires the certificate.
int loewy_length(const IdealSpan& I);

// nu(I) = dim I/mI via rank(I) - rank(mI); requires the certificate.
int min_num_gens(const IdealSpan& I);

// Products of t generators (with repetition), truncated below the order.
std::vector<Polynomial> power_products(const std::vector<Polynomial>& gens,
                                       unsigned t, unsigned trunc);

// Span of I^t, freshly certified.
IdealSpan ideal_power(const IdealSpan& I, unsigned t);

// ======== certify driver ========

using Schedule = std::vector<int>;

inline Schedule default_schedule() { return {4, 6, 10, 16, 24}; }

// Builds and memoizes models of one presentation at several orders.
class AlgebraCache {
public:
    AlgebraCache(const CoefficientField& f, unsigned nvars, std::vector<Polynomial> F)
        : field_(f), nvars_(nvars), relations_(std::move(F)) {}

    AlgebraPtr at(int order) {
        auto it = built_.find(order);
        if (it != built_.end()) return it->second;
        auto T = TruncatedAlgebra::build(field_, nvars_, relations_, order);
        built_.emplace(order, T);
        return T;
    }

    const CoefficientField& field() const { return field_; }
    unsigned nvars() const { return nvars_; }
    const std::vector<Polynomial>& relations() const { return relations_; }

private:
    CoefficientField field_;
    unsigned nvars_;
    std::vector<Polynomial> relations_;
    std::map<int, AlgebraPtr> built_;
};

// Walk the schedule in ascending order until the request certifies; the
// first success is the smallest certified order, so concurrent evaluation
// could only ever return the same answer.
template <typename Fn>
auto certify(AlgebraCache& cache, const Schedule& schedule, Fn&& request)
    -> decltype(request(cache.at(0))) {
    for (int order : schedule) {
        auto got = request(cache.at(order));
        if (got) return got;
    }
    return std::nullopt;
}

} // namespace sgdim

#endif
