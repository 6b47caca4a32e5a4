#include "sgdim/trunc.hpp"

#include <algorithm>

#include "sgdim/error.hpp"

namespace sgdim {

namespace {

// Rows spanning the image of (F) in the model: u*f for every monomial u
// with deg(u) + order(f) < N. Higher u only contribute truncated zeros.
std::vector<Polynomial> relation_products(const std::vector<Polynomial>& F,
                                          unsigned nvars, int order) {
    std::vector<Polynomial> rows;
    for (const auto& f : F) {
        long o = f.order();
        if (o < 0 || o >= order) continue;
        for (int d = 0; d + o < order; ++d) {
            for (const auto& u : monomials_of_degree(nvars, unsigned(d))) {
                Polynomial p = (f * Polynomial::term(f.field(), nvars, u, Coeff::one(f.field())))
                                   .truncated_below(unsigned(order));
                if (!p.is_zero()) rows.push_back(std::move(p));
            }
        }
    }
    return rows;
}

} // namespace

std::shared_ptr<const TruncatedAlgebra>
TruncatedAlgebra::build(const CoefficientField& f, unsigned nvars,
                        std::vector<Polynomial> relations, int order) {
    if (nvars == 0) fail(errc::invalid_presentation, "need at least one variable");
    if (order < 1) fail(errc::invalid_presentation, "truncation order must be at least 1");

    std::vector<Polynomial> kept;
    for (auto& g : relations) {
        check_same_field(g.field(), f, "relation");
        if (g.nvars() != nvars)
            fail(errc::arity_mismatch, "relation uses a different number of variables");
        if (g.is_zero()) continue;
        if (!g.constant_term().is_zero())
            fail(errc::unit_defining_ideal,
                 "defining ideal contains a unit: relation has nonzero constant term");
        kept.push_back(std::move(g));
    }

    auto T = std::shared_ptr<TruncatedAlgebra>(new TruncatedAlgebra(f, nvars, order));
    T->relations_ = std::move(kept);
    T->ambient_ = monomials_below(nvars, unsigned(order));
    for (std::size_t i = 0; i < T->ambient_.size(); ++i)
        T->index_.emplace(T->ambient_[i], i);

    T->relation_rows_ = RowSpace(f, T->ambient_.size());
    for (const auto& row : relation_products(T->relations_, nvars, order))
        T->relation_rows_.insert(T->ambient_coords(row));

    T->basis_cols_ = T->relation_rows_.free_cols();
    for (std::size_t c : T->basis_cols_) T->basis_.push_back(T->ambient_[c]);
    return T;
}

QVec TruncatedAlgebra::ambient_coords(const Polynomial& p) const {
    QVec v = qvec_zero(field_, ambient_.size());
    for (const auto& [mon, c] : p.terms()) {
        if (mon.deg() >= unsigned(order_)) continue;
        auto it = index_.find(mon);
        if (it == index_.end()) fail(errc::internal, "monomial missing from ambient index");
        v[it->second] = c;
    }
    return v;
}

QVec TruncatedAlgebra::reduce(const Polynomial& p) const {
    check_same_field(p.field(), field_, "polynomial");
    if (p.nvars() != nvars_)
        fail(errc::arity_mismatch, "polynomial uses a different number of variables");
    QVec full = relation_rows_.reduce(ambient_coords(p));
    QVec out = qvec_zero(field_, basis_.size());
    for (std::size_t j = 0; j < basis_cols_.size(); ++j) out[j] = full[basis_cols_[j]];
    return out;
}

Polynomial TruncatedAlgebra::normal_form(const Polynomial& p) const {
    QVec v = reduce(p);
    Polynomial out = Polynomial::zero(field_, nvars_);
    for (std::size_t j = 0; j < v.size(); ++j)
        if (!v[j].is_zero()) out.add_term(basis_[j], v[j]);
    return out;
}

Polynomial TruncatedAlgebra::basis_polynomial(std::size_t j) const {
    if (j >= basis_.size()) fail(errc::index_range, "basis index out of range");
    return Polynomial::term(field_, nvars_, basis_[j], Coeff::one(field_));
}

const Mat& TruncatedAlgebra::var_action(unsigned i) const {
    if (i >= nvars_) fail(errc::index_range, "variable index out of range");
    if (actions_.empty()) {
        actions_.assign(nvars_, Mat{});
        for (unsigned v = 0; v < nvars_; ++v) {
            Mat a = mat_zero(field_, basis_.size(), basis_.size());
            for (std::size_t j = 0; j < basis_.size(); ++j) {
                Monomial prod = basis_[j].times(Monomial::var(nvars_, v));
                if (prod.deg() >= unsigned(order_)) continue;
                QVec col = reduce(Polynomial::term(field_, nvars_, prod, Coeff::one(field_)));
                for (std::size_t r = 0; r < basis_.size(); ++r) a[r][j] = col[r];
            }
            actions_[v] = std::move(a);
        }
    }
    return actions_[i];
}

const TruncationCertificate& TruncatedAlgebra::nilpotency() const {
    if (!nilpotency_) {
        TruncationCertificate cert;
        cert.N = order_;
        for (int l = 1; l < order_; ++l) {
            bool all_zero = true;
            for (const auto& mon : monomials_of_degree(nvars_, unsigned(l))) {
                QVec v = reduce(Polynomial::term(field_, nvars_, mon, Coeff::one(field_)));
                if (!std::all_of(v.begin(), v.end(),
                                 [](const Coeff& c) { return c.is_zero(); })) {
                    all_zero = false;
                    break;
                }
            }
            if (all_zero) {
                cert.L = l;
                cert.certified = true;
                break;
            }
        }
        nilpotency_ = cert;
    }
    return *nilpotency_;
}

// ======== ideal spans ========

IdealSpan ideal_span(const AlgebraPtr& T, std::vector<Polynomial> gens) {
    IdealSpan I;
    I.parent = T;
    I.cert.N = T->order();

    RowSpace span(T->field(), T->dim());
    std::vector<Polynomial> reduced;
    for (auto& g : gens) {
        check_same_field(g.field(), T->field(), "generator");
        if (g.nvars() != T->nvars())
            fail(errc::arity_mismatch, "generator uses a different number of variables");
        Polynomial nf = T->normal_form(g);
        if (!nf.is_zero()) reduced.push_back(std::move(nf));
    }
    for (const auto& g : reduced) {
        long o = g.order();
        for (int d = 0; d + o < T->order(); ++d) {
            for (const auto& u : monomials_of_degree(T->nvars(), unsigned(d))) {
                Polynomial p =
                    (g * Polynomial::term(g.field(), g.nvars(), u, Coeff::one(g.field())))
                        .truncated_below(unsigned(T->order()));
                if (p.is_zero()) continue;
                span.insert(T->reduce(p));
            }
        }
    }
    I.gens = std::move(gens);
    I.span = std::move(span);

    for (int l = 0; l < T->order(); ++l) {
        bool all_in = true;
        for (const auto& mon : monomials_of_degree(T->nvars(), unsigned(l))) {
            QVec v = T->reduce(Polynomial::term(T->field(), T->nvars(), mon, Coeff::one(T->field())));
            if (!I.span.contains(v)) {
                all_in = false;
                break;
            }
        }
        if (all_in) {
            I.cert.L = l;
            I.cert.certified = true;
            break;
        }
    }
    I.contains_unit = I.cert.L.has_value() && *I.cert.L == 0;
    return I;
}

long colength(const IdealSpan& I) {
    return long(I.parent->dim()) - long(I.rank());
}

int loewy_length(const IdealSpan& I) {
    if (!I.cert.certified)
        fail(errc::inconclusive, "Loewy length requested without a truncation certificate");
    // Least n >= 1 with m^n inside I. The certificate already holds the
    // least L >= 0, found by the ascending scan; L = 0 means the quotient
    // is the zero ring, where n = 1 is the least admissible value.
    return std::max(*I.cert.L, 1);
}

int min_num_gens(const IdealSpan& I) {
    if (!I.cert.certified)
        fail(errc::inconclusive, "minimal generator count requested without a certificate");
    const auto& T = I.parent;
    std::vector<Polynomial> mi;
    for (const auto& g : I.gens)
        for (unsigned v = 0; v < T->nvars(); ++v) mi.push_back(g * Polynomial::variable(g.field(), g.nvars(), v));
    IdealSpan MI = ideal_span(T, std::move(mi));
    // dim I/mI inside the model; exact for the local ring because the
    // certificate m^L ⊆ I with L < N pushes both spans' tails below m^N.
    return int(I.rank()) - int(MI.rank());
}

std::vector<Polynomial> power_products(const std::vector<Polynomial>& gens,
                                       unsigned t, unsigned trunc) {
    std::vector<Polynomial> out;
    if (gens.empty()) return out;
    if (t == 0) fail(errc::index_range, "power must be at least 1");
    // Multisets of t generator indices, built in ascending lexicographic
    // order, with progressive truncation so intermediate products stay small.
    std::vector<unsigned> idx(t, 0);
    auto product = [&]() {
        Polynomial p = gens[idx[0]].truncated_below(trunc);
        for (unsigned j = 1; j < t && !p.is_zero(); ++j)
            p = (p * gens[idx[j]]).truncated_below(trunc);
        return p;
    };
    while (true) {
        Polynomial p = product();
        if (!p.is_zero()) out.push_back(std::move(p));
        // next multiset: increment from the back, reset tail to the new value
        unsigned j = t;
        while (j > 0 && idx[j - 1] == gens.size() - 1) --j;
        if (j == 0) break;
        ++idx[j - 1];
        for (unsigned k = j; k < t; ++k) idx[k] = idx[j - 1];
    }
    return out;
}

IdealSpan ideal_power(const IdealSpan& I, unsigned t) {
    if (t == 0) fail(errc::index_range, "power must be at least 1");
    if (t == 1) return ideal_span(I.parent, I.gens);
    return ideal_span(I.parent, power_products(I.gens, t, unsigned(I.parent->order())));
}

} // namespace sgdim
