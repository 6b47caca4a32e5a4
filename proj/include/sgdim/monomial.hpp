#ifndef SGDIM_MONOMIAL_HPP
#define SGDIM_MONOMIAL_HPP

// Monomials in a fixed number of variables with the graded reverse
// lexicographic order. The order only normalizes internal containers;
// no computed invariant depends on it.

#include <cstdint>
#include <optional>
#include <vector>

#include "sgdim/error.hpp"

namespace sgdim {

class Monomial {
public:
    explicit Monomial(unsigned nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<unsigned> exps) : e_(std::move(exps)) {
        for (unsigned x : e_) deg_ += x;
    }

    static Monomial one(unsigned nvars) { return Monomial(nvars); }
    static Monomial var(unsigned nvars, unsigned i, unsigned power = 1) {
        if (i >= nvars) fail(errc::index_range, "variable index out of range");
        Monomial m(nvars);
        m.e_[i] = power;
        m.deg_ = power;
        return m;
    }

    unsigned nvars() const { return unsigned(e_.size()); }
    unsigned deg() const { return deg_; }
    unsigned operator[](unsigned i) const { return e_[i]; }
    const std::vector<unsigned>& exps() const { return e_; }
    bool is_one() const { return deg_ == 0; }

    Monomial times(const Monomial& o) const {
        if (o.nvars() != nvars()) fail(errc::arity_mismatch, "monomial arity mismatch");
        Monomial r(*this);
        for (unsigned i = 0; i < nvars(); ++i) r.e_[i] += o.e_[i];
        r.deg_ = deg_ + o.deg_;
        return r;
    }

    bool divides(const Monomial& o) const {
        if (o.nvars() != nvars()) fail(errc::arity_mismatch, "monomial arity mismatch");
        for (unsigned i = 0; i < nvars(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    std::optional<Monomial> divided_by(const Monomial& o) const {
        if (!o.divides(*this)) return std::nullopt;
        std::vector<unsigned> r(nvars());
        for (unsigned i = 0; i < nvars(); ++i) r[i] = e_[i] - o.e_[i];
        return Monomial(std::move(r));
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.e_ == b.e_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
    std::vector<unsigned> e_;
    unsigned deg_ = 0;
};

// a < b in grevlex: smaller total degree wins; on ties the rightmost
// position where they differ decides, larger exponent there meaning smaller
// monomial. So for two variables: y^2 < x*y < x^2.
inline bool grevlex_less(const Monomial& a, const Monomial& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    for (unsigned i = a.nvars(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

struct GrevlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grevlex_less(a, b);
    }
};

// Human order for printing: lexicographic by leftmost variable, descending,
// so "x^2 + y^3" and "-3*x^2 - 4*x*y - 3*y^2" come out the way people write.
inline bool print_order_before(const Monomial& a, const Monomial& b) {
    for (unsigned i = 0; i < a.nvars(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

// All monomials in n variables of total degree exactly d, grevlex ascending.
std::vector<Monomial> monomials_of_degree(unsigned nvars, unsigned d);

// All monomials of total degree < bound, grevlex ascending.
std::vector<Monomial> monomials_below(unsigned nvars, unsigned bound);

// k-subsets of {0..n-1} in lexicographic order (used by minors and the
// Koszul exterior basis).
std::vector<std::vector<unsigned>> subsets_of_size(unsigned n, unsigned k);

} // namespace sgdim

#endif
