#ifndef SGDIM_POLY_HPP
#define SGDIM_POLY_HPP

// Sparse exact multivariate polynomials over QQ or F_p, plus the handful of
// calculus operations the toolkit needs: products, partial derivatives, and
// the h x h minors of a Jacobian matrix. No floating point anywhere.

#include <map>
#include <string>
#include <vector>

#include "sgdim/field.hpp"
#include "sgdim/monomial.hpp"

namespace sgdim {

class Polynomial {
public:
    using term_map = std::map<Monomial, Coeff, GrevlexLess>;

    Polynomial(const CoefficientField& f, unsigned nvars)
        : field_(f), nvars_(nvars) {}

    static Polynomial zero(const CoefficientField& f, unsigned nvars) {
        return Polynomial(f, nvars);
    }
    static Polynomial constant(const CoefficientField& f, unsigned nvars, const Coeff& c) {
        Polynomial p(f, nvars);
        p.add_term(Monomial::one(nvars), c);
        return p;
    }
    static Polynomial term(const CoefficientField& f, unsigned nvars,
                           const Monomial& m, const Coeff& c) {
        Polynomial p(f, nvars);
        p.add_term(m, c);
        return p;
    }
    static Polynomial variable(const CoefficientField& f, unsigned nvars, unsigned i) {
        return term(f, nvars, Monomial::var(nvars, i), Coeff::one(f));
    }

    const CoefficientField& field() const { return field_; }
    unsigned nvars() const { return nvars_; }
    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }

    // Total degree, -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, int(m.deg()));
        return d;
    }

    // Order = least total degree of a term; -1 for the zero polynomial.
    int order() const {
        int o = -1;
        for (const auto& [m, c] : terms_)
            if (o < 0 || int(m.deg()) < o) o = int(m.deg());
        return o;
    }

    Coeff constant_term() const {
        auto it = terms_.find(Monomial::one(nvars_));
        return it == terms_.end() ? Coeff::zero(field_) : it->second;
    }

    Coeff coeff_of(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Coeff::zero(field_) : it->second;
    }

    void add_term(const Monomial& m, const Coeff& c) {
        if (m.nvars() != nvars_) fail(errc::arity_mismatch, "term arity mismatch");
        check_same_field(c.field(), field_);
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // Drop every term of total degree >= bound.
    Polynomial truncated_below(unsigned bound) const {
        Polynomial r(field_, nvars_);
        for (const auto& [m, c] : terms_)
            if (m.deg() < bound) r.terms_.emplace(m, c);
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Coeff& c) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::string str(const std::vector<std::string>& var_names) const;
    std::string str() const; // default names x1..xn (x, y, z for n <= 3)

private:
    CoefficientField field_;
    unsigned nvars_;
    term_map terms_;
};

// d/dx_i. Exponents enter coefficients through the field, so over F_p the
// derivative of x^p correctly vanishes.
Polynomial poly_diff(const Polynomial& p, unsigned i);

// Exact division: returns q with q * divisor == p, or fails with
// errc::internal if the division is not exact (callers only divide when
// exactness is guaranteed, e.g. inside fraction-free elimination).
Polynomial poly_divexact(const Polynomial& p, const Polynomial& divisor);

// Determinant of a square polynomial matrix. Cofactor expansion below size 4,
// fraction-free Bareiss elimination (with exact polynomial division) from
// size 4 up, where expansion's term count explodes.
Polynomial poly_det(const std::vector<std::vector<Polynomial>>& mat);

// Jacobian matrix (d f_i / d x_j), one row per relation, one column per
// variable.
std::vector<std::vector<Polynomial>> jacobian_matrix(const std::vector<Polynomial>& F);

// All h x h minors of the Jacobian of F, rows and columns chosen in
// lexicographic subset order. h must satisfy 1 <= h <= min(#F, nvars).
std::vector<Polynomial> jacobian_minors(const std::vector<Polynomial>& F, unsigned h);

std::vector<std::string> default_var_names(unsigned nvars);

} // namespace sgdim

#endif
