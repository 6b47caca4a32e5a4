#include "sgdim/poly.hpp"

#include <algorithm>

namespace sgdim {

// ======== monomial enumeration ========

static void gen_degree(unsigned nvars, unsigned d, unsigned pos,
                       std::vector<unsigned>& cur, std::vector<Monomial>& out) {
    if (pos + 1 == nvars) {
        cur[pos] = d;
        out.emplace_back(cur);
        return;
    }
    for (unsigned e = 0; e <= d; ++e) {
        cur[pos] = e;
        gen_degree(nvars, d - e, pos + 1, cur, out);
    }
}

std::vector<Monomial> monomials_of_degree(unsigned nvars, unsigned d) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (d == 0) out.push_back(Monomial(0u));
        return out;
    }
    std::vector<unsigned> cur(nvars, 0);
    gen_degree(nvars, d, 0, cur, out);
    std::sort(out.begin(), out.end(), GrevlexLess{});
    return out;
}

std::vector<Monomial> monomials_below(unsigned nvars, unsigned bound) {
    std::vector<Monomial> out;
    for (unsigned d = 0; d < bound; ++d) {
        auto level = monomials_of_degree(nvars, d);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<std::vector<unsigned>> subsets_of_size(unsigned n, unsigned k) {
    std::vector<std::vector<unsigned>> out;
    if (k > n) return out;
    std::vector<unsigned> cur(k);
    for (unsigned i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        if (k == 0) break;
        // advance: rightmost index that can still move right
        unsigned i = k;
        while (i-- > 0) {
            if (cur[i] + (k - i) < n) {
                ++cur[i];
                for (unsigned j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
                break;
            }
            if (i == 0) return out;
        }
    }
    return out;
}

// ======== arithmetic ========

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_same_field(a.field_, b.field_);
    if (a.nvars_ != b.nvars_) fail(errc::arity_mismatch, "polynomial arity mismatch");
    Polynomial r(a);
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

Polynomial operator-(const Polynomial& a) {
    Polynomial r(a.field_, a.nvars_);
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_field(a.field_, b.field_);
    if (a.nvars_ != b.nvars_) fail(errc::arity_mismatch, "polynomial arity mismatch");
    Polynomial r(a.field_, a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(ma.times(mb), ca * cb);
    return r;
}

Polynomial Polynomial::scaled(const Coeff& c) const {
    check_same_field(c.field(), field_);
    Polynomial r(field_, nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
    return r;
}

Polynomial poly_diff(const Polynomial& p, unsigned i) {
    if (i >= p.nvars()) fail(errc::index_range, "derivative variable out of range");
    Polynomial r(p.field(), p.nvars());
    for (const auto& [m, c] : p.terms()) {
        unsigned e = m[i];
        if (e == 0) continue;
        std::vector<unsigned> exps = m.exps();
        exps[i] = e - 1;
        r.add_term(Monomial(std::move(exps)), c * Coeff::of_int(p.field(), long(e)));
    }
    return r;
}

// ======== exact division and determinants ========

Polynomial poly_divexact(const Polynomial& p, const Polynomial& divisor) {
    if (divisor.is_zero()) fail(errc::internal, "exact division by zero polynomial");
    Polynomial rem(p);
    Polynomial q(p.field(), p.nvars());
    const auto& dlead = *divisor.terms().rbegin(); // grevlex-largest term
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().rbegin();
        auto mq = rlead.first.divided_by(dlead.first);
        if (!mq)
            fail(errc::internal, "polynomial division is not exact");
        Coeff cq = rlead.second / dlead.second;
        Polynomial t = Polynomial::term(p.field(), p.nvars(), *mq, cq);
        q = q + t;
        rem = rem - t * divisor;
    }
    return q;
}

static Polynomial det_cofactor(const std::vector<std::vector<Polynomial>>& m,
                               const CoefficientField& f, unsigned nvars) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Polynomial acc = Polynomial::zero(f, nvars);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Polynomial>> sub;
        sub.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Polynomial> row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            sub.push_back(std::move(row));
        }
        Polynomial term = m[0][j] * det_cofactor(sub, f, nvars);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

static Polynomial det_bareiss(std::vector<std::vector<Polynomial>> m,
                              const CoefficientField& f, unsigned nvars) {
    const std::size_t n = m.size();
    Polynomial denom = Polynomial::constant(f, nvars, Coeff::one(f));
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return Polynomial::zero(f, nvars);
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = poly_divexact(num, denom);
            }
            m[i][k] = Polynomial::zero(f, nvars);
        }
        denom = m[k][k];
    }
    Polynomial d = m[n - 1][n - 1];
    return negate ? -d : d;
}

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& mat) {
    if (mat.empty()) fail(errc::index_range, "determinant of empty matrix");
    const std::size_t n = mat.size();
    for (const auto& row : mat)
        if (row.size() != n) fail(errc::index_range, "determinant needs a square matrix");
    const CoefficientField f = mat[0][0].field();
    const unsigned nvars = mat[0][0].nvars();
    if (n < 4) return det_cofactor(mat, f, nvars);
    return det_bareiss(mat, f, nvars);
}

// ======== Jacobian ========

std::vector<std::vector<Polynomial>> jacobian_matrix(const std::vector<Polynomial>& F) {
    std::vector<std::vector<Polynomial>> jac;
    jac.reserve(F.size());
    for (const auto& fpoly : F) {
        std::vector<Polynomial> row;
        row.reserve(fpoly.nvars());
        for (unsigned j = 0; j < fpoly.nvars(); ++j) row.push_back(poly_diff(fpoly, j));
        jac.push_back(std::move(row));
    }
    return jac;
}

std::vector<Polynomial> jacobian_minors(const std::vector<Polynomial>& F, unsigned h) {
    if (F.empty()) fail(errc::invalid_presentation, "jacobian of an empty relation list");
    const unsigned m = unsigned(F.size());
    const unsigned n = F[0].nvars();
    for (const auto& f : F) {
        check_same_field(f.field(), F[0].field());
        if (f.nvars() != n) fail(errc::arity_mismatch, "relation arity mismatch");
    }
    if (h < 1 || h > m || h > n)
        fail(errc::invalid_presentation,
             "minor size must satisfy 1 <= h <= min(#relations, #vars)");
    auto jac = jacobian_matrix(F);
    std::vector<Polynomial> minors;
    for (const auto& rows : subsets_of_size(m, h)) {
        for (const auto& cols : subsets_of_size(n, h)) {
            std::vector<std::vector<Polynomial>> sub;
            sub.reserve(h);
            for (unsigned r : rows) {
                std::vector<Polynomial> row;
                row.reserve(h);
                for (unsigned c : cols) row.push_back(jac[r][c]);
                sub.push_back(std::move(row));
            }
            minors.push_back(poly_det(sub));
        }
    }
    return minors;
}

// ======== printing ========

std::vector<std::string> default_var_names(unsigned nvars) {
    if (nvars <= 3) {
        static const char* xyz[] = {"x", "y", "z"};
        return std::vector<std::string>(xyz, xyz + nvars);
    }
    std::vector<std::string> names;
    for (unsigned i = 1; i <= nvars; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

std::string Polynomial::str(const std::vector<std::string>& var_names) const {
    if (var_names.size() != nvars_)
        fail(errc::arity_mismatch, "variable name count mismatch");
    if (terms_.empty()) return "0";

    std::vector<const term_map::value_type*> ordered;
    ordered.reserve(terms_.size());
    for (const auto& t : terms_) ordered.push_back(&t);
    std::sort(ordered.begin(), ordered.end(),
              [](const auto* a, const auto* b) {
                  return print_order_before(a->first, b->first);
              });

    std::string out;
    bool first = true;
    for (const auto* t : ordered) {
        const Monomial& m = t->first;
        const Coeff& c = t->second;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs.erase(0, 1);
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono;
        for (unsigned i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var_names[i];
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty()) {
            out += cs;
        } else if (cs == "1") {
            out += mono;
        } else {
            out += cs + "*" + mono;
        }
    }
    return out;
}

std::string Polynomial::str() const { return str(default_var_names(nvars_)); }

} // namespace sgdim
