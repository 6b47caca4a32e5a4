#include "sgdim/linalg.hpp"

#include <algorithm>

namespace sgdim {

// ======== small dense helpers ========

QVec qvec_zero(const CoefficientField& f, std::size_t n) {
    return QVec(n, Coeff::zero(f));
}

Mat mat_zero(const CoefficientField& f, std::size_t rows, std::size_t cols) {
    return Mat(rows, qvec_zero(f, cols));
}

Mat mat_identity(const CoefficientField& f, std::size_t n) {
    Mat m = mat_zero(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Coeff::one(f);
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.empty() || b.empty()) return Mat{};
    const std::size_t n = a.size(), k = b.size(), m = b[0].size();
    const CoefficientField f = a[0][0].field();
    Mat r = mat_zero(f, n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) {
                if (b[t][j].is_zero()) continue;
                r[i][j] = r[i][j] + a[i][t] * b[t][j];
            }
        }
    return r;
}

QVec mat_apply(const Mat& a, const QVec& v) {
    if (a.empty()) return QVec{};
    const CoefficientField f = a[0][0].field();
    QVec r = qvec_zero(f, a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (a[i][j].is_zero() || v[j].is_zero()) continue;
            r[i] = r[i] + a[i][j] * v[j];
        }
    return r;
}

Mat mat_add(const Mat& a, const Mat& b) {
    Mat r(a);
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] = r[i][j] + b[i][j];
    return r;
}

Mat mat_sub(const Mat& a, const Mat& b) {
    Mat r(a);
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] = r[i][j] - b[i][j];
    return r;
}

Mat mat_scale(const Mat& a, const Coeff& c) {
    Mat r(a);
    for (auto& row : r)
        for (auto& x : row) x = x * c;
    return r;
}

bool mat_is_zero(const Mat& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

QVec mat_column(const Mat& a, std::size_t j) {
    QVec c;
    c.reserve(a.size());
    for (const auto& row : a) c.push_back(row[j]);
    return c;
}

std::size_t mat_rank(const Mat& a, const CoefficientField& f) {
    if (a.empty()) return 0;
    RowSpace rs(f, a[0].size());
    for (const auto& row : a) rs.insert(row);
    return rs.rank();
}

// ======== RowSpace ========

RowSpace::RowSpace(const CoefficientField& f, std::size_t cols)
    : field_(f), cols_(cols) {}

namespace {

void strip_content(std::vector<mpz_class>& v, mpz_class* coupled = nullptr) {
    mpz_class g = 0;
    for (const auto& x : v) {
        if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    if (coupled && g != 0 && g != 1)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), coupled->get_mpz_t());
    if (g == 0 || g == 1) return;
    for (auto& x : v) x /= g;
    if (coupled) *coupled /= g;
}

std::vector<mpz_class> to_integer_row(const QVec& v, mpz_class& denom) {
    denom = 1;
    for (const auto& c : v) {
        const mpz_class& d = c.rat().get_den();
        mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<mpz_class> w;
    w.reserve(v.size());
    for (const auto& c : v)
        w.push_back(mpz_class(c.rat().get_num() * (denom / c.rat().get_den())));
    return w;
}

std::size_t first_nonzero(const std::vector<mpz_class>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return i;
    return v.size();
}

std::size_t first_nonzero(const std::vector<std::uint64_t>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return i;
    return v.size();
}

} // namespace

void RowSpace::eliminate_q(std::vector<mpz_class>& v, mpz_class& denom) const {
    for (const auto& r : zrows_) {
        if (v[r.pivot] == 0) continue;
        const mpz_class piv = r.a[r.pivot];
        const mpz_class coef = v[r.pivot];
        for (std::size_t j = 0; j < cols_; ++j)
            v[j] = v[j] * piv - r.a[j] * coef;
        denom *= piv;
        strip_content(v, &denom);
    }
}

void RowSpace::eliminate_p(std::vector<std::uint64_t>& v) const {
    const std::uint64_t p = field_.p;
    for (const auto& r : prows_) {
        const std::uint64_t c = v[r.pivot];
        if (c == 0) continue;
        for (std::size_t j = 0; j < cols_; ++j) {
            // rows are pivot-normalized, so subtract c * row
            std::uint64_t sub = (r.a[j] * c) % p;
            v[j] = (v[j] + p - sub) % p;
        }
    }
}

bool RowSpace::insert(const QVec& v) {
    if (v.size() != cols_) fail(errc::index_range, "row length mismatch");
    if (field_.is_rational()) {
        mpz_class denom;
        std::vector<mpz_class> w = to_integer_row(v, denom);
        mpz_class scale = 1;
        eliminate_q(w, scale);
        std::size_t piv = first_nonzero(w);
        if (piv == cols_) return false;
        strip_content(w);
        if (w[piv] < 0)
            for (auto& x : w) x = -x;
        // back-eliminate the new pivot from existing rows
        for (auto& r : zrows_) {
            if (r.a[piv] == 0) continue;
            const mpz_class a = w[piv], b = r.a[piv];
            for (std::size_t j = 0; j < cols_; ++j)
                r.a[j] = r.a[j] * a - w[j] * b;
            strip_content(r.a);
        }
        zrow nr{piv, std::move(w)};
        auto it = std::lower_bound(zrows_.begin(), zrows_.end(), piv,
                                   [](const zrow& r, std::size_t p) { return r.pivot < p; });
        zrows_.insert(it, std::move(nr));
    } else {
        std::vector<std::uint64_t> w;
        w.reserve(cols_);
        for (const auto& c : v) {
            check_same_field(c.field(), field_);
            w.push_back(c.is_zero() ? 0 : c.residue());
        }
        eliminate_p(w);
        std::size_t piv = first_nonzero(w);
        if (piv == cols_) return false;
        const std::uint64_t inv = mod_inverse(w[piv], field_.p);
        for (auto& x : w) x = (x * inv) % field_.p;
        for (auto& r : prows_) {
            const std::uint64_t c = r.a[piv];
            if (c == 0) continue;
            for (std::size_t j = 0; j < cols_; ++j) {
                std::uint64_t sub = (w[j] * c) % field_.p;
                r.a[j] = (r.a[j] + field_.p - sub) % field_.p;
            }
        }
        prow nr{piv, std::move(w)};
        auto it = std::lower_bound(prows_.begin(), prows_.end(), piv,
                                   [](const prow& r, std::size_t p) { return r.pivot < p; });
        prows_.insert(it, std::move(nr));
    }
    pivots_.clear();
    if (field_.is_rational())
        for (const auto& r : zrows_) pivots_.push_back(r.pivot);
    else
        for (const auto& r : prows_) pivots_.push_back(r.pivot);
    return true;
}

bool RowSpace::contains(const QVec& v) const {
    if (v.size() != cols_) fail(errc::index_range, "row length mismatch");
    if (field_.is_rational()) {
        mpz_class denom;
        std::vector<mpz_class> w = to_integer_row(v, denom);
        mpz_class scale = 1;
        eliminate_q(w, scale);
        return first_nonzero(w) == cols_;
    }
    std::vector<std::uint64_t> w;
    w.reserve(cols_);
    for (const auto& c : v) w.push_back(c.is_zero() ? 0 : c.residue());
    eliminate_p(w);
    return first_nonzero(w) == cols_;
}

QVec RowSpace::reduce(const QVec& v) const {
    if (v.size() != cols_) fail(errc::index_range, "row length mismatch");
    if (field_.is_rational()) {
        mpz_class denom;
        std::vector<mpz_class> w = to_integer_row(v, denom);
        eliminate_q(w, denom);
        QVec r;
        r.reserve(cols_);
        for (const auto& x : w)
            r.push_back(Coeff::of_rational(mpq_class(x) / mpq_class(denom)));
        return r;
    }
    std::vector<std::uint64_t> w;
    w.reserve(cols_);
    for (const auto& c : v) w.push_back(c.is_zero() ? 0 : c.residue());
    eliminate_p(w);
    QVec r;
    r.reserve(cols_);
    for (std::uint64_t x : w) r.push_back(Coeff::of_int(field_, long(x)));
    return r;
}

std::vector<QVec> RowSpace::normalized_rows() const {
    std::vector<QVec> rows;
    if (field_.is_rational()) {
        for (const auto& r : zrows_) {
            QVec q;
            q.reserve(cols_);
            const mpz_class& piv = r.a[r.pivot];
            for (const auto& x : r.a)
                q.push_back(Coeff::of_rational(mpq_class(x) / mpq_class(piv)));
            rows.push_back(std::move(q));
        }
    } else {
        for (const auto& r : prows_) {
            QVec q;
            q.reserve(cols_);
            for (std::uint64_t x : r.a) q.push_back(Coeff::of_int(field_, long(x)));
            rows.push_back(std::move(q));
        }
    }
    return rows;
}

std::optional<QVec> RowSpace::coords(const QVec& v) const {
    if (!contains(v)) return std::nullopt;
    QVec c;
    c.reserve(pivots_.size());
    // normalized rows are unit at their own pivot and zero at the others
    for (std::size_t i = 0; i < pivots_.size(); ++i) c.push_back(v[pivots_[i]]);
    return c;
}

std::vector<std::size_t> RowSpace::free_cols() const {
    std::vector<std::size_t> free;
    std::size_t pi = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (pi < pivots_.size() && pivots_[pi] == c) {
            ++pi;
        } else {
            free.push_back(c);
        }
    }
    return free;
}

// ======== derived solvers ========

std::vector<QVec> kernel_basis(const Mat& a, std::size_t cols, const CoefficientField& f) {
    RowSpace rs(f, cols);
    for (const auto& row : a) rs.insert(row);
    auto rref = rs.normalized_rows();
    const auto& piv = rs.pivot_cols();
    std::vector<QVec> basis;
    for (std::size_t fc : rs.free_cols()) {
        QVec x = qvec_zero(f, cols);
        x[fc] = Coeff::one(f);
        for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = -rref[i][fc];
        basis.push_back(std::move(x));
    }
    return basis;
}

RowSpace column_space(const Mat& a, std::size_t rows, const CoefficientField& f) {
    RowSpace rs(f, rows);
    if (a.empty()) return rs;
    for (std::size_t j = 0; j < a[0].size(); ++j) rs.insert(mat_column(a, j));
    return rs;
}

std::optional<QVec> solve_linear(const Mat& a, const QVec& b, std::size_t cols,
                                 const CoefficientField& f) {
    RowSpace rs(f, cols + 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        QVec row = a[i];
        row.push_back(b[i]);
        rs.insert(row);
    }
    auto rref = rs.normalized_rows();
    const auto& piv = rs.pivot_cols();
    QVec x = qvec_zero(f, cols);
    for (std::size_t i = 0; i < piv.size(); ++i) {
        if (piv[i] == cols) return std::nullopt; // 0 = 1 row: inconsistent
        x[piv[i]] = rref[i][cols];
    }
    return x;
}

} // namespace sgdim
