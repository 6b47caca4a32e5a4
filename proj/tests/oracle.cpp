#include "oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {

namespace {

unsigned deg_of(const Exp& e) {
    unsigned d = 0;
    for (unsigned v : e) d += v;
    return d;
}

void enumerate(unsigned nvars, int N, unsigned pos, Exp& cur, unsigned used,
               std::vector<Exp>& out) {
    if (pos == nvars) {
        out.push_back(cur);
        return;
    }
    for (unsigned a = 0; used + a < unsigned(N); ++a) {
        cur[pos] = a;
        enumerate(nvars, N, pos + 1, cur, used + a, out);
    }
    cur[pos] = 0;
}

} // namespace

TermPoly mono(const Exp& e) { return {{e, mpq_class(1)}}; }

TermPoly mul(const TermPoly& a, const TermPoly& b) {
    std::map<Exp, mpq_class> acc;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            if (ea.size() != eb.size()) throw std::runtime_error("oracle arity");
            Exp e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            acc[e] += ca * cb;
        }
    TermPoly out;
    for (auto& [e, c] : acc)
        if (c != 0) out.emplace_back(e, c);
    return out;
}

TermPoly add(const TermPoly& a, const TermPoly& b) {
    std::map<Exp, mpq_class> acc;
    for (const auto& [e, c] : a) acc[e] += c;
    for (const auto& [e, c] : b) acc[e] += c;
    TermPoly out;
    for (auto& [e, c] : acc)
        if (c != 0) out.emplace_back(e, c);
    return out;
}

Basis make_basis(unsigned nvars, int N) {
    Basis B;
    B.nvars = nvars;
    B.N = N;
    Exp cur(nvars, 0);
    enumerate(nvars, N, 0, cur, 0, B.mons);
    std::sort(B.mons.begin(), B.mons.end()); // ascending lex on exponent tuples
    for (std::size_t i = 0; i < B.mons.size(); ++i) B.index[B.mons[i]] = i;
    return B;
}

std::vector<mpq_class> Basis::vec_of(const TermPoly& p) const {
    std::vector<mpq_class> v(mons.size(), mpq_class(0));
    for (const auto& [e, c] : p) {
        if (deg_of(e) >= unsigned(N)) continue;
        v[index.at(e)] += c;
    }
    return v;
}

bool Basis::insert(std::vector<mpq_class> v) {
    for (std::size_t col = 0; col < v.size(); ++col) {
        if (v[col] == 0) continue;
        auto it = pivot.find(col);
        if (it == pivot.end()) {
            mpq_class lead = v[col];
            for (std::size_t j = col; j < v.size(); ++j) v[j] /= lead;
            pivot[col] = rows.size();
            rows.push_back(std::move(v));
            return true;
        }
        const auto& prow = rows[it->second];
        mpq_class factor = v[col];
        for (std::size_t j = col; j < v.size(); ++j) v[j] -= factor * prow[j];
    }
    return false;
}

bool Basis::member(std::vector<mpq_class> v) const {
    for (std::size_t col = 0; col < v.size(); ++col) {
        if (v[col] == 0) continue;
        auto it = pivot.find(col);
        if (it == pivot.end()) return false;
        const auto& prow = rows[it->second];
        mpq_class factor = v[col];
        for (std::size_t j = col; j < v.size(); ++j) v[j] -= factor * prow[j];
    }
    return true;
}

void span_ideal(Basis& B, const std::vector<TermPoly>& gens) {
    for (const auto& g : gens)
        for (const auto& u : B.mons) {
            TermPoly prod = mul(mono(u), g);
            TermPoly cut;
            for (const auto& t : prod)
                if (deg_of(t.first) < unsigned(B.N)) cut.push_back(t);
            if (cut.empty()) continue;
            B.insert(B.vec_of(cut));
        }
}

long quotient_dim(unsigned nvars, int N, const std::vector<TermPoly>& gens) {
    Basis B = make_basis(nvars, N);
    span_ideal(B, gens);
    return long(B.mons.size()) - long(B.rank());
}

int least_contained_power(const Basis& B) {
    // find the largest l0 such that some monomial of degree >= l0 escapes
    int escape = -1;
    for (const auto& m : B.mons)
        if (!B.member(B.vec_of(mono(m)))) escape = std::max(escape, int(deg_of(m)));
    if (escape + 1 >= B.N) return -1;
    return escape + 1;
}

long min_gens(unsigned nvars, int N, const std::vector<TermPoly>& F,
              const std::vector<TermPoly>& I) {
    std::vector<TermPoly> big = F;
    big.insert(big.end(), I.begin(), I.end());
    std::vector<TermPoly> small = F;
    for (const auto& g : I)
        for (unsigned i = 0; i < nvars; ++i) {
            Exp xi(nvars, 0);
            xi[i] = 1;
            small.push_back(mul(mono(xi), g));
        }
    Basis A = make_basis(nvars, N);
    span_ideal(A, big);
    Basis Bm = make_basis(nvars, N);
    span_ideal(Bm, small);
    return long(A.rank()) - long(Bm.rank());
}

std::vector<TermPoly> ideal_power(const std::vector<TermPoly>& I, int t) {
    if (t <= 0) return {mono(Exp(I.empty() ? 0 : I[0][0].first.size(), 0))};
    std::vector<TermPoly> out = I;
    for (int k = 1; k < t; ++k) {
        std::vector<TermPoly> next;
        // multisets only: product order is irrelevant
        for (std::size_t a = 0; a < out.size(); ++a)
            for (std::size_t b = 0; b < I.size(); ++b) next.push_back(mul(out[a], I[b]));
        out = std::move(next);
    }
    return out;
}

HilbertResult hilbert_e(unsigned nvars, const std::vector<TermPoly>& F,
                        const std::vector<TermPoly>& I, int d,
                        const std::vector<int>& orders) {
    HilbertResult res;
    for (std::size_t t = 0; t < orders.size(); ++t) {
        std::vector<TermPoly> gens = F;
        auto pw = ideal_power(I, int(t) + 1);
        gens.insert(gens.end(), pw.begin(), pw.end());
        res.lengths.push_back(quotient_dim(nvars, orders[t], gens));
    }
    std::vector<long> diff = res.lengths;
    for (int level = 0; level < d; ++level) {
        if (diff.size() < 2) return res;
        std::vector<long> next;
        for (std::size_t i = 0; i + 1 < diff.size(); ++i)
            next.push_back(diff[i + 1] - diff[i]);
        diff = std::move(next);
    }
    if (diff.empty()) return res;
    if (diff.size() >= 2 && diff[diff.size() - 1] == diff[diff.size() - 2])
        res.stabilized = true;
    res.e = diff.back();
    return res;
}

} // namespace oracle
