#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "oracle.hpp"
#include "sgdim/rng.hpp"
#include "sgdim/trunc.hpp"

using namespace sgdim;

namespace {

const CoefficientField QQ = CoefficientField::rationals();

Polynomial var(const CoefficientField& f, unsigned n, unsigned i) {
    return Polynomial::variable(f, n, i);
}

Polynomial pow(const Polynomial& x, unsigned k) {
    Polynomial r = Polynomial::constant(x.field(), x.nvars(), Coeff::one(x.field()));
    for (unsigned i = 0; i < k; ++i) r = r * x;
    return r;
}

oracle::TermPoly to_oracle(const Polynomial& p) {
    oracle::TermPoly out;
    for (const auto& [m, c] : p.terms()) out.emplace_back(m.exps(), c.rat());
    return out;
}

std::vector<oracle::TermPoly> to_oracle(const std::vector<Polynomial>& v) {
    std::vector<oracle::TermPoly> out;
    for (const auto& p : v) out.push_back(to_oracle(p));
    return out;
}

// the cusp model k[x,y]/(x^2 + y^3), truncated
AlgebraPtr cusp(int order) {
    Polynomial x = var(QQ, 2, 0), y = var(QQ, 2, 1);
    return TruncatedAlgebra::build(QQ, 2, {x * x + y * y * y}, order);
}

} // namespace

// ======== truncated models ========

TEST_CASE("standard monomial basis of the cusp at order 4") {
    AlgebraPtr T = cusp(4);
    REQUIRE(T->dim() == 7);
    std::vector<Monomial> want = {
        Monomial({0, 0}), Monomial({1, 0}), Monomial({0, 1}), Monomial({0, 2}),
        Monomial({1, 1}), Monomial({0, 3}), Monomial({1, 2})};
    // same set regardless of listing order
    for (const auto& m : want) {
        bool found = false;
        for (const auto& b : T->basis()) found = found || b == m;
        CHECK(found);
    }
    CHECK(T->ambient().size() == 10); // all monomials of degree < 4
}

TEST_CASE("normal forms respect the defining relation") {
    AlgebraPtr T = cusp(5);
    Polynomial x = var(QQ, 2, 0), y = var(QQ, 2, 1);
    CHECK(T->normal_form(x * x + y * y * y).is_zero());
    CHECK(T->normal_form(x * x) == T->normal_form(-(y * y * y)));
    CHECK(T->normal_form(x * x * x) == T->normal_form(-(x * y * y * y)));
}

TEST_CASE("reduce and basis_polynomial are inverse") {
    AlgebraPtr T = cusp(4);
    for (std::size_t j = 0; j < T->dim(); ++j) {
        QVec e = T->reduce(T->basis_polynomial(j));
        for (std::size_t k = 0; k < T->dim(); ++k)
            CHECK(e[k].is_zero() == (k != j));
    }
}

TEST_CASE("variable actions commute and act correctly") {
    AlgebraPtr T = cusp(4);
    const Mat& ax = T->var_action(0);
    const Mat& ay = T->var_action(1);
    CHECK(mat_mul(ax, ay) == mat_mul(ay, ax));
    Polynomial x = var(QQ, 2, 0), y = var(QQ, 2, 1);
    Polynomial p = x * y + y * y;
    CHECK(mat_apply(ax, T->reduce(p)) == T->reduce(x * p));
    CHECK(mat_apply(ay, T->reduce(p)) == T->reduce(y * p));
}

TEST_CASE("nilpotency certificate distinguishes artinian models") {
    // x^2, y^2: the maximal ideal cubes to zero, seen below order 4
    Polynomial x = var(QQ, 2, 0), y = var(QQ, 2, 1);
    auto T = TruncatedAlgebra::build(QQ, 2, {x * x, y * y}, 4);
    REQUIRE(T->nilpotency().certified);
    CHECK(T->nilpotency().L.value() == 3);
    CHECK(T->dim() == 4); // 1, x, y, xy
    // the cusp is one-dimensional: no power of m vanishes
    CHECK_FALSE(cusp(6)->nilpotency().certified);
}

// ======== ideal spans and certified invariants ========

TEST_CASE("jacobian-shaped ideal of the cusp") {
    AlgebraPtr T = cusp(4);
    Polynomial x = var(QQ, 2, 0), y = var(QQ, 2, 1);
    IdealSpan I = ideal_span(T, {x, y * y});
    REQUIRE(I.cert.certified);
    CHECK(I.cert.L.value() == 2); // m^2 = (x^2, xy, y^2) lands inside (x, y^2)
    CHECK(colength(I) == 2);      // residue classes of 1 and y
    CHECK(loewy_length(I) == 2);
    CHECK(min_num_gens(I) == 2);
}

TEST_CASE("unit ideals are flagged") {
    AlgebraPtr T = cusp(4);
    Polynomial x = var(QQ, 2, 0);
    Polynomial u = Polynomial::constant(QQ, 2, Coeff::one(QQ)) + x;
    IdealSpan I = ideal_span(T, {u});
    CHECK(I.contains_unit);
    CHECK(colength(I) == 0);
}

TEST_CASE("non-primary ideals never certify") {
    // on the coordinate cross k[x,y]/(xy), the quotient by (x) is k[y]:
    // every power of m keeps a pure y monomial outside the span
    Polynomial x = var(QQ, 2, 0), y = var(QQ, 2, 1);
    auto T = TruncatedAlgebra::build(QQ, 2, {x * y}, 6);
    IdealSpan I = ideal_span(T, {x});
    CHECK_FALSE(I.cert.certified);
    CHECK_THROWS_AS(loewy_length(I), sg_error);
    CHECK_THROWS_AS(min_num_gens(I), sg_error);
}

TEST_CASE("the relation can make a small ideal primary") {
    // in the cusp ring x is nilpotent mod y^2 (x^2 = -y * y^2), so (y^2)
    // alone is m-primary with colength 4
    AlgebraPtr T = cusp(5);
    Polynomial y = var(QQ, 2, 1);
    IdealSpan I = ideal_span(T, {y * y});
    REQUIRE(I.cert.certified);
    CHECK(colength(I) == 4); // classes of 1, x, y, xy
    CHECK(loewy_length(I) == 3);
    CHECK(min_num_gens(I) == 1);
}

TEST_CASE("ideal powers: the cusp jacobian squared has colength 5") {
    AlgebraPtr T = cusp(6);
    Polynomial x = var(QQ, 2, 0), y = var(QQ, 2, 1);
    IdealSpan I = ideal_span(T, {x, y * y});
    IdealSpan I2 = ideal_power(I, 2);
    REQUIRE(I2.cert.certified);
    CHECK(colength(I2) == 5); // basis classes 1, x, y, xy, y^2

    // independent check at the same order
    Polynomial rel = x * x + y * y * y;
    std::vector<oracle::TermPoly> gens =
        to_oracle(std::vector<Polynomial>{x * x, x * y * y, y * y * y * y});
    gens.push_back(to_oracle(rel));
    CHECK(oracle::quotient_dim(2, 6, gens) == 5);
}

TEST_CASE("power products enumerate multisets of generators") {
    Polynomial x = var(QQ, 2, 0), y = var(QQ, 2, 1);
    auto prods = power_products({x, y}, 3, 10);
    CHECK(prods.size() == 4); // x^3, x^2 y, x y^2, y^3
    auto single = power_products({x, y}, 1, 10);
    CHECK(single.size() == 2);
}

TEST_CASE("the algebra cache memoizes by order") {
    Polynomial x = var(QQ, 2, 0), y = var(QQ, 2, 1);
    AlgebraCache cache(QQ, 2, {x * x + y * y * y});
    AlgebraPtr a = cache.at(4);
    AlgebraPtr b = cache.at(4);
    CHECK(a.get() == b.get());
    CHECK(cache.at(6).get() != a.get());
}

// ======== oracle cross-checks ========

TEST_CASE("randomized agreement with the row-reduction oracle") {
    Rng rng(2024);
    int checked = 0;
    for (int trial = 0; trial < 20; ++trial) {
        // random artinian-looking data: relation x^a + c y^b, ideal (x^i + c' y^j, y^k)
        Polynomial x = var(QQ, 2, 0), y = var(QQ, 2, 1);
        Polynomial rel =
            pow(x, unsigned(rng.range(2, 3))) +
            pow(y, unsigned(rng.range(2, 4))).scaled(Coeff::of_int(QQ, rng.range(1, 5)));
        Polynomial g1 =
            pow(x, unsigned(rng.range(1, 2))) +
            pow(y, unsigned(rng.range(1, 3))).scaled(Coeff::of_int(QQ, rng.range(1, 5)));
        Polynomial g2 = pow(y, unsigned(rng.range(1, 3)));
        int N = 8;

        auto T = TruncatedAlgebra::build(QQ, 2, {rel}, N);
        IdealSpan I = ideal_span(T, {g1, g2});
        if (!I.cert.certified) continue;
        ++checked;

        auto all = to_oracle(std::vector<Polynomial>{rel, g1, g2});
        oracle::Basis B = oracle::make_basis(2, N);
        oracle::span_ideal(B, all);
        CHECK(oracle::quotient_dim(2, N, all) == colength(I));
        CHECK(oracle::least_contained_power(B) == loewy_length(I));
        CHECK(oracle::min_gens(2, N, to_oracle(std::vector<Polynomial>{rel}),
                               to_oracle(std::vector<Polynomial>{g1, g2})) ==
              min_num_gens(I));
    }
    CHECK(checked >= 10); // most draws certify well below order 8
}

TEST_CASE("certified invariants are stable two orders deeper") {
    Rng rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        Polynomial x = var(QQ, 2, 0), y = var(QQ, 2, 1);
        Polynomial rel = pow(x, 2) + pow(y, unsigned(rng.range(2, 4)));
        Polynomial g1 = x + pow(y, unsigned(rng.range(1, 2)));
        Polynomial g2 = pow(y, unsigned(rng.range(1, 3)));
        AlgebraCache cache(QQ, 2, {rel});
        IdealSpan a = ideal_span(cache.at(8), {g1, g2});
        IdealSpan b = ideal_span(cache.at(10), {g1, g2});
        REQUIRE(a.cert.certified);
        REQUIRE(b.cert.certified);
        CHECK(colength(a) == colength(b));
        CHECK(loewy_length(a) == loewy_length(b));
        CHECK(min_num_gens(a) == min_num_gens(b));
    }
}

TEST_CASE("prime-field models certify the same way") {
    const CoefficientField F7 = CoefficientField::prime(7);
    Polynomial x = var(F7, 2, 0), y = var(F7, 2, 1);
    auto T = TruncatedAlgebra::build(F7, 2, {x * x + y * y * y}, 5);
    IdealSpan I = ideal_span(T, {x, y * y});
    REQUIRE(I.cert.certified);
    CHECK(colength(I) == 2);
    CHECK(loewy_length(I) == 2);
    CHECK(min_num_gens(I) == 2);
}
