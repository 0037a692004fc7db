#include <random>

#include "doctest.h"
#include "qaff/affine_hecke.hpp"

using namespace qaff;

namespace {

AffHeckeElt term(const AffineHeckeAlgebra& h, const Monomial& m, const Perm& w, const Scalar& c) {
    AffHeckeElt r;
    aff_add(r, m, w, c);
    return r;
}

AffHeckeElt random_elt(const AffineHeckeAlgebra& h, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> e(-1, 2), c(-2, 2);
    AffHeckeElt r;
    for (int k = 0; k < 3; ++k) {
        Monomial m;
        for (int j = 0; j < h.ell(); ++j) m.push_back(e(rng));
        auto perms = all_perms(h.ell());
        aff_add(r, m, perms[static_cast<std::size_t>(k) % perms.size()], Scalar(static_cast<long>(c(rng))));
    }
    return r;
}

}  // namespace

TEST_CASE("straightening moves") {
    ScalarContext ctx(1);
    AffineHeckeAlgebra h(ctx, 2);
    Scalar c = ctx.q_power(2L) - Scalar(1L);
    Perm s = Perm::simple(2, 1), e = Perm::identity(2);
    // sigma y1 = y2 sigma - (q^2-1) y2
    CHECK(h.mul(h.sigma(1), h.y(1)) == h.add(term(h, {0, 1}, s, 1), term(h, {0, 1}, e, -c)));
    // sigma y2 = y1 sigma + (q^2-1) y2
    CHECK(h.mul(h.sigma(1), h.y(2)) == h.add(term(h, {1, 0}, s, 1), term(h, {0, 1}, e, c)));
    // sigma y2^-1 = y1^-1 sigma - (q^2-1) y1^-1, derived from the inverse of sigma y1 sigma = q^2 y2
    CHECK(h.mul(h.sigma(1), h.y(2, -1)) == h.add(term(h, {-1, 0}, s, 1), term(h, {-1, 0}, e, -c)));
    // sigma y1^-1 = y2^-1 sigma + (q^2-1) y1^-1
    CHECK(h.mul(h.sigma(1), h.y(1, -1)) == h.add(term(h, {0, -1}, s, 1), term(h, {-1, 0}, e, c)));
    // sigma y1 sigma = q^2 y2
    CHECK(h.mul(h.mul(h.sigma(1), h.y(1)), h.sigma(1)) == h.scale(h.y(2), ctx.q_power(2L)));
}

TEST_CASE("affine multiplication is associative and y's invert") {
    ScalarContext ctx(1);
    AffineHeckeAlgebra h(ctx, 3);
    std::mt19937_64 rng(9);
    for (int k = 0; k < 8; ++k) {
        AffHeckeElt a = random_elt(h, rng), b = random_elt(h, rng), c = random_elt(h, rng);
        CHECK(h.mul(h.mul(a, b), c) == h.mul(a, h.mul(b, c)));
    }
    for (int j = 1; j <= 3; ++j) CHECK(h.mul(h.y(j), h.y(j, -1)) == h.one());
    for (int i = 1; i < 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            AffHeckeElt x = h.mul(h.sigma(i), h.mul(h.y(j), h.y(j, -1)));
            CHECK(x == h.sigma(i));
        }
}

TEST_CASE("universal module in rank two") {
    ScalarContext ctx(1);
    Scalar a1 = ctx.parse("3"), a2 = ctx.parse("2/5");
    RightModule m = universal_module(ctx, {a1, a2});
    REQUIRE(m.dim == 2);
    Scalar c = ctx.q_power(2L) - Scalar(1L);
    // basis (e, s): e.y1 = a1 e, s.y1 = a2 s - (q^2-1) a2 e
    CHECK(m.yj(1).get(0, 0) == a1);
    CHECK(m.yj(1).get(0, 1).is_zero());
    CHECK(m.yj(1).get(1, 1) == a2);
    CHECK(m.yj(1).get(1, 0) == -c * a2);
    CHECK(all_pass(verify_hecke_relations(m)));
}

TEST_CASE("universal modules satisfy the defining relations") {
    ScalarContext ctx(2);
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<long> num(1, 9);
    for (int ell = 1; ell <= 3; ++ell) {
        std::vector<Scalar> a;
        for (int j = 0; j < ell; ++j) a.push_back(Scalar(Rational(num(rng), num(rng))));
        RightModule m = universal_module(ctx, a);
        CHECK(m.dim == static_cast<std::size_t>(factorial(ell)));
        for (const auto& r : verify_hecke_relations(m)) CHECK_MESSAGE(r.pass, r.relation);
    }
}

TEST_CASE("induction and pullback") {
    ScalarContext ctx(2);
    RightModule m1 = universal_module(ctx, {ctx.parse("2")});
    RightModule m2 = universal_module(ctx, {ctx.parse("q^2"), ctx.parse("5")});
    RightModule ind = zelevinsky_induce(m1, m2);
    CHECK(ind.dim == 1 * 2 * 3);
    for (const auto& r : verify_hecke_relations(ind)) CHECK_MESSAGE(r.pass, r.relation);
    RightModule fin = zelevinsky_induce(m1.restrict_to_finite(), m2.restrict_to_finite());
    CHECK(fin.sigma == ind.restrict_to_finite().sigma);

    for (int ell = 1; ell <= 3; ++ell) {
        RightModule pb = cherednik_pullback(regular_module(ctx, ell), ctx.parse("7/2"));
        for (const auto& r : verify_hecke_relations(pb)) CHECK_MESSAGE(r.pass, r.relation);
    }
    RightModule sign = cherednik_pullback(one_dim_module(ctx, 2, Scalar(-1L)), Scalar(1L));
    // y2 = q^-2 sigma_1^2 = q^-2
    CHECK(sign.yj(2).get(0, 0) == ctx.q_power(-2L));
}

TEST_CASE("broken module fails the relation check") {
    ScalarContext ctx(1);
    RightModule m = universal_module(ctx, {ctx.parse("2"), ctx.parse("3")});
    m.y[0] = m.y[0] * Scalar(2L);
    CHECK_FALSE(all_pass(verify_hecke_relations(m)));
}

TEST_CASE("module descriptor round trip") {
    ScalarContext ctx(2);
    RightModule m = universal_module(ctx, {ctx.parse("2"), ctx.parse("q")});
    RightModule back = RightModule::from_json(m.to_json());
    CHECK(back.sigma == m.sigma);
    CHECK(back.y == m.y);
    CHECK(back.y_inv == m.y_inv);
    CHECK(back.eigen_candidates == m.eigen_candidates);
}
