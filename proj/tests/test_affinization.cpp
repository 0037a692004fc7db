#include <random>

#include "doctest.h"
#include "qaff/affinization.hpp"
#include "qaff/errors.hpp"

using namespace qaff;

namespace {

std::vector<Scalar> random_params(std::mt19937_64& rng, int ell) {
    std::uniform_int_distribution<long> num(1, 12);
    std::vector<Scalar> a;
    for (int j = 0; j < ell; ++j) a.push_back(Scalar(Rational(num(rng), num(rng))));
    return a;
}

void check_all(const std::vector<RelationResult>& rs) {
    for (const auto& r : rs) CHECK_MESSAGE(r.pass, r.relation);
}

}  // namespace

TEST_CASE("evaluation modules satisfy the affine relations") {
    for (int n = 1; n <= 3; ++n) {
        ScalarContext ctx(n);
        for (const char* a : {"1", "q", "2/7"}) {
            UqModule v = evaluation_module(ctx, ctx.parse(a));
            check_all(verify_affine_relations(v));
        }
        UqModule vv = tensor(evaluation_module(ctx, ctx.parse("3")), evaluation_module(ctx, ctx.parse("q^2")));
        check_all(verify_affine_relations(vv));
    }
}

TEST_CASE("F of a one-dimensional module is an evaluation module") {
    ScalarContext ctx(2);
    Scalar a = ctx.parse("5/2");
    FunctorResult f = functor_F(universal_module(ctx, {a}));
    UqModule v = evaluation_module(ctx, a);
    CHECK(f.module.dim == 3);
    CHECK(f.module.xp == v.xp);
    CHECK(f.module.xm == v.xm);
    CHECK(f.module.k == v.k);
}

TEST_CASE("F of universal modules") {
    std::mt19937_64 rng(17);
    for (int n = 1; n <= 3; ++n) {
        ScalarContext ctx(n);
        for (int ell = 1; ell <= 3; ++ell) {
            auto a = random_params(rng, ell);
            FunctorResult f = functor_F(universal_module(ctx, a));
            check_all(verify_affine_relations(f.module));
            CHECK(central_element_trivial(f.module));
        }
    }
}

TEST_CASE("perturbing x0 breaks the commutator relation") {
    ScalarContext ctx(2);
    FunctorResult f = functor_F(universal_module(ctx, {ctx.parse("2"), ctx.parse("3")}));
    UqModule w = f.module;
    w.xp[0] = w.xp[0] * Scalar(2L);
    bool found = false;
    for (const auto& r : verify_affine_relations(w))
        if (r.relation == "[x+0, x-0]") {
            found = true;
            CHECK_FALSE(r.pass);
        }
    CHECK(found);
}

TEST_CASE("F rejects modules that fail the Hecke relations") {
    ScalarContext ctx(2);
    RightModule m = universal_module(ctx, {ctx.parse("2"), ctx.parse("3")});
    m.y[0] = m.y[0] * Scalar(3L);
    CHECK_THROWS_AS(functor_F(m), MathError);
    CHECK_THROWS_AS(verify_affine_relations(natural_rep(ctx).v), UsageError);
}

TEST_CASE("R-matrix intertwines the affine generator") {
    for (int n = 1; n <= 3; ++n) {
        ScalarContext ctx(n);
        NaturalRep nr = natural_rep(ctx);
        Matrix r = rcheck(ctx);
        Matrix id = Matrix::identity(static_cast<std::size_t>(n + 1));
        CHECK(r * kron(id, nr.x_theta_minus) == kron(nr.x_theta_minus, nr.k_theta_inv) * r);
    }
}

TEST_CASE("F(M_a) is the tensor product of evaluation modules") {
    ScalarContext ctx(2);
    std::vector<Scalar> a{ctx.parse("2"), ctx.parse("3/5")};
    FunctorResult f = functor_F(universal_module(ctx, a));
    UqModule t = tensor(evaluation_module(ctx, a[0]), evaluation_module(ctx, a[1]));
    IsoResult iso = uq_isomorphism(f.module, t);
    CHECK(iso.isomorphic);
    CHECK(is_intertwiner(f.module.operators(), t.operators(), iso.intertwiner));
    UqModule swapped = tensor(evaluation_module(ctx, a[1]), evaluation_module(ctx, ctx.parse("7")));
    CHECK_FALSE(uq_isomorphism(f.module, swapped).isomorphic);
}

TEST_CASE("evaluation pullback") {
    for (int n = 1; n <= 3; ++n) {
        ScalarContext ctx(n);
        Scalar a = ctx.parse("3");
        UqModule v = natural_rep(ctx).v;
        UqModule va = jimbo_eval_pullback(v, a);
        check_all(verify_affine_relations(va));
        CHECK(va.xp[1] == v.xp[1]);
        Matrix kprod = Matrix::identity(v.dim);
        for (int i = 1; i <= n; ++i) kprod = kprod * v.k[static_cast<std::size_t>(i)];
        CHECK(va.k[0] * kprod == Matrix::identity(v.dim));
        UqModule expect = evaluation_module(ctx, a * ctx.q_power(Rational(-2, n + 1)));
        CHECK(va.xp[0] == expect.xp[0]);
        CHECK(va.xm[0] == expect.xm[0]);
    }
    ScalarContext ctx(2);
    UqModule big = jimbo_eval_pullback(tensor_rep(natural_rep(ctx).v, 2), ctx.parse("2"));
    check_all(verify_affine_relations(big));
}

TEST_CASE("evaluation duality for small Hecke modules") {
    ScalarContext ctx(2);
    for (const Scalar& c : {Scalar(-1L), ctx.q_power(2L)}) {
        DualityResult d = evaluation_duality(one_dim_module(ctx, 2, c), ctx.parse("q"));
        CHECK(d.iso.isomorphic);
    }
    DualityResult d = evaluation_duality(regular_module(ctx, 1), Scalar(1L));
    CHECK(d.iso.isomorphic);
}
