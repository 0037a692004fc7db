#include "doctest.h"
#include "qaff/uq_rep.hpp"

using namespace qaff;

TEST_CASE("natural representation") {
    ScalarContext c1(1);
    NaturalRep v1 = natural_rep(c1);
    CHECK(v1.v.xp[1].get(0, 1) == Scalar(1L));
    CHECK(v1.v.xp[1].nonzeros() == 1);
    CHECK(v1.v.k[1] == Matrix::diagonal({c1.q(), c1.q_power(-1L)}));

    ScalarContext c2(2);
    NaturalRep v2 = natural_rep(c2);
    CHECK(v2.x_theta_minus.get(2, 0) == Scalar(1L));
    CHECK(v2.x_theta_minus.nonzeros() == 1);
    Matrix prod = Matrix::identity(3);
    for (const auto& t : v2.v.t) prod = prod * t;
    CHECK(prod == Matrix::identity(3));
    for (const auto& r : verify_quantum_relations(v2.v)) CHECK_MESSAGE(r.pass, r.relation);
    CHECK(character(v2.v) == std::map<Weight, std::size_t>{{epsilon(2, 1), 1}, {epsilon(2, 2), 1}, {epsilon(2, 3), 1}});
}

TEST_CASE("tensor products") {
    ScalarContext ctx(1);
    UqModule v = natural_rep(ctx).v;
    UqModule vv = tensor_rep(v, 2);
    // x+ (v2 (x) v1) = q v1 (x) v1
    SparseVec img = vv.xp[1].apply(unit_vector(2));
    CHECK(img == SparseVec{{0, ctx.q()}});
    CHECK(tensor_rep(v, 1).xp == v.xp);
    CHECK(vv.weights[0] == Weight{2});
    CHECK(character(vv) == std::map<Weight, std::size_t>{{{-2}, 1}, {{0}, 2}, {{2}, 1}});
    for (int n = 1; n <= 3; ++n) {
        ScalarContext c(n);
        UqModule t3 = tensor_rep(natural_rep(c).v, 3);
        for (const auto& r : verify_quantum_relations(t3)) CHECK_MESSAGE(r.pass, r.relation);
    }
}

TEST_CASE("highest-weight vectors of V (x) V for sl2") {
    ScalarContext ctx(1);
    UqModule vv = tensor_rep(natural_rep(ctx).v, 2);
    auto hw = highest_weight_vectors(vv);
    REQUIRE(hw.size() == 2);
    REQUIRE(hw[{2}].size() == 1);
    CHECK(span_of(4, hw[{2}]) == span_of(4, {unit_vector(0)}));
    REQUIRE(hw[{0}].size() == 1);
    SparseVec expect{{1, Scalar(1L)}, {2, -ctx.q_power(-1L)}};
    CHECK(span_of(4, hw[{0}]) == span_of(4, {expect}));
    OperatorSet ops = vv.operators();
    CHECK(spin(ops, {unit_vector(0)}).rank() == 3);
    CHECK(spin(ops, {expect}).rank() == 1);
    CHECK(spin(ops, {}).rank() == 0);
    CHECK(level_of(fundamental_weight(3, 2)) == 2);
}

TEST_CASE("R-matrix") {
    ScalarContext ctx(1);
    Matrix r = rcheck(ctx);
    Scalar q = ctx.q(), q2 = ctx.q_power(2L);
    CHECK(r.apply(unit_vector(1)) == SparseVec{{2, q}});
    CHECK(r.apply(unit_vector(2)) == SparseVec{{1, q}, {2, q2 - Scalar(1L)}});
    Matrix id = Matrix::identity(4);
    CHECK(((r + id) * (r - id * q2)).is_zero());
    // eigenspace dimensions 3 (q^2) and 1 (-1)
    CHECK(kernel(r - id * q2).size() == 3);
    CHECK(kernel(r + id).size() == 1);
    CHECK_THROWS_AS(rcheck_i(ctx, 3, 3), UsageError);
}

TEST_CASE("R-matrices commute with the quantum group and satisfy the Hecke relations") {
    for (int n = 1; n <= 3; ++n) {
        ScalarContext ctx(n);
        for (int ell = 2; ell <= 3; ++ell) {
            UqModule t = tensor_rep(natural_rep(ctx).v, ell);
            OperatorSet ops = t.operators();
            std::vector<Matrix> rs;
            for (int i = 1; i < ell; ++i) rs.push_back(rcheck_i(ctx, ell, i));
            Matrix id = Matrix::identity(t.dim);
            Scalar q2 = ctx.q_power(2L);
            for (std::size_t i = 0; i < rs.size(); ++i) {
                for (const auto& g : ops.ops) CHECK(rs[i] * g == g * rs[i]);
                CHECK(((rs[i] + id) * (rs[i] - id * q2)).is_zero());
                if (i + 1 < rs.size()) CHECK(rs[i] * rs[i + 1] * rs[i] == rs[i + 1] * rs[i] * rs[i + 1]);
            }
        }
    }
}

TEST_CASE("Jimbo functor on small Hecke modules") {
    ScalarContext ctx(2);
    JimboResult sgn = jimbo_J(one_dim_module(ctx, 2, Scalar(-1L)), 2);
    CHECK(sgn.module.dim == 3);
    auto hw = highest_weight_vectors(sgn.module);
    REQUIRE(hw.size() == 1);
    CHECK(hw.begin()->first == Weight{0, 1});

    JimboResult triv = jimbo_J(one_dim_module(ctx, 2, ctx.q_power(2L)), 2);
    CHECK(triv.module.dim == 6);
    hw = highest_weight_vectors(triv.module);
    REQUIRE(hw.size() == 1);
    CHECK(hw.begin()->first == Weight{2, 0});
    for (const auto& r : verify_quantum_relations(triv.module)) CHECK_MESSAGE(r.pass, r.relation);

    for (int n = 1; n <= 3; ++n) {
        ScalarContext c(n);
        for (int ell = 1; ell <= 3; ++ell) {
            JimboResult reg = jimbo_J(regular_module(c, ell), n);
            long expect = 1;
            for (int k = 0; k < ell; ++k) expect *= n + 1;
            CHECK(static_cast<long>(reg.module.dim) == expect);
            UqModule tv = tensor_rep(natural_rep(c).v, ell);
            CHECK(reg.module.xp == tv.xp);
            CHECK(reg.module.xm == tv.xm);
        }
    }
}

TEST_CASE("irreducible highest-weight modules and isomorphism") {
    ScalarContext ctx(2);
    UqModule l2 = irreducible_highest_weight(ctx, {0, 1});
    CHECK(l2.dim == 3);
    UqModule adj = irreducible_highest_weight(ctx, {1, 1});
    CHECK(adj.dim == 8);
    for (const auto& r : verify_quantum_relations(adj)) CHECK_MESSAGE(r.pass, r.relation);
    JimboResult sgn = jimbo_J(one_dim_module(ctx, 2, Scalar(-1L)), 2);
    IsoResult iso = uq_isomorphism(sgn.module, l2);
    CHECK(iso.isomorphic);
    CHECK(is_intertwiner(sgn.module.operators(), l2.operators(), iso.intertwiner));
    CHECK_FALSE(uq_isomorphism(sgn.module, irreducible_highest_weight(ctx, {1, 0})).isomorphic);
    IsoResult self = uq_isomorphism(adj, adj);
    CHECK(self.isomorphic);

    auto cert = is_irreducible(adj.operators(), adj.probes());
    CHECK(cert.irreducible);
    CHECK(check_certificate(adj.operators(), adj.probes(), cert));
    UqModule vv = tensor_rep(natural_rep(ScalarContext(1)).v, 2);
    auto red = is_irreducible(vv.operators(), vv.probes());
    CHECK_FALSE(red.irreducible);
    CHECK(check_certificate(vv.operators(), vv.probes(), red));
}

TEST_CASE("descriptor round trip") {
    ScalarContext ctx(2);
    UqModule w = tensor_rep(natural_rep(ctx).v, 2);
    UqModule back = UqModule::from_json(w.to_json());
    CHECK(back.xp == w.xp);
    CHECK(back.t == w.t);
    CHECK(back.weights == w.weights);
}
