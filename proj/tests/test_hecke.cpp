#include <random>

#include "doctest.h"
#include "qaff/hecke.hpp"

using namespace qaff;

namespace {

std::vector<Composition> compositions(int ell) {
    if (ell == 0) return {{}};
    std::vector<Composition> out;
    for (int first = 1; first <= ell; ++first)
        for (auto rest : compositions(ell - first)) {
            rest.insert(rest.begin(), first);
            out.push_back(rest);
        }
    return out;
}

HeckeElt random_elt(const HeckeAlgebra& h, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> c(-3, 3);
    HeckeElt r;
    for (const Perm& w : all_perms(h.ell()))
        hecke_add(r, w, Scalar(c(rng)) * h.context().q_power(static_cast<long>(c(rng))));
    return r;
}

}  // namespace

TEST_CASE("simple Kazhdan-Lusztig element") {
    ScalarContext ctx(1);
    HeckeAlgebra h(ctx, 2);
    HeckeElt c = h.kl_parabolic({2});
    HeckeElt expect;
    hecke_add(expect, Perm::parse("2 1"), ctx.q_power(-1L));
    hecke_add(expect, Perm::parse("1 2"), -ctx.q());
    CHECK(c == expect);
    CHECK(c == h.kl_simple(1));
    // C_i^2 = -(q + q^-1) C_i
    CHECK(h.mul(c, c) == hecke_scale(c, -(ctx.q() + ctx.q_power(-1L))));
}

TEST_CASE("quadratic and braid relations in the regular representation") {
    ScalarContext ctx(2);
    for (int ell = 2; ell <= 4; ++ell) {
        HeckeAlgebra h(ctx, ell);
        HeckeElt one = h.one();
        for (int i = 1; i < ell; ++i) {
            HeckeElt s = h.sigma(i);
            HeckeElt lhs = h.mul(hecke_sum(s, one), hecke_sum(s, hecke_scale(one, -h.q2())));
            CHECK(lhs.empty());
            CHECK(h.mul(s, h.sigma_inverse(i)) == one);
            if (i + 1 < ell) {
                HeckeElt t = h.sigma(i + 1);
                CHECK(h.mul(h.mul(s, t), s) == h.mul(h.mul(t, s), t));
            }
        }
    }
}

TEST_CASE("multiplication is associative") {
    ScalarContext ctx(1);
    HeckeAlgebra h(ctx, 3);
    std::mt19937_64 rng(3);
    for (int k = 0; k < 10; ++k) {
        HeckeElt a = random_elt(h, rng), b = random_elt(h, rng), c = random_elt(h, rng);
        CHECK(h.mul(h.mul(a, b), c) == h.mul(a, h.mul(b, c)));
    }
}

TEST_CASE("C_w absorbs parabolic descents as -1") {
    ScalarContext ctx(2);
    for (int ell = 1; ell <= 4; ++ell) {
        HeckeAlgebra h(ctx, ell);
        for (const Composition& pi : compositions(ell)) {
            HeckeElt c = h.kl_parabolic(pi);
            Perm w = parabolic_longest(pi);
            for (int i : parabolic_generators(pi)) {
                REQUIRE(w.is_right_descent(i));
                CHECK(h.mul_simple_right(c, i) == hecke_scale(c, Scalar(-1L)));
            }
            // span{C sigma_w} has dimension l!/prod l_r!
            std::vector<Perm> perms = all_perms(ell);
            Echelon e(perms.size());
            for (const Perm& v : perms) {
                HeckeElt x = h.mul(c, h.basis(v));
                SparseVec vec;
                for (std::size_t k = 0; k < perms.size(); ++k) {
                    Scalar s = hecke_coeff(x, perms[k]);
                    if (!s.is_zero()) vec.emplace_back(k, s);
                }
                e.insert(vec);
            }
            long expect = factorial(ell);
            for (int p : pi) expect /= factorial(p);
            CHECK(static_cast<long>(e.rank()) == expect);
        }
    }
}

TEST_CASE("embedding of the parabolic subalgebra is multiplicative") {
    ScalarContext ctx(1);
    HeckeAlgebra h1(ctx, 2), h2(ctx, 2), h(ctx, 4);
    std::mt19937_64 rng(5);
    for (int k = 0; k < 5; ++k) {
        HeckeElt a = random_elt(h1, rng), b = random_elt(h2, rng), c = random_elt(h1, rng), d = random_elt(h2, rng);
        CHECK(h.mul(iota_embed(a, 2, b, 2), iota_embed(c, 2, d, 2)) == iota_embed(h1.mul(a, c), 2, h2.mul(b, d), 2));
    }
    CHECK(iota_embed(h2.one(), 2, h2.sigma(1), 2) == h.sigma(3));
}

TEST_CASE("json round trip") {
    ScalarContext ctx(2);
    HeckeAlgebra h(ctx, 3);
    HeckeElt c = h.kl_parabolic({2, 1});
    CHECK(h.from_json(h.to_json(c)) == c);
}
