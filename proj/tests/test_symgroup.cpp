#include <algorithm>
#include <set>

#include "doctest.h"
#include "qaff/errors.hpp"
#include "qaff/symgroup.hpp"

using namespace qaff;

TEST_CASE("one-line notation") {
    Perm w = Perm::parse("2 1 3");
    CHECK(w.length() == 1);
    CHECK(w.str() == "2 1 3");
    CHECK(w == Perm::simple(3, 1));
    CHECK_THROWS_AS(Perm::parse("1 1 2"), UsageError);
}

TEST_CASE("reduced words multiply back to the element") {
    for (int ell = 1; ell <= 5; ++ell)
        for (const Perm& w : all_perms(ell)) {
            std::vector<int> word = w.reduced_word();
            CHECK(static_cast<int>(word.size()) == w.length());
            Perm x = Perm::identity(ell);
            for (int i : word) x = x * Perm::simple(ell, i);
            CHECK(x == w);
            CHECK((w * w.inverse()).is_identity());
        }
}

TEST_CASE("parabolic subgroups and longest elements") {
    CHECK(elements_of_parabolic({2, 1}).size() == 2);
    CHECK(elements_of_parabolic({2, 2}).size() == 4);
    CHECK(elements_of_parabolic({3, 1}).size() == 6);
    CHECK(parabolic_longest({2, 1}).str() == "2 1 3");
    CHECK(parabolic_longest({3}).str() == "3 2 1");
    for (const Perm& w : elements_of_parabolic({2, 2})) CHECK(w.length() <= parabolic_longest({2, 2}).length());
}

TEST_CASE("minimal coset representatives factor every element") {
    for (int l1 = 1; l1 <= 3; ++l1)
        for (int l2 = 1; l2 <= 3; ++l2) {
            auto reps = min_coset_reps(l1, l2);
            CHECK(static_cast<long>(reps.size()) == binomial(l1 + l2, l1));
            std::set<std::pair<Perm, Perm>> seen;
            for (const Perm& w : all_perms(l1 + l2)) {
                Perm u, d;
                coset_factor({l1, l2}, w, u, d);
                CHECK(u * d == w);
                CHECK(u.length() + d.length() == w.length());
                CHECK(std::find(reps.begin(), reps.end(), d) != reps.end());
                seen.insert({u, d});
            }
            CHECK(static_cast<long>(seen.size()) == factorial(l1 + l2));
        }
}
