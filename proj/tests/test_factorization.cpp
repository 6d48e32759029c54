#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "fill/factorization.hpp"

using namespace fill;

namespace {

Leg full_positive(const Chain& c) {
    Leg leg{c, {}};
    for (int j = 1; j <= static_cast<int>(c.size()); ++j) leg.rotations.push_back(stab_count(leg, j));
    return leg;
}

Leg full_negative(const Chain& c) {
    Leg leg{c, {}};
    for (int j = 1; j <= static_cast<int>(c.size()); ++j) leg.rotations.push_back(-stab_count(leg, j));
    return leg;
}

// all chains with entries <= -2 such that len(c) + len(dual(c)) <= budget
std::vector<Chain> chains_with_dual_budget(int budget) {
    std::vector<Chain> out;
    Chain cur;
    std::function<void(int)> rec = [&](int used) {
        if (!cur.empty()) {
            Chain d = dual_chain(cur);
            if (static_cast<int>(cur.size() + d.size()) <= budget) out.push_back(cur);
        }
        // dual length grows by one per unit below -2, by one entry per entry
        if (used >= budget) return;
        for (int a = -2; a >= -budget; --a) {
            cur.push_back(a);
            rec(used + 1 + (-a - 2));
            cur.pop_back();
        }
    };
    rec(1); // the reserved unit accounts for the dual's base entry
    return out;
}

} // namespace

TEST_CASE("b-pattern extraction") {
    CHECK(extract_bpattern({-3, -3}, {-2, -3, -2}).runs == std::vector<int>{1, 0, 1, 0});
    CHECK(extract_bpattern({-2}, {-2}).runs == std::vector<int>{0, 0});
    CHECK(extract_bpattern({-4}, {-2, -2, -2}).runs == std::vector<int>{2, 0});
    CHECK_THROWS_AS(extract_bpattern({-3}, {-3}), ValidationError);
}

TEST_CASE("b-pattern re-synthesis") {
    CHECK(resynthesize_positive(BPattern{{1, 0, 1, 0}}) == Chain{-3, -3});
    CHECK(resynthesize_positive(BPattern{{0, 0}}) == Chain{-2});
    CHECK(resynthesize_positive(BPattern{{2, 0}}) == Chain{-4});
    CHECK(resynthesize_positive(BPattern{{1, 1, 0}}) == Chain{-3, -2});
}

TEST_CASE("b-pattern round-trips on dual pairs") {
    for (const Chain& c : chains_with_dual_budget(8)) {
        Chain d = dual_chain(c);
        BPattern b = extract_bpattern(c, d);
        CHECK(resynthesize_positive(b) == c);
    }
}

TEST_CASE("daisy rewrite of the fig 3 sublink") {
    DaisyResult r = daisy_rewrite(full_positive({-3, -3}), full_negative({-2, -3, -2}));
    CHECK(r.positive.size() == 5);
    CHECK(r.schedule.size() == 3);
    OpenBook book = translate_book({full_positive({-3, -3}), full_negative({-2, -3, -2})});
    CHECK(verify_certificate(book, r.positive));
    // two boundary-parallel cancellations close the rewrite
    CHECK(r.cancelled.size() == 2);
}

TEST_CASE("smallest dual pair runs in a single daisy step") {
    DaisyResult r = daisy_rewrite(full_positive({-2}), full_negative({-2}));
    CHECK(r.schedule.size() == 1);
    CHECK(r.positive.size() == 2);
    OpenBook book = translate_book({full_positive({-2}), full_negative({-2})});
    CHECK(verify_certificate(book, r.positive));
}

TEST_CASE("asymmetric dual pair agrees with the search oracle") {
    DaisyResult r = daisy_rewrite(full_positive({-4}), full_negative({-2, -2, -2}));
    OpenBook book = translate_book({full_positive({-4}), full_negative({-2, -2, -2})});
    CHECK(verify_certificate(book, r.positive));
    FeasibilityResult oracle = positive_feasible(ab_class(book));
    CHECK(oracle.status == Feasibility::Feasible);
}

TEST_CASE("positive leg may be the one starting in -2s") {
    DaisyResult r = daisy_rewrite(full_positive({-2, -3}), full_negative({-3, -2}));
    OpenBook book = translate_book({full_positive({-2, -3}), full_negative({-3, -2})});
    CHECK(verify_certificate(book, r.positive));
    CHECK(r.schedule.size() == 2); // ends on the outer side
}

TEST_CASE("daisy rewrite accepts the book form and reconstructs the legs") {
    OpenBook book = translate_book({full_positive({-3, -3}), full_negative({-2, -3, -2})});
    DaisyResult r = daisy_rewrite(book);
    CHECK(r.positive.size() == 5);
    CHECK(verify_certificate(book, r.positive));

    // negative leg listed first still works
    OpenBook swapped = translate_book({full_negative({-2, -3, -2}), full_positive({-3, -3})});
    DaisyResult r2 = daisy_rewrite(swapped);
    CHECK(verify_certificate(swapped, r2.positive));

    // trailing -2 levels have no holes; reconstruction resolves them from the
    // twist multiset
    OpenBook trailing = translate_book({full_positive({-3, -2}), full_negative({-2, -3})});
    DaisyResult r3 = daisy_rewrite(trailing);
    CHECK(verify_certificate(trailing, r3.positive));
}

TEST_CASE("daisy output is deterministic") {
    OpenBook book = translate_book({full_positive({-4, -2}), full_negative(dual_chain({-4, -2}))});
    DaisyResult a = daisy_rewrite(book);
    DaisyResult b = daisy_rewrite(book);
    REQUIRE(a.positive.size() == b.positive.size());
    for (std::size_t i = 0; i < a.positive.size(); ++i) {
        CHECK(a.positive[i].mask == b.positive[i].mask);
        CHECK(a.positive[i].sign == b.positive[i].sign);
    }
    CHECK(a.schedule.size() == b.schedule.size());
}

TEST_CASE("daisy rejects non-dual or mixed inputs") {
    CHECK_THROWS_AS(daisy_rewrite(full_positive({-3}), full_negative({-3})), ValidationError);
    Leg mixed{{-4}, {1}};
    CHECK_THROWS_AS(daisy_rewrite(mixed, full_negative({-2, -2, -2})), ValidationError);
    OpenBook not_a_sublink = translate_book(
        {full_positive({-3, -3}), full_negative({-2, -3, -2}), full_positive({-2})});
    CHECK_THROWS_AS(daisy_rewrite(not_a_sublink), ValidationError);
}

TEST_CASE("verify_certificate basics") {
    OpenBook book = translate_book({full_positive({-3, -3}), full_negative({-2, -3, -2})});
    CHECK_FALSE(verify_certificate(book, {}));
    CHECK_THROWS_AS(verify_certificate(book, {OpenBook::Twist{-1, 1}}), ValidationError);
    FeasibilityResult oracle = positive_feasible(ab_class(book));
    REQUIRE(oracle.status == Feasibility::Feasible);
    std::vector<OpenBook::Twist> witness;
    for (auto [mask, count] : oracle.witness)
        for (int k = 0; k < count; ++k) witness.push_back(OpenBook::Twist{+1, mask});
    CHECK(verify_certificate(book, witness));
}

TEST_CASE("daisy sweep over small dual pairs, both orientations") {
    for (const Chain& c : chains_with_dual_budget(6)) {
        Chain d = dual_chain(c);
        CAPTURE(c);
        DaisyResult r = daisy_rewrite(full_positive(c), full_negative(d));
        OpenBook book = translate_book({full_positive(c), full_negative(d)});
        CHECK(verify_certificate(book, r.positive));
        for (const DaisyStep& s : r.schedule) {
            // at most two negative twists are ever alive
            CHECK((s.Nprime.empty() || s.level >= 2));
        }
    }
}
