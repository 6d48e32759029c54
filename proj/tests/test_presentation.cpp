#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fill/presentation.hpp"

using namespace fill;

namespace {

Presentation fig2() {
    return Presentation{{Leg{{-2, -3, -2}, {-1, -1, 0}}, Leg{{-2, -3}, {-1, 1}}, Leg{{-3, -3}, {2, 1}}}};
}

} // namespace

TEST_CASE("stabilization counts") {
    auto c3 = stab_counts(Leg{{-3, -3}, {2, 1}});
    CHECK(c3 == std::vector<std::pair<int, int>>{{2, 0}, {1, 0}});
    auto c1 = stab_counts(Leg{{-2, -3, -2}, {-1, -1, 0}});
    CHECK(c1 == std::vector<std::pair<int, int>>{{0, 1}, {0, 1}, {0, 0}});
    CHECK(stab_counts(Leg{{-2}, {1}}) == std::vector<std::pair<int, int>>{{1, 0}});
}

TEST_CASE("leg validation names the violated invariant") {
    CHECK_THROWS_AS(validate_leg(Leg{{-2}, {2}}), ValidationError);      // range
    CHECK_THROWS_AS(validate_leg(Leg{{-3}, {1}}), ValidationError);      // parity
    CHECK_THROWS_AS(validate_leg(Leg{{-1}, {0}}), ValidationError);      // entry > -2
    CHECK_THROWS_AS(validate_leg(Leg{{-2, -2}, {1}}), ValidationError);  // length mismatch
}

TEST_CASE("tb accessor") {
    Leg leg{{-2, -3, -2}, {-1, -1, 0}};
    CHECK(tb(leg, 1) == -2);
    CHECK(tb(leg, 2) == -2);
    CHECK(tb(leg, 3) == -1);
}

TEST_CASE("one sided prefix") {
    PrefixData a = one_sided_prefix(Leg{{-2, -3}, {-1, 1}});
    CHECK(a.k == 1);
    CHECK(a.sign == Sign::Negative);
    CHECK(a.q == Rational(1, 2));

    PrefixData b = one_sided_prefix(Leg{{-2, -3, -2}, {-1, -1, 0}});
    CHECK(b.k == 3);
    CHECK(b.sign == Sign::Negative);
    CHECK(b.q == Rational(5, 8));

    PrefixData c = one_sided_prefix(Leg{{-3, -3}, {0, 1}});
    CHECK(c.k == 0);
    CHECK(c.sign == Sign::None);
    CHECK(c.q == 0);
}

TEST_CASE("opposite start check") {
    CHECK(opposite_start_check(fig2()));
    Presentation all_pos{{Leg{{-2}, {1}}, Leg{{-2}, {1}}, Leg{{-3}, {2}}}};
    CHECK_FALSE(opposite_start_check(all_pos));
    Presentation mixed{{Leg{{-2}, {1}}, Leg{{-2}, {-1}}, Leg{{-3}, {0}}}};
    CHECK(opposite_start_check(mixed));
}

TEST_CASE("enumeration counts and order") {
    CHECK(count_structures({{-2, -3, -2}, {-2, -3}, {-3, -3}}) == 96);
    CHECK(count_structures({{-3}, {-3}, {-3}}) == 27);
    CHECK(count_structures({{-2}, {-2}, {-2}}) == 8);

    auto all = enumerate_structures({{-3}, {-3}, {-3}});
    CHECK(all.size() == 27);
    CHECK(all.front().legs[0].rotations == std::vector<int>{-2});
    CHECK(all.back().legs[2].rotations == std::vector<int>{2});

    // no duplicates, and lexicographic over the flattened rotations
    std::set<std::vector<int>> seen;
    std::vector<int> prev;
    for (const Presentation& p : all) {
        std::vector<int> flat;
        for (const Leg& leg : p.legs)
            flat.insert(flat.end(), leg.rotations.begin(), leg.rotations.end());
        CHECK(seen.insert(flat).second);
        if (!prev.empty()) CHECK(prev < flat);
        prev = flat;
    }

    auto big = enumerate_structures({{-2, -3, -2}, {-2, -3}, {-3, -3}});
    std::set<std::vector<std::vector<int>>> uniq;
    for (const Presentation& p : big)
        uniq.insert({p.legs[0].rotations, p.legs[1].rotations, p.legs[2].rotations});
    CHECK(uniq.size() == 96);
}

TEST_CASE("prefix value is bounded by the leg value") {
    for (const Presentation& p : enumerate_structures({{-2, -3}, {-4}, {-3, -2}})) {
        for (const Leg& leg : p.legs) {
            PrefixData pre = one_sided_prefix(leg);
            Rational r = chain_value(leg.coefficients);
            CHECK(pre.q <= r);
            if (pre.k == static_cast<int>(leg.coefficients.size())) CHECK(pre.q == r);
        }
    }
}

TEST_CASE("presentation validation") {
    CHECK_THROWS_AS(validate_presentation(Presentation{{Leg{{-2}, {1}}, Leg{{-2}, {1}}}}), ValidationError);
    CHECK_NOTHROW(validate_presentation(fig2()));
}
