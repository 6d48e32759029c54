#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fill/fillability.hpp"

using namespace fill;

namespace {

Presentation fig2() {
    return Presentation{{Leg{{-2, -3, -2}, {-1, -1, 0}}, Leg{{-2, -3}, {-1, 1}}, Leg{{-3, -3}, {2, 1}}}};
}

} // namespace

TEST_CASE("find_sublinks on the worked example") {
    auto subs = find_sublinks(fig2());
    REQUIRE(subs.size() == 1);
    CHECK(subs[0].positive_leg == 3);
    CHECK(subs[0].negative_leg == 1);
    CHECK(subs[0].trunc_pos == 2);
    CHECK(subs[0].trunc_neg == 3);
    CHECK(subs[0].s_pos == Rational(3, 8));
    CHECK(subs[0].s_neg == Rational(5, 8));
}

TEST_CASE("find_sublinks on the special type manifold") {
    for (const Presentation& p : enumerate_structures({{-3}, {-3}, {-3}}))
        CHECK(find_sublinks(p).empty());
}

TEST_CASE("find_sublinks picks up [-2] prefixes") {
    Presentation p{{Leg{{-2}, {1}}, Leg{{-2}, {-1}}, Leg{{-3}, {0}}}};
    auto subs = find_sublinks(p);
    REQUIRE(!subs.empty());
    CHECK(subs[0].positive_leg == 1);
    CHECK(subs[0].negative_leg == 2);
    CHECK(subs[0].trunc_pos == 1);
    CHECK(subs[0].trunc_neg == 1);
    CHECK(subs[0].s_pos == Rational(1, 2));
}

TEST_CASE("q_condition") {
    auto fig = q_condition(fig2());
    REQUIRE(fig.has_value());
    CHECK(*fig == std::pair<int, int>(3, 1));

    Presentation small{{Leg{{-3}, {2}}, Leg{{-3}, {2}}, Leg{{-2}, {-1}}}};
    CHECK_FALSE(q_condition(small).has_value()); // 1/3 + 1/2 < 1

    Presentation mixed{{Leg{{-3, -3}, {0, 1}}, Leg{{-3}, {0}}, Leg{{-4}, {1}}}};
    CHECK_FALSE(q_condition(mixed).has_value()); // all first unknots mixed
}

TEST_CASE("decide on the worked example") {
    Verdict v = decide(fig2());
    CHECK(v.status == VerdictStatus::Fillable);
    REQUIRE(v.sublink.has_value());
    CHECK(v.sublink->positive_leg == 3);
    CHECK(v.sublink->negative_leg == 1);
    REQUIRE(v.geometric_certificate.has_value());
    CHECK(v.geometric_certificate->positive.size() == 5);
    REQUIRE(v.abelian_certificate.has_value());
    CHECK(v.abelian_certificate->status == Feasibility::Feasible);
}

TEST_CASE("decide on the special type manifold") {
    for (const Presentation& p : enumerate_structures({{-3}, {-3}, {-3}})) {
        Verdict v = decide(p, DecideOptions{14, false});
        CHECK(v.status == VerdictStatus::NotFillable);
        REQUIRE(v.obstruction.has_value());
    }
}

TEST_CASE("all-positive starts fail the opposite check") {
    Presentation p{{Leg{{-2}, {1}}, Leg{{-2}, {1}}, Leg{{-3}, {2}}}};
    Verdict v = decide(p);
    CHECK(v.status == VerdictStatus::NotFillable);
    REQUIRE(v.obstruction.has_value());
    CHECK(v.obstruction->kind == ObstructionKind::FailedOppositeCheck);
}

TEST_CASE("obstruction trace on the obstructed LL structure") {
    Presentation p{{Leg{{-3}, {2}}, Leg{{-3}, {-2}}, Leg{{-3}, {2}}}};
    ObstructionTrace t = obstruction_trace(p);
    CHECK(t.ran);
    CHECK(t.flipped); // two fully positive starts
    CHECK(t.conclusion == TraceConclusion::NoPositiveFactorization);
    // cross-checked against the oracle
    CHECK(positive_feasible(ab_class(translate_book(p.legs))).status == Feasibility::Infeasible);
}

TEST_CASE("obstruction trace exits on the fillable example") {
    ObstructionTrace t = obstruction_trace(fig2());
    CHECK(t.ran);
    CHECK_FALSE(t.flipped);
    CHECK(t.third_leg == 3);
    CHECK(t.first_leg == 1); // q = 5/8 > 1/2
    CHECK(t.conclusion == TraceConclusion::OutsideHypotheses);
}

TEST_CASE("obstruction trace precondition") {
    Presentation no_negative{{Leg{{-2}, {1}}, Leg{{-3}, {0}}, Leg{{-3}, {0}}}};
    ObstructionTrace t = obstruction_trace(no_negative);
    CHECK_FALSE(t.ran);
    CHECK(t.conclusion == TraceConclusion::OutsideHypotheses);
}

TEST_CASE("GLS pair on M(-1;1/2,1/2,1/3)") {
    // passes the opposite-stabilization pre-check yet is not fillable
    Presentation obstructed{{Leg{{-2}, {1}}, Leg{{-2}, {1}}, Leg{{-3}, {-2}}}};
    CHECK(opposite_start_check(obstructed));
    Verdict v = decide(obstructed);
    CHECK(v.status == VerdictStatus::NotFillable);
    CHECK(positive_feasible(ab_class(translate_book(obstructed.legs))).status == Feasibility::Infeasible);
    // the trace proves it
    ObstructionTrace t = obstruction_trace(obstructed);
    CHECK(t.ran);
    CHECK(t.conclusion == TraceConclusion::NoPositiveFactorization);
    REQUIRE(v.obstruction.has_value());
    CHECK(v.obstruction->kind == ObstructionKind::TraceObstruction);

    Presentation fillable{{Leg{{-2}, {1}}, Leg{{-2}, {-1}}, Leg{{-3}, {0}}}};
    Verdict w = decide(fillable);
    CHECK(w.status == VerdictStatus::Fillable);
}

TEST_CASE("criteria equivalence and oracle agreement at desk scale") {
    // every structure on a few small manifolds: find_sublinks nonempty iff
    // q_condition present, and decide matches the feasibility oracle
    std::vector<std::vector<Chain>> manifolds = {
        {{-2}, {-2}, {-2}},
        {{-2}, {-2}, {-3}},
        {{-3}, {-3}, {-3}},
        {{-2}, {-3}, {-4}},
        {{-2, -2}, {-2}, {-3}},
    };
    for (const auto& chains : manifolds) {
        for (const Presentation& p : enumerate_structures(chains)) {
            bool sub = !find_sublinks(p).empty();
            bool q = q_condition(p).has_value();
            CHECK(sub == q);
            Verdict v = decide(p, DecideOptions{14, false});
            auto oracle = positive_feasible(ab_class(translate_book(p.legs)));
            CHECK((v.status == VerdictStatus::Fillable) == (oracle.status == Feasibility::Feasible));
            ObstructionTrace t = obstruction_trace(p);
            if (t.ran && t.conclusion == TraceConclusion::NoPositiveFactorization) {
                CHECK(oracle.status == Feasibility::Infeasible);
                CHECK(v.status == VerdictStatus::NotFillable);
            }
            if (v.status == VerdictStatus::NotFillable && opposite_start_check(p))
                CHECK_FALSE(q_condition(p).has_value());
        }
    }
}

TEST_CASE("fillable certificates verify") {
    std::vector<std::vector<Chain>> manifolds = {{{-2}, {-2}, {-3}}, {{-2, -3}, {-3, -3}, {-2}}};
    for (const auto& chains : manifolds) {
        for (const Presentation& p : enumerate_structures(chains)) {
            Verdict v = decide(p);
            if (v.status != VerdictStatus::Fillable) continue;
            REQUIRE(v.sublink.has_value());
            REQUIRE(v.geometric_certificate.has_value());
            REQUIRE(v.abelian_certificate.has_value());
            CHECK(v.abelian_certificate->status == Feasibility::Feasible);
            CHECK(v.sublink->s_pos + v.sublink->s_neg == 1);
        }
    }
}
