#include "fill/json_io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace fill {

namespace {

std::vector<std::string> hole_names(const OpenBook& b, HoleMask m) {
    std::vector<std::string> out;
    for (const Hole& h : b.holes_of(m)) out.push_back(hole_name(h));
    return out;
}

std::vector<std::string> hole_names(const std::vector<Hole>& hs) {
    std::vector<std::string> out;
    for (const Hole& h : hs) out.push_back(hole_name(h));
    return out;
}

} // namespace

Json chain_to_json(const Chain& c) { return Json(c); }

Chain chain_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw ValidationError("chain must be a nonempty integer array");
    Chain c;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw ValidationError("chain entries must be integers");
        c.push_back(e.get<int>());
    }
    return c;
}

Json leg_to_json(const Leg& leg) {
    return Json{{"coeffs", leg.coefficients}, {"rot", leg.rotations}};
}

Leg leg_from_json(const Json& j) {
    if (!j.is_object()) throw ValidationError("leg must be an object");
    Leg leg;
    if (j.contains("coeffs")) {
        leg.coefficients = chain_from_json(j.at("coeffs"));
    } else if (j.contains("r")) {
        if (!j.at("r").is_string()) throw ValidationError("leg field \"r\" must be a \"p/q\" string");
        Rational r = rat_parse(j.at("r").get<std::string>());
        if (!(r > 0 && r < 1)) throw ValidationError("leg value r = " + rat_to_string(r) + " not in (0,1)");
        leg.coefficients = cf_expand(Rational(-1) / r);
    } else {
        throw ValidationError("leg needs \"coeffs\" or \"r\"");
    }
    if (!j.contains("rot") || !j.at("rot").is_array())
        throw ValidationError("leg needs a \"rot\" integer array");
    for (const auto& e : j.at("rot")) {
        if (!e.is_number_integer()) throw ValidationError("rotation numbers must be integers");
        leg.rotations.push_back(e.get<int>());
    }
    validate_leg(leg);
    return leg;
}

Json presentation_to_json(const Presentation& p) {
    Json legs = Json::array();
    for (const Leg& leg : p.legs) legs.push_back(leg_to_json(leg));
    return Json{{"legs", legs}};
}

std::vector<Leg> legs_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("legs") || !j.at("legs").is_array())
        throw ValidationError("input needs a \"legs\" array");
    std::vector<Leg> legs;
    for (const auto& e : j.at("legs")) legs.push_back(leg_from_json(e));
    return legs;
}

Presentation presentation_from_json(const Json& j) {
    Presentation p{legs_from_json(j)};
    validate_presentation(p);
    return p;
}

Json book_to_json(const OpenBook& b) {
    Json holes = Json::array();
    for (const Hole& h : b.universe) holes.push_back(hole_name(h));
    std::vector<std::pair<std::vector<std::string>, int>> keys;
    for (const auto& t : b.twists) keys.emplace_back(hole_names(b, t.mask), t.sign);
    std::sort(keys.begin(), keys.end());
    Json twists = Json::array();
    for (const auto& [names, sign] : keys) twists.push_back(Json{{"sign", sign}, {"holes", names}});
    return Json{{"holes", holes}, {"outer", hole_name(b.universe[b.outer])}, {"twists", twists}};
}

Json abclass_to_json(const AbClass& a) {
    Json singles = Json::object();
    Json pairs = Json::object();
    for (std::size_t i = 0; i < a.n(); ++i) {
        if (i == a.outer) continue;
        if (a.single[i] != 0) singles[hole_name(a.universe[i])] = a.single[i];
        for (std::size_t j = i + 1; j < a.n(); ++j) {
            if (j == a.outer) continue;
            int v = a.pair_at(i, j);
            if (v != 0) pairs[hole_name(a.universe[i]) + "|" + hole_name(a.universe[j])] = v;
        }
    }
    return Json{{"singles", singles}, {"pairs", pairs}};
}

Json feasibility_to_json(const FeasibilityResult& r, const OpenBook& book) {
    Json out{{"status", r.status == Feasibility::Feasible ? "Feasible" : "Infeasible"}};
    if (r.status == Feasibility::Feasible) {
        Json witness = Json::array();
        for (const auto& [mask, count] : r.witness)
            witness.push_back(Json{{"holes", hole_names(book, mask)}, {"count", count}});
        out["witness"] = witness;
    }
    return out;
}

Json sublink_to_json(const SublinkChoice& s) {
    return Json{{"positive_leg", s.positive_leg}, {"negative_leg", s.negative_leg},
                {"trunc_pos", s.trunc_pos},       {"trunc_neg", s.trunc_neg},
                {"s_pos", rat_to_string(s.s_pos)}, {"s_neg", rat_to_string(s.s_neg)}};
}

Json trace_to_json(const ObstructionTrace& t) {
    Json out{{"ran", t.ran},
             {"conclusion", t.conclusion == TraceConclusion::NoPositiveFactorization
                                ? "NoPositiveFactorization"
                                : "OutsideHypotheses"}};
    if (!t.note.empty()) out["note"] = t.note;
    if (!t.ran) return out;
    out["flipped"] = t.flipped;
    out["third_leg"] = t.third_leg;
    out["first_leg"] = t.first_leg;
    out["second_leg"] = t.second_leg;
    out["k3"] = t.k3;
    out["q1"] = rat_to_string(t.q1);
    out["q2"] = rat_to_string(t.q2);
    Json levels = Json::array();
    for (const TraceLevel& lv : t.levels)
        levels.push_back(Json{{"J", lv.J},
                              {"threshold", lv.threshold},
                              {"available", lv.available},
                              {"needed", lv.needed},
                              {"case", trace_case_name(lv.case_tag)},
                              {"crossing", lv.crossing}});
    out["levels"] = levels;
    return out;
}

Json daisy_to_json(const DaisyResult& d, const OpenBook& book) {
    Json steps = Json::array();
    for (const DaisyStep& s : d.schedule) {
        Json consumed = Json::array(), produced = Json::array();
        for (const auto& hs : s.consumed) consumed.push_back(hole_names(hs));
        for (const auto& hs : s.produced) produced.push_back(hole_names(hs));
        steps.push_back(Json{{"level", s.level},
                             {"side", std::string(1, s.side)},
                             {"consumed", consumed},
                             {"produced", produced},
                             {"D", hole_names(s.D)},
                             {"N", hole_names(s.N)},
                             {"Nprime", hole_names(s.Nprime)}});
    }
    Json positive = Json::array();
    for (const auto& t : d.positive) positive.push_back(hole_names(book, t.mask));
    Json cancelled = Json::array();
    for (const auto& hs : d.cancelled) cancelled.push_back(hole_names(hs));
    return Json{{"view_outer", hole_name(d.view_outer)},
                {"steps", steps},
                {"positive", positive},
                {"cancelled", cancelled}};
}

Json verdict_to_json(const Verdict& v, const Presentation& p) {
    Json out{{"status", v.status == VerdictStatus::Fillable ? "Fillable" : "NotFillable"}};
    if (v.sublink) out["sublink"] = sublink_to_json(*v.sublink);
    if (v.geometric_certificate) {
        const SublinkChoice& s = *v.sublink;
        const Leg& pos = p.legs[static_cast<std::size_t>(s.positive_leg - 1)];
        const Leg& neg = p.legs[static_cast<std::size_t>(s.negative_leg - 1)];
        Leg pos_trunc{Chain(pos.coefficients.begin(), pos.coefficients.begin() + s.trunc_pos),
                      std::vector<int>(pos.rotations.begin(), pos.rotations.begin() + s.trunc_pos)};
        Leg neg_trunc{Chain(neg.coefficients.begin(), neg.coefficients.begin() + s.trunc_neg),
                      std::vector<int>(neg.rotations.begin(), neg.rotations.begin() + s.trunc_neg)};
        OpenBook sub = translate_book({pos_trunc, neg_trunc});
        out["geometric_certificate"] = daisy_to_json(*v.geometric_certificate, sub);
    }
    if (v.abelian_certificate) {
        OpenBook full = translate_book(p.legs);
        out["abelian_certificate"] = feasibility_to_json(*v.abelian_certificate, full);
    }
    if (v.obstruction) {
        Json ob;
        switch (v.obstruction->kind) {
            case ObstructionKind::FailedOppositeCheck: ob["kind"] = "FailedOppositeCheck"; break;
            case ObstructionKind::NoQualifyingPair: ob["kind"] = "NoQualifyingPair"; break;
            case ObstructionKind::TraceObstruction: ob["kind"] = "TraceObstruction"; break;
        }
        if (!v.obstruction->q_values.empty()) {
            Json qs = Json::array();
            for (const Rational& q : v.obstruction->q_values) qs.push_back(rat_to_string(q));
            ob["q_values"] = qs;
        }
        if (v.obstruction->trace) ob["trace"] = trace_to_json(*v.obstruction->trace);
        out["obstruction"] = ob;
    }
    return out;
}

std::vector<OpenBook::Twist> candidate_from_json(const Json& j, const OpenBook& book) {
    if (!j.is_array()) throw ValidationError("candidate must be an array of hole-name arrays");
    std::vector<OpenBook::Twist> out;
    for (const auto& e : j) {
        if (!e.is_array()) throw ValidationError("candidate twist must be an array of hole names");
        HoleMask m = 0;
        for (const auto& name : e) {
            if (!name.is_string()) throw ValidationError("hole names must be strings");
            m |= book.hole_bit(book.index_of(parse_hole(name.get<std::string>())));
        }
        out.push_back(OpenBook::Twist{+1, m});
    }
    return out;
}

} // namespace fill
