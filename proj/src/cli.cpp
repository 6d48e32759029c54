#include "fill/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "fill/json_io.hpp"

namespace fill {

namespace {

struct IoOpts {
    std::string input_path;
    std::string inline_json;
    std::string format = "text";
};

void add_io(CLI::App* cmd, IoOpts& io, bool with_input = true) {
    if (with_input) {
        cmd->add_option("--input", io.input_path, "read the JSON input from a file");
        cmd->add_option("--json", io.inline_json, "inline JSON input");
    }
    cmd->add_option("--format", io.format, "output format")->check(CLI::IsMember({"text", "json"}));
}

Json load_input(const IoOpts& io) {
    std::string text;
    if (!io.input_path.empty()) {
        std::ifstream f(io.input_path);
        if (!f) throw ValidationError("cannot open input file '" + io.input_path + "'");
        std::stringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    } else if (!io.inline_json.empty()) {
        text = io.inline_json;
    } else {
        throw ValidationError("no input: pass --input FILE or --json STRING");
    }
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw ValidationError(std::string("invalid JSON: ") + e.what());
    }
}

void emit(std::ostream& out, const IoOpts& io, const Json& j, const std::string& text) {
    if (io.format == "json")
        out << j.dump(2) << "\n";
    else
        out << text;
}

std::string verdict_text(const Verdict& v) {
    std::ostringstream os;
    if (v.status == VerdictStatus::Fillable) {
        os << "Fillable";
        if (v.sublink)
            os << " via sublink (positive leg " << v.sublink->positive_leg << " truncated at "
               << v.sublink->trunc_pos << ", negative leg " << v.sublink->negative_leg << " truncated at "
               << v.sublink->trunc_neg << "; s = " << rat_to_string(v.sublink->s_pos) << " + "
               << rat_to_string(v.sublink->s_neg) << " = 1)";
        if (v.geometric_certificate)
            os << "\n  daisy certificate: " << v.geometric_certificate->positive.size()
               << " positive twists, verified";
        if (v.abelian_certificate)
            os << "\n  full-book oracle: "
               << (v.abelian_certificate->status == Feasibility::Feasible ? "Feasible" : "Infeasible");
    } else {
        os << "NotFillable";
        if (v.obstruction) {
            switch (v.obstruction->kind) {
                case ObstructionKind::FailedOppositeCheck:
                    os << " (no oppositely stabilized starting pair)";
                    break;
                case ObstructionKind::NoQualifyingPair: {
                    os << " (no pair with q_i + q_j >= 1; q =";
                    for (const Rational& q : v.obstruction->q_values) os << " " << rat_to_string(q);
                    os << ")";
                    break;
                }
                case ObstructionKind::TraceObstruction:
                    os << " (obstruction trace: no positive factorization)";
                    break;
            }
        }
    }
    os << "\n";
    return os.str();
}

int cmd_cf(const IoOpts& io, const Json& in, std::ostream& out) {
    Json result = Json::object();
    std::ostringstream text;
    if (in.contains("expand")) {
        Rational x = rat_parse(in.at("expand").get<std::string>());
        Chain c = cf_expand(x);
        result["expand"] = c;
        text << "expand " << rat_to_string(x) << " -> " << Json(c).dump() << "\n";
    }
    if (in.contains("eval")) {
        Chain c = chain_from_json(in.at("eval"));
        Rational v = cf_eval(c);
        result["eval"] = rat_to_string(v);
        text << "eval " << Json(c).dump() << " -> " << rat_to_string(v) << "\n";
    }
    if (in.contains("dual")) {
        Chain c = chain_from_json(in.at("dual"));
        Chain d = dual_chain(c);
        result["dual"] = d;
        text << "dual " << Json(c).dump() << " -> " << Json(d).dump() << "\n";
    }
    if (in.contains("truncations")) {
        Chain c = chain_from_json(in.at("truncations"));
        Json vals = Json::array();
        for (const Rational& s : truncation_values(c)) vals.push_back(rat_to_string(s));
        result["truncations"] = vals;
        text << "truncations " << Json(c).dump() << " -> " << vals.dump() << "\n";
    }
    if (in.contains("pair")) {
        Chain a = chain_from_json(in.at("pair").at(0));
        Chain b = chain_from_json(in.at("pair").at(1));
        auto hit = find_truncation_pair(a, b);
        if (hit)
            result["pair"] = Json{{"mA", hit->first}, {"mB", hit->second}};
        else
            result["pair"] = nullptr;
        text << "pair -> " << (hit ? "(" + std::to_string(hit->first) + "," + std::to_string(hit->second) + ")" : "absent")
             << "\n";
    }
    if (in.contains("blowdown")) {
        FramedChain f;
        for (const auto& e : in.at("blowdown")) f.push_back(e.get<long long>());
        bool ok = blowdown_to_zero(f);
        result["blowdown"] = ok;
        text << "blowdown -> " << (ok ? "true" : "false") << "\n";
    }
    if (result.empty())
        throw ValidationError("cf expects at least one of: expand, eval, dual, truncations, pair, blowdown");
    emit(out, io, result, text.str());
    return 0;
}

int cmd_survey(const IoOpts& io, const Json& in, bool cross_check, bool force, int max_holes,
               std::ostream& out, std::ostream& err) {
    if (!in.contains("chains") || !in.at("chains").is_array() || in.at("chains").size() != 3)
        throw ValidationError("survey input needs \"chains\": [three integer arrays]");
    std::vector<Chain> chains;
    for (const auto& e : in.at("chains")) chains.push_back(chain_from_json(e));

    // every structure on the manifold shares one page
    long long holes = 1; // rho^in
    for (const Chain& c : chains) {
        Leg probe{c, std::vector<int>(c.size(), 0)};
        for (int j = 1; j <= static_cast<int>(c.size()); ++j) holes += stab_count(probe, j);
    }
    if (cross_check && holes > max_holes && !force)
        throw ValidationError("cross-check refused: " + std::to_string(holes) + " holes exceed --max-holes " +
                              std::to_string(max_holes) + " (pass --force to override)");

    DecideOptions opts;
    opts.oracle_max_holes = max_holes;
    opts.with_certificates = false;

    Json records = Json::array();
    long long fillable = 0, not_fillable = 0, agreements = 0, disagreements = 0;
    std::ostringstream text;
    bool failed = false;
    enumerate_structures(chains, [&](const Presentation& p) {
        Verdict v = decide(p, opts);
        Json rec;
        Json rot = Json::array();
        for (const Leg& leg : p.legs) rot.push_back(leg.rotations);
        rec["rot"] = rot;
        rec["status"] = v.status == VerdictStatus::Fillable ? "Fillable" : "NotFillable";
        if (v.sublink) rec["sublink"] = Json::array({v.sublink->positive_leg, v.sublink->negative_leg});
        if (v.obstruction) {
            switch (v.obstruction->kind) {
                case ObstructionKind::FailedOppositeCheck: rec["obstruction"] = "FailedOppositeCheck"; break;
                case ObstructionKind::NoQualifyingPair: rec["obstruction"] = "NoQualifyingPair"; break;
                case ObstructionKind::TraceObstruction: rec["obstruction"] = "TraceObstruction"; break;
            }
        }
        (v.status == VerdictStatus::Fillable ? fillable : not_fillable) += 1;
        if (cross_check) {
            auto oracle = positive_feasible(ab_class(translate_book(p.legs)), std::max<int>(max_holes, static_cast<int>(holes)));
            bool agree = (v.status == VerdictStatus::Fillable) == (oracle.status == Feasibility::Feasible);
            rec["oracle"] = oracle.status == Feasibility::Feasible ? "Feasible" : "Infeasible";
            rec["agree"] = agree;
            (agree ? agreements : disagreements) += 1;
            if (!agree) failed = true;
        }
        records.push_back(rec);
        text << rec.at("rot").dump() << " " << rec.at("status").get<std::string>();
        if (rec.contains("oracle")) text << " oracle=" << rec.at("oracle").get<std::string>();
        text << "\n";
    });

    Json summary{{"total", fillable + not_fillable}, {"fillable", fillable}, {"not_fillable", not_fillable}};
    if (cross_check) {
        summary["agreements"] = agreements;
        summary["disagreements"] = disagreements;
    }
    Json result{{"records", records}, {"summary", summary}};
    text << "total " << (fillable + not_fillable) << ": " << fillable << " fillable, " << not_fillable
         << " not fillable";
    if (cross_check) text << "; oracle agreement " << agreements << "/" << (agreements + disagreements);
    text << "\n";
    emit(out, io, result, text.str());
    if (failed) {
        err << "survey cross-check found decide/oracle disagreement\n";
        return 1;
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"fillability of zero-twisting contact structures on small Seifert fibered spaces M(-1;r1,r2,r3)"};
    app.require_subcommand(1);

    IoOpts io;
    bool cross_check = false, force = false;
    int max_holes = 14;

    auto* cf = app.add_subcommand("cf", "continued fraction utilities");
    add_io(cf, io);
    auto* translate_cmd = app.add_subcommand("translate", "surgery presentation to planar open book");
    add_io(translate_cmd, io);
    auto* decide_cmd = app.add_subcommand("decide", "fillability verdict with certificates");
    add_io(decide_cmd, io);
    decide_cmd->add_option("--max-holes", max_holes, "oracle hole guard (default 14)");
    auto* oracle_cmd = app.add_subcommand("oracle", "abelianized positive-factorization feasibility");
    add_io(oracle_cmd, io);
    oracle_cmd->add_option("--max-holes", max_holes, "oracle hole guard (default 14)");
    auto* factorize_cmd = app.add_subcommand("factorize", "daisy positive factorization of a two-leg sublink");
    add_io(factorize_cmd, io);
    auto* trace_cmd = app.add_subcommand("trace", "positive-factorization obstruction trace");
    add_io(trace_cmd, io);
    auto* survey_cmd = app.add_subcommand("survey", "decide every structure on a manifold");
    add_io(survey_cmd, io);
    survey_cmd->add_flag("--cross-check", cross_check, "compare decide with the feasibility oracle");
    survey_cmd->add_flag("--force", force, "run cross-check past the hole guard");
    survey_cmd->add_option("--max-holes", max_holes, "oracle hole guard (default 14)");
    auto* verify_cmd = app.add_subcommand("verify", "check a positive twist multiset against a book");
    add_io(verify_cmd, io);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (cf->parsed()) return cmd_cf(io, load_input(io), out);
        if (translate_cmd->parsed()) {
            OpenBook b = translate_book(legs_from_json(load_input(io)));
            std::ostringstream text;
            text << "book with " << b.universe.size() - 1 << " holes, " << b.twists.size() << " twists\n";
            emit(out, io, book_to_json(b), text.str());
            return 0;
        }
        if (decide_cmd->parsed()) {
            Presentation p = presentation_from_json(load_input(io));
            DecideOptions opts;
            opts.oracle_max_holes = max_holes;
            Verdict v = decide(p, opts);
            emit(out, io, verdict_to_json(v, p), verdict_text(v));
            return 0;
        }
        if (oracle_cmd->parsed()) {
            std::vector<Leg> legs = legs_from_json(load_input(io));
            OpenBook b = translate_book(legs);
            FeasibilityResult r = positive_feasible(ab_class(b), max_holes);
            std::ostringstream text;
            text << (r.status == Feasibility::Feasible ? "Feasible" : "Infeasible") << "\n";
            emit(out, io, feasibility_to_json(r, b), text.str());
            return 0;
        }
        if (factorize_cmd->parsed()) {
            std::vector<Leg> legs = legs_from_json(load_input(io));
            if (legs.size() != 2) throw ValidationError("factorize expects exactly two legs");
            OpenBook b = translate_book(legs);
            DaisyResult d = daisy_rewrite(b);
            std::ostringstream text;
            text << "positive factorization with " << d.positive.size() << " twists in "
                 << d.schedule.size() << " daisy steps, verified\n";
            emit(out, io, daisy_to_json(d, b), text.str());
            return 0;
        }
        if (trace_cmd->parsed()) {
            Presentation p = presentation_from_json(load_input(io));
            ObstructionTrace t = obstruction_trace(p);
            std::ostringstream text;
            text << (t.conclusion == TraceConclusion::NoPositiveFactorization ? "NoPositiveFactorization"
                                                                              : "OutsideHypotheses")
                 << "\n";
            emit(out, io, trace_to_json(t), text.str());
            return 0;
        }
        if (survey_cmd->parsed())
            return cmd_survey(io, load_input(io), cross_check, force, max_holes, out, err);
        if (verify_cmd->parsed()) {
            Json in = load_input(io);
            std::vector<Leg> legs = legs_from_json(in);
            if (!in.contains("candidate")) throw ValidationError("verify needs a \"candidate\" twist array");
            OpenBook b = translate_book(legs);
            bool ok = verify_certificate(b, candidate_from_json(in.at("candidate"), b));
            emit(out, io, Json{{"verified", ok}}, std::string(ok ? "verified\n" : "not verified\n"));
            return 0;
        }
    } catch (const ValidationError& e) {
        err << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    err << "no subcommand\n";
    return 2;
}

} // namespace fill
