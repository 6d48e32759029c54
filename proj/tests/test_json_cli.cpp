#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <sstream>

#include "fill/cli.hpp"
#include "fill/json_io.hpp"

using namespace fill;

namespace {

const char* kFig2 =
    R"({"legs":[{"coeffs":[-2,-3,-2],"rot":[-1,-1,0]},{"coeffs":[-2,-3],"rot":[-1,1]},{"coeffs":[-3,-3],"rot":[2,1]}]})";

int run(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
    std::ostringstream out, err;
    int rc = run_cli(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return rc;
}

} // namespace

TEST_CASE("presentation json round trip") {
    Presentation p = presentation_from_json(Json::parse(kFig2));
    CHECK(p.legs[2].coefficients == Chain{-3, -3});
    Json j = presentation_to_json(p);
    Presentation q = presentation_from_json(j);
    CHECK(q.legs[0].rotations == p.legs[0].rotations);
}

TEST_CASE("legs accept the r form") {
    Json j = Json::parse(R"({"legs":[{"r":"5/8","rot":[-1,-1,0]},{"r":"3/5","rot":[-1,1]},{"r":"3/8","rot":[2,1]}]})");
    Presentation p = presentation_from_json(j);
    CHECK(p.legs[0].coefficients == Chain{-2, -3, -2});
    CHECK(p.legs[1].coefficients == Chain{-2, -3});
    CHECK(p.legs[2].coefficients == Chain{-3, -3});
}

TEST_CASE("validation errors are pointed") {
    Json bad = Json::parse(R"({"legs":[{"coeffs":[-2],"rot":[2]},{"coeffs":[-2],"rot":[0]},{"coeffs":[-2],"rot":[0]}]})");
    CHECK_THROWS_WITH_AS(presentation_from_json(bad),
                         doctest::Contains("stab_count"), ValidationError);
}

TEST_CASE("book json is canonical") {
    OpenBook b = translate_book(presentation_from_json(Json::parse(kFig2)).legs);
    Json j = book_to_json(b);
    CHECK(j.at("holes").size() == 9);
    CHECK(j.at("outer") == "out");
    // twists sorted by hole lists, then sign
    auto key = [](const Json& t) {
        return std::make_pair(t.at("holes").get<std::vector<std::string>>(), t.at("sign").get<int>());
    };
    auto t = j.at("twists");
    for (std::size_t i = 1; i < t.size(); ++i) CHECK(key(t[i - 1]) <= key(t[i]));
}

TEST_CASE("cli decide on the worked example") {
    std::string out;
    int rc = run({"decide", "--json", kFig2, "--format", "json"}, &out);
    CHECK(rc == 0);
    Json j = Json::parse(out);
    CHECK(j.at("status") == "Fillable");
    CHECK(j.at("sublink").at("positive_leg") == 3);
    CHECK(j.at("sublink").at("negative_leg") == 1);
    CHECK(j.at("abelian_certificate").at("status") == "Feasible");

    // byte-identical reruns
    std::string out2;
    run({"decide", "--json", kFig2, "--format", "json"}, &out2);
    CHECK(out == out2);
}

TEST_CASE("cli exit codes") {
    std::string out, err;
    // rot parity violation -> exit 2
    int rc = run({"decide", "--json",
                  R"({"legs":[{"coeffs":[-3],"rot":[1]},{"coeffs":[-2],"rot":[0]},{"coeffs":[-2],"rot":[0]}]})"},
                 &out, &err);
    CHECK(rc == 2);
    CHECK(err.find("invalid input") != std::string::npos);

    CHECK(run({"decide", "--json", "{not json"}, &out, &err) == 2);
    CHECK(run({"decide"}, &out, &err) == 2); // no input
}

TEST_CASE("cli survey counts the special type manifold") {
    std::string out;
    int rc = run({"survey", "--json", R"({"chains":[[-3],[-3],[-3]]})", "--format", "json", "--cross-check"},
                 &out);
    CHECK(rc == 0);
    Json j = Json::parse(out);
    CHECK(j.at("records").size() == 27);
    CHECK(j.at("summary").at("total") == 27);
    CHECK(j.at("summary").at("fillable") == 0);
    CHECK(j.at("summary").at("not_fillable") == 27);
    CHECK(j.at("summary").at("agreements") == 27);
    CHECK(j.at("summary").at("disagreements") == 0);
}

TEST_CASE("cli survey hole guard") {
    std::string out, err;
    // 16 holes > default 14: refused without --force
    int rc = run({"survey", "--json", R"({"chains":[[-6,-6],[-4],[-4]]})", "--cross-check"}, &out, &err);
    CHECK(rc == 2);
    CHECK(err.find("cross-check refused") != std::string::npos);
    // without cross-check it runs
    CHECK(run({"survey", "--json", R"({"chains":[[-6,-6],[-4],[-4]]})"}, &out, &err) == 0);
}

TEST_CASE("cli cf subcommand") {
    std::string out;
    int rc = run({"cf", "--json", R"({"expand":"-8/5","eval":[-2,-3],"dual":[-3,-3]})", "--format", "json"},
                 &out);
    CHECK(rc == 0);
    Json j = Json::parse(out);
    CHECK(j.at("expand") == Json::array({-2, -3, -2}));
    CHECK(j.at("eval") == "-5/3");
    CHECK(j.at("dual") == Json::array({-2, -3, -2}));
}

TEST_CASE("cli oracle, factorize, trace, translate, verify") {
    std::string out;
    CHECK(run({"oracle", "--json", kFig2, "--format", "text"}, &out) == 0);
    CHECK(out == "Feasible\n");

    const char* sublink = R"({"legs":[{"coeffs":[-3,-3],"rot":[2,1]},{"coeffs":[-2,-3,-2],"rot":[-1,-1,0]}]})";
    CHECK(run({"factorize", "--json", sublink, "--format", "json"}, &out) == 0);
    Json fj = Json::parse(out);
    CHECK(fj.at("positive").size() == 5);
    CHECK(fj.at("steps").size() == 3);

    CHECK(run({"trace", "--json",
               R"({"legs":[{"coeffs":[-3],"rot":[2]},{"coeffs":[-3],"rot":[-2]},{"coeffs":[-3],"rot":[2]}]})",
               "--format", "text"},
              &out) == 0);
    CHECK(out == "NoPositiveFactorization\n");

    CHECK(run({"translate", "--json", kFig2, "--format", "json"}, &out) == 0);
    CHECK(Json::parse(out).at("twists").size() == 15);

    // verify an oracle witness through the CLI surface
    CHECK(run({"oracle", "--json", sublink, "--format", "json"}, &out) == 0);
    Json w = Json::parse(out);
    Json candidate = Json::array();
    for (const auto& e : w.at("witness"))
        for (int k = 0; k < e.at("count").get<int>(); ++k) candidate.push_back(e.at("holes"));
    Json verify_in = Json::parse(sublink);
    verify_in["candidate"] = candidate;
    CHECK(run({"verify", "--json", verify_in.dump(), "--format", "text"}, &out) == 0);
    CHECK(out == "verified\n");
}
