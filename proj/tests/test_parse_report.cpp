#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "valuate/cli_run.hpp"
#include "valuate/parse.hpp"
#include "valuate/report.hpp"

using namespace valuate;

TEST_CASE("grammar accepts the paper inputs") {
    CHECK(parse_poly("x^3 + x^2 + x - 2") == RatPoly(IntPoly({-2, 1, 1, 1})));
    CHECK(parse_poly("x^2 - 4x + 1") == RatPoly(IntPoly({1, -4, 1})));
    CHECK(parse_poly("x^2-4x+1") == RatPoly(IntPoly({1, -4, 1})));
    CHECK(parse_poly("3x^2 + x - 5") == RatPoly(IntPoly({-5, 1, 3})));
    CHECK(parse_poly("3/2") == RatPoly(std::vector<Rat>{make_rat(3, 2)}));
    CHECK(parse_poly("x^2 + 1/3 x - 5/3") ==
          RatPoly(std::vector<Rat>{make_rat(-5, 3), make_rat(1, 3), Rat(1)}));
    CHECK(parse_poly("x + x") == RatPoly(IntPoly({0, 2})));
    CHECK(parse_poly("X^2 - 2") == RatPoly(IntPoly({-2, 0, 1})));
    CHECK(parse_poly("0") == RatPoly());
}

TEST_CASE("grammar rejects bad input with a position") {
    CHECK_THROWS_AS(parse_poly(""), parse_error);
    CHECK_THROWS_AS(parse_poly("x^2 + * 3"), parse_error);
    CHECK_THROWS_AS(parse_poly("y + 1"), parse_error);
    CHECK_THROWS_AS(parse_poly("x^65"), parse_error);  // exponent cap
    CHECK_THROWS_AS(parse_poly("1/0"), parse_error);
    CHECK_THROWS_AS(parse_poly("-x + 1"), parse_error);  // no leading sign in the grammar
    try {
        parse_poly("x^2 @ 1");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("serialize parses back to an equal polynomial") {
    for (const char* s : {"x^3 + x^2 + x - 2", "x^2 - 4x + 1", "3x^2 + x - 5", "x^2 + x - 1",
                          "x^2 - x - 1", "2x - 3", "3x - 2", "x^2 + 2x - 2", "x^4 - x^3 - 2"}) {
        RatPoly p = parse_poly(s);
        CHECK(parse_poly(to_string(p)) == p);
    }
}

TEST_CASE("cli input forms") {
    CHECK(parse_cli_input("rational:3/2") ==
          RatPoly(std::vector<Rat>{make_rat(-3, 2), Rat(1)}));
    CHECK(parse_cli_input("rational:2/3") ==
          RatPoly(std::vector<Rat>{make_rat(-2, 3), Rat(1)}));
    CHECK(parse_cli_input("x^2 - 2") == RatPoly(IntPoly({-2, 0, 1})));
    CHECK_THROWS_AS(parse_cli_input("rational:x+1"), parse_error);
    CHECK_THROWS_AS(parse_cli_input("rational:0"), invalid_input);
}

TEST_CASE("json reports round-trip") {
    for (const char* s : {"x^2 - x - 1", "x^2 + x - 1", "x^3 + x^2 + x - 2", "rational:3/2"}) {
        ValuationMonoid M(make_algebraic(parse_cli_input(s)));
        Verdict v = classify(M);
        Report r = make_report(s, M, v, 1234);
        json j = to_json(r);
        Report back = report_from_json(json::parse(j.dump()));
        CHECK(back == r);
    }
}

TEST_CASE("json schema encodes verdicts as yes/no/unknown") {
    ValuationMonoid M(make_algebraic(parse_poly("x^2 - x - 1")));
    Report r = make_report("x^2 - x - 1", M, classify(M), 0);
    json j = to_json(r);
    CHECK(j.at("verdicts").at("ufm") == "yes");
    CHECK(j.at("verdicts").at("atomic") == "yes");
    CHECK(j.at("rank") == 2);
    CHECK(j.at("atoms").at("kind") == "finite_powers");
    CHECK(j.at("atoms").at("up_to") == 1);
    CHECK(j.at("root_interval").contains("lo"));
    CHECK(j.at("complete_flags").at("all_determined") == true);
}

namespace {

int run(Command::Verb verb, std::vector<std::string> inputs, std::string* text_out = nullptr,
        std::string element = "") {
    Command cmd;
    cmd.verb = verb;
    cmd.inputs = std::move(inputs);
    cmd.element = std::move(element);
    std::ostringstream out, err;
    int code = run_command(cmd, out, err);
    if (text_out) *text_out = out.str() + err.str();
    return code;
}

}  // namespace

TEST_CASE("cli exit codes") {
    std::string text;
    CHECK(run(Command::Verb::Classify, {"x^2+x-1"}, &text) == 0);
    CHECK(text.find("ANTIMATTER") != std::string::npos);
    CHECK(run(Command::Verb::Classify, {"x^2-x-1"}) == 0);
    CHECK(run(Command::Verb::Classify, {"x^2 + * 3"}) == 1);       // parse error
    CHECK(run(Command::Verb::Classify, {"x^2 - 1"}) == 2);         // reducible
    CHECK(run(Command::Verb::Classify, {"x^2 + x + 1"}) == 2);     // no positive root
    CHECK(run(Command::Verb::Classify, {"3/2"}) == 2);             // degree 0 without rational:
    CHECK(run(Command::Verb::GroupCheck, {"x^2 + x + 1"}, &text) == 0);
    CHECK(text.find("GROUP") != std::string::npos);
    CHECK(text.find("phi = 1") != std::string::npos);
    CHECK(run(Command::Verb::Factor, {"rational:3/2"}, nullptr, "3") == 0);
    CHECK(run(Command::Verb::Iso, {"x^2 - x - 1", "x^2 - x - 1"}) == 0);

    // x^2 + 5x - 1: alpha ~ 0.19, |m(0)| = 1, one positive root; the witness
    // 1 = 5a + a^2 exists, so the verdict is determined
    CHECK(run(Command::Verb::Classify, {"x^2 + 5x - 1"}) == 0);
}

TEST_CASE("certificate text is replayable prose") {
    ValuationMonoid M(make_algebraic(parse_poly("x^2 + x - 1")));
    Verdict v = classify(M);
    std::string text = describe_certificate(v.certificates.at("atomic"));
    CHECK(text == "1 = a + a^2");
}
