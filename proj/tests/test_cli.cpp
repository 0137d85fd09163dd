#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <regex>
#include <string>

#include <nlohmann/json.hpp>

#include "germ/expr.hpp"
#include "germ/job.hpp"

using namespace germ;

namespace {

std::string strip_timing(const std::string& s) {
    return std::regex_replace(s, std::regex("\\s*\"timing_ms\": [0-9]+,?\n"), "\n");
}

}  // namespace

TEST_CASE("command names round trip") {
    for (const char* n : {"invariants", "cohomology", "interpolate", "class",
                          "verify-converse"}) {
        auto c = command_from_name(n);
        REQUIRE(c.has_value());
        CHECK(std::string(command_name(*c)) == n);
    }
    CHECK_FALSE(command_from_name("bogus").has_value());
}

TEST_CASE("a minimal job document parses") {
    JobSpec job = parse_job("vars = x, y\nf = x^3 + y^4\n", Command::Invariants);
    CHECK(job.ring->nvars() == 2);
    CHECK(*job.f == parse_poly("x^3 + y^4", job.ring));
}

TEST_CASE("comments, blank lines, and continuations are handled") {
    std::string doc =
        "# job header\n"
        "vars = x, y\n"
        "\n"
        "f = x^5 + y^5 \\  # tail joins next line\n"
        "    + x^2*y^2\n";
    JobSpec job = parse_job(doc, Command::Invariants);
    CHECK(*job.f == parse_poly("x^5 + y^5 + x^2*y^2", job.ring));
}

TEST_CASE("expression errors point into the document") {
    std::string doc = "vars = x, y\n\nf = x^^2\n";
    try {
        parse_job(doc, Command::Invariants);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(e.column == 7);
    }
}

TEST_CASE("documents are validated against the command") {
    CHECK_THROWS_AS(parse_job("vars = x, y\n", Command::Invariants), ParseError);
    CHECK_THROWS_AS(parse_job("vars = x, y\nf = x^2\nbogus = 1\n", Command::Invariants),
                    ParseError);
    CHECK_THROWS_AS(
        parse_job("vars = x, y\nf = x^2\ntrunc = 8\n", Command::Invariants),
        ParseError);
    CHECK_THROWS_AS(parse_job("vars = x, y\nf = x^2\nf = y^2\n", Command::Invariants),
                    ParseError);
    CHECK_THROWS_AS(parse_job("vars = x, y\ntrunc = 8\n", Command::Interpolate),
                    ParseError);
    CHECK_THROWS_AS(
        parse_job("vars = x, y\ntrunc = 8\nphi = x, y\nvfield = x^2, 0\n",
                  Command::Interpolate),
        ParseError);
    CHECK_THROWS_AS(
        parse_job("vars = x, y\ntrunc = 8\nphi = x + x^2\n", Command::Interpolate),
        ParseError);
    CHECK_THROWS_AS(parse_job("vars = x, t\nf = x^2 + t^2\n", Command::Invariants),
                    ParseError);
    CHECK_THROWS_AS(parse_job("vars = x, dx\nf = x^2\n", Command::Invariants),
                    ParseError);
    CHECK_THROWS_AS(
        parse_job("vars = x, y\ntrunc = 0\nphi = x, y\n", Command::Interpolate),
        ParseError);
}

TEST_CASE("run_document maps library errors to exit codes") {
    CHECK(run_document("vars = x, y\nf = x^3 + y^4\n", Command::Invariants).exit_code ==
          0);
    CHECK(run_document("vars = x, y\nf = x^2*y\n", Command::Invariants).exit_code == 3);
    CHECK(run_document("vars = x, y\nf = x +* y\n", Command::Invariants).exit_code == 2);
    CHECK(run_document("vars = x, y\nf = 1 + x\n", Command::Invariants).exit_code == 2);

    std::string eq =
        "vars = x, y\nf = x^3 + y^4\ntrunc = 8\nphi = x, y\n"
        "omega = (1 + x) dx^dy\nomega_prime = (1 + x) dx^dy\n";
    CHECK(run_document(eq, Command::VerifyConverse).exit_code == 0);

    std::string noteq =
        "vars = x, y\nf = x^3 + y^4\ntrunc = 8\nphi = x, y\n"
        "omega = (1 + y) dx^dy\nomega_prime = (1 + x) dx^dy\n";
    CHECK(run_document(noteq, Command::VerifyConverse).exit_code == 2);

    // volume coefficient vanishing at the origin is an input error
    std::string novol =
        "vars = x, y\nf = x^3 + y^4\ntrunc = 8\nphi = x, y\n"
        "omega = (x) dx^dy\nomega_prime = (x) dx^dy\n";
    CHECK(run_document(novol, Command::VerifyConverse).exit_code == 2);
}

TEST_CASE("reports carry schema, echo, and results") {
    RunResult r = run_document("vars = x, y\nf = x^5 + y^5 + x^2*y^2\n",
                               Command::Invariants);
    REQUIRE_FALSE(r.json.empty());
    auto j = nlohmann::json::parse(r.json);
    CHECK(j["schema"] == 1);
    CHECK(j["command"] == "invariants");
    CHECK(j["result"]["mu"] == 11);
    CHECK(j["result"]["tau"] == 10);
    CHECK(j["result"]["d"] == 1);
    CHECK(j["result"]["quasihomogeneous"] == false);
    CHECK(j.contains("timing_ms"));

    // the echoed expression reparses to the same polynomial
    auto ring = RingSpec::make(
        j["input"]["vars"].get<std::vector<std::string>>());
    CHECK(parse_poly(j["input"]["f"].get<std::string>(), ring) ==
          parse_poly("x^5 + y^5 + x^2*y^2", ring));
}

TEST_CASE("identical documents produce identical reports modulo timing") {
    for (auto [doc, cmd] : {std::pair<std::string, Command>{
                                "vars = x, y\nf = x^5 + y^5 + x^2*y^2\n",
                                Command::Cohomology},
                            {"vars = x, y\ntrunc = 8\nphi = x + x^2, y + x*y\n",
                             Command::Interpolate},
                            {"vars = x, y\nf = x^5 + y^5 + x^2*y^2\nalpha = y dx\n",
                             Command::ClassQuery}}) {
        RunResult a = run_document(doc, cmd);
        RunResult b = run_document(doc, cmd);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.human == b.human);
        CHECK(strip_timing(a.json) == strip_timing(b.json));
        CHECK(a.json.find("\"timing_ms\"") != std::string::npos);
    }
}

TEST_CASE("human output is a two-column table") {
    RunResult r = run_document("vars = x, y\nf = x^3 + y^4\n", Command::Invariants);
    CHECK(r.human.find("mu") != std::string::npos);
    CHECK(r.human.find("quasihomogeneous") != std::string::npos);
    CHECK(r.human.find("yes") != std::string::npos);
}
