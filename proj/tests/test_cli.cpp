#include "models.hpp"
#include "walks/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = walks::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

std::string data(const std::string& rel) { return std::string(WALKS_DATA_DIR) + "/" + rel; }

}  // namespace

TEST_CASE("asymptotics text output for planar and 3D models") {
  auto r = run({"asymptotics", "--steps", models::nsew, "--terms", "1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "4/π · n^{-1} · 4^n"));

  r = run({"asymptotics", "--steps", models::cube8, "--terms", "1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "4√2·π^{-3/2} · n^{-3/2} · 8^n"));
  CHECK(contains(r.out, "1.01589"));
}

TEST_CASE("six-step three-term expansion") {
  auto r = run({"asymptotics", "--steps", models::six, "--terms", "3", "--kind", "walks", "--format", "json"});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  const auto& t = doc["walk_terms"];
  REQUIRE(t.size() == 3);
  CHECK(t[0]["even"]["text"] == "√6/π");
  CHECK(t[0]["odd"]["text"] == "0");
  CHECK(t[1]["even"]["text"] == "-17√6/(16π)");
  CHECK(t[1]["odd"]["text"] == "√6/(4π)");
  CHECK(t[1]["nPower"] == "-2");
  CHECK(t[2]["even"]["text"] == "605√6/(512π)");
  CHECK(t[2]["odd"]["text"] == "-33√6/(64π)");
  CHECK(t[2]["even"]["radicand"] == "6");
  CHECK(t[2]["even"]["piHalfPower"] == -2);
  CHECK(doc["|S|"] == 6);
  CHECK(doc["forward_counts"] == nlohmann::json::array({2, 3}));
  CHECK(doc["minimal_points"].size() == 2);
}

TEST_CASE("excursion expansion and rational emission") {
  auto r = run({"asymptotics", "--steps", models::nsew, "--kind", "excursions", "--emit-rational"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "(16/π + 16/π·(-1)^n) · n^{-3} · 4^n"));
  CHECK(contains(r.out, "H = 1 - t*("));
}

TEST_CASE("count dumps") {
  auto r = run({"count", "--steps", models::nsew, "--n", "2", "--excursions"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,s_n,e_n\n0,1,1\n1,2,0\n2,6,2\n");

  r = run({"count", "--steps", models::six, "--n", "0"});
  CHECK(r.out == "n,s_n\n0,1\n");

  r = run({"count", "--steps", models::six, "--n", "4", "--excursions", "--format", "json"});
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["rows"][1]["e"] == "0");
  CHECK(doc["rows"][3]["e"] == "0");
  CHECK(doc["rows"][2]["e"] != "0");

  r = run({"count", "--steps", models::nsew, "--n", "1", "--endpoints"});
  CHECK(contains(r.out, "n,x1,x2,count\n0,0,0,1\n"));
  CHECK(contains(r.out, "1,1,0,1\n"));
}

TEST_CASE("verify passes on the planar models and fails under fault injection") {
  for (const char* m : {models::nsew, models::diagonal, models::six, models::eight}) {
    auto r = run({"verify", "--steps", m, "--n", "8"});
    CHECK_MESSAGE(r.code == 0, m);
    CHECK(contains(r.out, "all checks passed"));
  }
  auto r = run({"verify", "--steps", models::cube12, "--n", "6"});
  CHECK(r.code == 0);

  r = run({"verify", "--steps", models::nsew, "--n", "6", "--inject-fault"});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "FAIL  walks: counts vs diagonal"));
  CHECK(contains(r.out, "FAIL  orbit-sum identity"));
}

TEST_CASE("verify output is identical across execution policies") {
  auto a = run({"verify", "--steps", models::eight, "--n", "7", "--exec", "serial", "--format", "json"});
  auto b = run({"verify", "--steps", models::eight, "--n", "7", "--exec", "parallel", "--format", "json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("ode and recurrence checks") {
  auto r = run({"ode-check", "--ode", data("ode/nsew.json"), "--n", "50"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "residual 0"));

  r = run({"ode-check", "--steps", models::six, "--ode", data("ode/six_step.json"), "--n", "50", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["ok"] == true);

  r = run({"recurrence-check", "--recurrence", data("recurrence/six_step.json"), "--n", "60"});
  CHECK(r.code == 0);

  r = run({"recurrence-check", "--recurrence", data("recurrence/six_step.json"), "--n", "3"});
  CHECK(r.code == 2);

  // operator checked against the wrong model
  r = run({"ode-check", "--steps", models::eight, "--ode", data("ode/nsew.json"), "--n", "30"});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "nonzero residual"));
}

TEST_CASE("usage, validation and resource exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"asymptotics"}).code == 2);
  CHECK(run({"asymptotics", "--steps", "N,S,E,W", "--format", "xml"}).code == 2);
  auto r = run({"asymptotics", "--steps", "N,E"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "NotSymmetric"));
  r = run({"count", "--steps", "N,S,Q"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "position 4"));
  CHECK(run({"ode-check", "--ode", "/nonexistent.json"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  setenv("WALKS_DP_CELL_BUDGET", "100", 1);
  r = run({"count", "--steps", models::nsew, "--n", "20"});
  CHECK(r.code == 3);
  setenv("WALKS_DP_CELL_BUDGET", "abc", 1);
  CHECK(run({"count", "--steps", models::nsew, "--n", "2"}).code == 2);
  unsetenv("WALKS_DP_CELL_BUDGET");
  CHECK(run({"count", "--steps", models::nsew, "--n", "20"}).code == 0);
}

TEST_CASE("parse and serialize round trip through the CLI grammar") {
  for (const char* m : {models::nsew, models::diagonal, models::six, models::eight, models::line, models::cube8,
                        models::cube12}) {
    const auto s = models::get(m);
    CHECK(walks::parse_stepset(walks::serialize(s)) == s);
    auto a = run({"count", "--steps", m, "--n", "5"});
    auto b = run({"count", "--steps", walks::serialize(s), "--n", "5"});
    CHECK(a.out == b.out);
  }
}
