#include "doctest.h"

#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

const std::string kData = CYCLIFT_DATA_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cyclift::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("verify the worked obstructed case") {
  Run r = run({"verify", kData + "/obstructed.scn"});
  CHECK(r.code == 0);
  CHECK(r.out.find("branch: Obstructed") != std::string::npos);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
  CHECK(r.out.ends_with("overall: PASS\n"));
}

TEST_CASE("verify an unobstructed scenario") {
  Run r = run({"verify", kData + "/unobstructed.scn"});
  CHECK(r.code == 0);
  CHECK(r.out.find("branch: Unobstructed") != std::string::npos);
}

TEST_CASE("input errors exit 2") {
  Run missing = run({"verify", kData + "/invalid/missing_key.scn"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("missing key: fnext") != std::string::npos);

  Run irregular = run({"verify", kData + "/invalid/non_regular.scn"});
  CHECK(irregular.code == 2);
  CHECK(irregular.err.find("not a regular sequence") != std::string::npos);

  CHECK(run({"verify", kData + "/absent.scn"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"frobnicate"}).err.find("unknown command: frobnicate") != std::string::npos);
  CHECK(run({"verify", kData + "/obstructed.scn", "--bogus"}).code == 2);
  CHECK(run({"check-cycle", kData + "/obstructed.scn", "--class", "nu"}).code == 2);
  CHECK(run({"lift", kData + "/obstructed.scn", "--to", "0"}).code == 2);
  CHECK(run({"member", "x +", "--ideal", "x"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("help exits 0") {
  Run r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("check-cycle") != std::string::npos);
}

TEST_CASE("muY is not a cycle in the obstructed case") {
  Run r = run({"check-cycle", kData + "/obstructed.scn", "--class", "muY", "--order", "1"});
  CHECK(r.code == 1);
  CHECK(r.out.find("[FAIL]") != std::string::npos);
  CHECK(r.out.find("sum: [eps^1: (1) / (x, y)] at origin") != std::string::npos);
  CHECK(r.out.find("1 NOT in ideal") != std::string::npos);
}

TEST_CASE("C - muZ is a cycle at every order") {
  for (const char* j : {"1", "2", "3"}) {
    CHECK(run({"check-cycle", kData + "/obstructed.scn", "--class", "C-minus-muZ", "--order", j}).code == 0);
  }
  CHECK(run({"check-cycle", kData + "/obstructed.scn", "--class", "muZ", "--order", "2"}).code == 0);
}

TEST_CASE("boundary prints the classes and a verdict") {
  Run r = run({"boundary", kData + "/obstructed.scn", "--class", "C", "--order", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("term 1 at Q1: [eps^1: (1) / (x, y)] at origin") != std::string::npos);
  CHECK(r.out.find("term 2 at Q2: [eps^1: (-1) / (x, y)] at origin") != std::string::npos);
  CHECK(r.out.ends_with("verdict: trivial\n"));
  Run mu = run({"boundary", kData + "/obstructed.scn", "--class", "muY", "--order", "1"});
  CHECK(mu.out.ends_with("verdict: nontrivial\n"));
}

TEST_CASE("lift to a given order") {
  Run r = run({"lift", kData + "/unobstructed.scn", "--to", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("lifting order: 2") != std::string::npos);
  CHECK(r.out.find("T^3") == std::string::npos);
}

TEST_CASE("member and groebner") {
  Run yes = run({"member", "y^3-1", "--ideal", "x^2-y,x*y-1"});
  CHECK(yes.code == 0);
  CHECK(yes.out.starts_with("member: true\n"));
  Run no = run({"member", "x", "--ideal", "x^2-y,x*y-1"});
  CHECK(no.code == 1);
  CHECK(no.out.find("normal form: x") != std::string::npos);
  Run gb = run({"groebner", "--ideal", "x^2-y,x*y-1"});
  CHECK(gb.code == 0);
  CHECK(gb.out == "y^2 - x\nx*y - 1\nx^2 - y\n");
  CHECK(run({"member", "z", "--ideal", "x,y", "--vars", "x y z"}).code == 1);
}

TEST_CASE("json carries the same verdicts as text") {
  for (const char* name : {"/obstructed.scn", "/obstructed_p2.scn", "/unobstructed.scn"}) {
    Run text = run({"verify", kData + name});
    Run js = run({"verify", kData + name, "--json"});
    CHECK(text.code == js.code);
    auto doc = nlohmann::ordered_json::parse(js.out);
    CHECK(doc["overall"].get<bool>() == (text.code == 0));
    for (const auto& c : doc["checks"]) {
      const std::string line = (c["passed"].get<bool>() ? "[PASS] " : "[FAIL] ") + c["name"].get<std::string>();
      CHECK(text.out.find(line) != std::string::npos);
    }
  }
}

TEST_CASE("verify --all is sorted and deterministic") {
  Run a = run({"verify", "--all", kData});
  Run b = run({"verify", "--all", kData});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto p1 = a.out.find("scenario: obstructed.scn");
  const auto p2 = a.out.find("scenario: obstructed_p2.scn");
  const auto p3 = a.out.find("scenario: unobstructed.scn");
  CHECK(p1 < p2);
  CHECK(p2 < p3);
  CHECK(p3 != std::string::npos);

  Run bad = run({"verify", "--all", kData + "/invalid"});
  CHECK(bad.code == 2);
  auto js = run({"verify", "--all", kData, "--json"});
  CHECK(nlohmann::ordered_json::parse(js.out).size() == 3);
}
