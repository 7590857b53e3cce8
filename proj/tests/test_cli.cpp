#include <doctest.h>

#include <sstream>

#include "degplus/cli.hpp"
#include "degplus/json_io.hpp"

using namespace degplus;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "degplus");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("degplus JSON") {
  const auto r = invoke({"degplus", "--poly", "3,-1,1", "--json"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["deg_plus"] == 3);
  CHECK(j["D"] == 1);
  CHECK(j["witness"] == Json::array({"1", "1"}));
}

TEST_CASE("infinite deg+ exits 0") {
  const auto r = invoke({"degplus", "--poly", "2,-3,1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("deg_plus: infinite (positive real root in") != std::string::npos);
}

TEST_CASE("bounds on the factored cubic") {
  const auto r = invoke({"--json", "bounds", "--factor", "1/2,1", "--factor", "1,-3/2,1"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["exact_closed_form"] == 5);
}

TEST_CASE("JSON payloads round trip") {
  for (const char* poly : {"3,-1,1", "1/2,1/4,-1,1", "0,0,1,-1,1", "2,-3,1"}) {
    const auto r = invoke({"--json", "degplus", "--poly", poly});
    const Json j = Json::parse(r.out);
    CHECK(to_json(deg_plus_from_json(j)) == j);
  }
  for (const char* poly : {"3,-1,1", "1/2,1/4,-1,1", "1,2,1"}) {
    const auto r = invoke({"--json", "bounds", "--poly", poly});
    const Json j = Json::parse(r.out);
    CHECK(to_json(bounds_from_json(j)) == j);
    CHECK(to_json(bounds_from_json(j)).dump() == j.dump());
  }
}

TEST_CASE("--poly and --factor agree") {
  const std::vector<std::vector<std::string>> tails{{"degplus"}, {"bounds"}, {"polya"}, {"cone", "--n", "2"}};
  for (const auto& tail : tails) {
    auto a = tail;
    a.insert(a.end(), {"--poly", "3/2,-1/2,1/2,1"});
    auto b = tail;
    b.insert(b.end(), {"--factor", "3/2,1", "--factor", "1,-1,1"});
    auto c = tail;
    c.insert(c.end(), {"--poly", "1/2,-1,1", "--power", "2"});
    auto d = tail;
    d.insert(d.end(), {"--factor", "1/2,-1,1", "--factor", "1/2,-1,1"});
    CHECK(invoke(a).out == invoke(b).out);
    CHECK(invoke(c).out == invoke(d).out);
  }
}

TEST_CASE("usage and parse errors exit 2") {
  CHECK(invoke({"degplus", "--poly", "0.5,1"}).code == 2);
  CHECK(invoke({"degplus", "--poly", "0.5,1"}).err.find("fraction") != std::string::npos);
  CHECK(invoke({"degplus"}).code == 2);
  CHECK(invoke({"degplus", "--poly", "1,1", "--factor", "1,1"}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"cone", "--poly", "1,-1,1"}).code == 2);
  CHECK(invoke({"bounds", "--poly", "0"}).code == 2);
}

TEST_CASE("internal limits exit 1") {
  CHECK(invoke({"--cap", "2", "polya", "--poly", "1,-199/100,1"}).code == 1);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"--json", "star", "--poly", "1/2,-1,1", "--power", "2"};
  CHECK(invoke(args).out == invoke(args).out);
  CHECK(Json::parse(invoke(args).out)["verdict"] == "holds");
}

TEST_CASE("scan writes CSV and a summary") {
  const auto r = invoke({"scan", "--a-min", "-1", "--a-max", "-1", "--b-min", "3", "--b-max", "3", "--k-max", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "a,b,k,deg_plus,bound,slack\n-1,3,1,3,4,1\n-1,3,2,6,6,0\n");
  CHECK(Json::parse(r.err)["violations"] == 0);
}

TEST_CASE("random-check") {
  const auto r = invoke({"--seed", "5", "random-check", "--count", "10"});
  CHECK(r.code == 0);
  CHECK(r.out.find("disagreements: 0") != std::string::npos);
}
