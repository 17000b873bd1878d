#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "redweave/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = redweave::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  const auto r = run(args);
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "redweave/1");
  return j;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("classes of 3421") {
    const auto j = run_json({"classes", "3421"});
    CHECK(j["count"] == 3);
    CHECK(j["classes"].size() == 3);
  }

  TEST_CASE("words") {
    CHECK(run_json({"words", "321"})["words"] == nlohmann::json::parse("[[1,2,1],[2,1,2]]"));
    CHECK(run_json({"words", "54321", "--count"})["count"] == 768);
    const auto text = run({"words", "321"});
    CHECK(text.code == 0);
    CHECK(text.out.find("121") != std::string::npos);
  }

  TEST_CASE("warrington") {
    CHECK(run_json({"warrington", "5"})["words"] == 328);
    const auto j = run_json({"warrington", "4", "--classes"});
    CHECK(j["words"] == 12);
    CHECK(j.contains("classes"));
    CHECK(run({"warrington", "5"}).out.find("328") != std::string::npos);
  }

  TEST_CASE("rect") {
    const auto j = run_json({"rect", "326514"});
    CHECK(j["rectangular"] == true);
    CHECK(j["dims"] == nlohmann::json::parse("[1,2]"));
    CHECK(j["witness_pattern"].is_null());
    CHECK(j["labels"].size() == 6);
    const auto k = run_json({"rect", "531642"});
    CHECK(k["rectangular"] == false);
    CHECK(k["witness_pattern"] == "42531");
    CHECK(k["dims"].is_null());
  }

  TEST_CASE("graph, poset and their DOT output") {
    const auto g = run_json({"graph", "4321"});
    CHECK(g["vertices"].size() == 8);
    CHECK(g["edges"].size() == 8);
    const auto p = run_json({"poset", "3421"});
    CHECK(p["covers"].size() == 2);
    const auto dot = run({"--format", "dot", "graph", "3421"});
    CHECK(dot.code == 0);
    CHECK(dot.out.rfind("graph", 0) == 0);
    CHECK(dot.out.find("--") != std::string::npos);
    const auto pdot = run({"--format", "dot", "poset", "3421"});
    CHECK(pdot.code == 0);
    CHECK(pdot.out.rfind("digraph", 0) == 0);
    CHECK(run({"--format", "dot", "classes", "3421"}).code == 1);
  }

  TEST_CASE("bounds and aggregate") {
    const auto b = run_json({"bounds", "3421", "--actual"});
    CHECK(b["lower"] == 3);
    CHECK(b["upper"] == 243);
    CHECK(b["actual"] == 3);
    CHECK(b["holds"] == true);
    CHECK(run_json({"bounds", "3421"})["actual"].is_null());
    const auto a = run_json({"aggregate", "4", "5"});
    CHECK(a["catalan"] == 1430);
    CHECK(a["count_perms"] == 3);
    CHECK(a["injective"] == true);
  }

  TEST_CASE("subnet") {
    const auto j = run_json({"subnet", "4321", "--word", "232123", "--set", "warrington-x"});
    CHECK(j["count"] == 1);
    const auto p = run_json({"subnet", "4321", "--word", "232123", "--set", "warrington-x", "--predict"});
    CHECK(p["prediction"]["predicted"] == 1);
    const auto f = run_json({"subnet", "3421", "--word", "21323", "--set", "212", "--predict"});
    CHECK(f["count"] == 2);
    CHECK(f["prediction"]["predicted"] == 2);
    CHECK(run({"subnet", "3421", "--word", "1213", "--set", "212"}).code == 1);
  }

  TEST_CASE("cycles and cube") {
    const auto c = run_json({"cycles", "4321"});
    CHECK(c["pairs"].size() == 8);
    CHECK(c["agreeing"] == 8);
    const auto k = run_json({"cube", "42615873", "--word", "32125453767"});
    CHECK(k["dimension"] == 3);
    CHECK(k["valid"] == true);
  }

  TEST_CASE("scan") {
    const auto j = run_json({"scan", "4"});
    CHECK(j["ok"] == true);
    CHECK(j["suites"].size() == 11);
    CHECK(run({"scan", "4", "--suite", "nope"}).code == 1);
  }

  TEST_CASE("exit codes") {
    CHECK(run({"classes", "3321"}).code == 1);
    CHECK(run({"classes"}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"--format", "xml", "classes", "321"}).code == 1);
    const auto refused = run({"--budget-words", "100", "words", "54321"});
    CHECK(refused.code == 3);
    CHECK_FALSE(refused.err.empty());
    CHECK(run({"--budget-words", "100", "bounds", "54321", "--actual"}).code == 3);
    CHECK(run({"aggregate", "9", "3"}).code == 3);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("output is deterministic across thread counts") {
    for (const auto& cmd : std::vector<std::vector<std::string>>{
             {"graph", "54321"}, {"poset", "43521"}, {"warrington", "5", "--classes"}, {"scan", "4"}}) {
      std::vector<std::string> one{"--format", "json", "--threads", "1"};
      std::vector<std::string> four{"--format", "json", "--threads", "4"};
      one.insert(one.end(), cmd.begin(), cmd.end());
      four.insert(four.end(), cmd.begin(), cmd.end());
      const auto a = run(one);
      CHECK(a.code == 0);
      CHECK(a.out == run(one).out);
      CHECK(a.out == run(four).out);
    }
  }
}
