#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "schema_check.hpp"
#include "tangles/cli.hpp"

using namespace tangles;
using nlohmann::json;

namespace {

std::string repo_path(const std::string& rel) {
  return std::string(TANGLES_REPO_DIR) + "/" + rel;
}

testsupport::SchemaChecker& schema() {
  static testsupport::SchemaChecker* checker = [] {
    std::ifstream in(repo_path("docs/report.schema.json"));
    json j;
    in >> j;
    return new testsupport::SchemaChecker(j);
  }();
  return *checker;
}

json run_json(std::vector<std::string> args, int expect_status = 0) {
  args.push_back("--json");
  CliResult res = run_cli(args);
  REQUIRE(res.status == expect_status);
  json j = json::parse(res.out);
  std::string why;
  bool ok = schema().validate(j, &why);
  if (!ok) MESSAGE(why);
  CHECK(ok);
  return j;
}

}  // namespace

TEST_CASE("slope command") {
  CliResult res = run_cli({"slope", "-[3]^r + [3]^r"});
  CHECK(res.status == 0);
  CHECK(res.out == "0/1 (Type 0/1)\n");

  json j = run_json({"slope", "-[3]^r + [3]^r"});
  CHECK(j["result"]["slope"] == "0/1");
  CHECK(j["result"]["type"] == "Type 0/1");
  CHECK(j["command"] == "slope");

  json j2 = run_json({"slope", "[2 3]"});
  CHECK(j2["result"]["slope"] == "7/2");
}

TEST_CASE("surface command") {
  json j = run_json({"surface", "-[3]^r + [3]^r"});
  CHECK(j["result"]["euler"] == -1);
  CHECK(j["result"]["boundary_count"] == 3);
  CHECK(j["result"]["genus"] == 0);
  CHECK(j["result"]["boundary_slope"] == "0/1");

  json j2 = run_json({"surface", "(-[2]^r + [3]^r)^r + [6]"});
  CHECK(j2["result"]["euler"] == -1);
  CHECK(j2["result"]["boundary_count"] == 1);
  CHECK(j2["result"]["genus"] == 1);
}

TEST_CASE("genus and classify commands") {
  json g = run_json({"genus", "(-[2]^r + [3]^r)^r + [6]"});
  CHECK(g["result"]["genus"] == 1);

  json c = run_json({"classify", "Q2 + [3]"});
  CHECK(c["result"]["has_loop"] == true);
  CHECK(c["result"]["connection_type"].is_null());
  CHECK(c["result"]["qm_summands"].size() == 1);
  CHECK(c["result"]["qm_summands"][0]["m"] == 2);

  json c2 = run_json({"classify", "[2 3]"});
  CHECK(c2["result"]["has_loop"] == false);
  CHECK(c2["result"]["connection_type"] == "Type 1/0");
}

TEST_CASE("oracle command") {
  json j = run_json({"oracle", "[2 3]"});
  CHECK(j["result"]["krebes"]["num"] == 7);
  CHECK(j["result"]["krebes"]["den"] == 2);
  CHECK(j["result"]["consistent"] == true);
}

TEST_CASE("assemble command") {
  json j = run_json({"assemble", repo_path("templates/trefoil.json"), "--pd"});
  CHECK(j["result"]["crossings"] == 3);
  CHECK(j["result"]["components"] == 1);
  CHECK(j["result"]["alternating"] == true);
  std::string pd = j["result"]["pd"].get<std::string>();
  CHECK(pd.find("X[") == 0);

  CliResult human = run_cli({"assemble", repo_path("templates/trefoil.json"), "--pd"});
  CHECK(human.status == 0);
  CHECK(human.out.find("X[") == 0);
  int lines = 0;
  for (char c : human.out)
    if (c == '\n') ++lines;
  CHECK(lines == 3);
}

TEST_CASE("decide command on the fixtures") {
  json sphere = run_json({"decide", repo_path("templates/sphere_fixture.json")});
  CHECK(sphere["result"]["sphere"]["value"] == true);
  CHECK(sphere["result"]["sphere"]["witness"]["kind"] == "cut-tangle");
  CHECK(sphere["result"]["closed_surface"]["value"] == true);
  CHECK(sphere["result"]["preconditions_met"]["no_genus0_cut_tangle"] == false);

  json torus = run_json({"decide", repo_path("templates/torus_cut_fixture.json")});
  CHECK(torus["result"]["sphere"]["value"] == false);
  CHECK(torus["result"]["torus"]["value"] == "yes");
  CHECK(torus["result"]["torus"]["witness"]["kind"] == "cut-tangle");
  CHECK(torus["result"]["torus"]["witness"]["genus"] == 1);

  json q2 = run_json({"decide", repo_path("templates/torus_q2_fixture.json")});
  CHECK(q2["result"]["torus"]["value"] == "yes");
  CHECK(q2["result"]["torus"]["witness"]["kind"] == "q-summand");
  CHECK(q2["result"]["torus"]["witness"]["m"] == 2);

  json octa = run_json({"decide", repo_path("templates/octahedron.json")});
  CHECK(octa["result"]["closed_surface"]["value"] == false);
  CHECK(octa["result"]["torus"]["value"] == "no");
}

TEST_CASE("domain errors exit 1 with a payload") {
  json j = run_json({"slope", "[2 +"}, 1);
  CHECK(j["error"]["type"] == "ParseError");
  CHECK(j["error"]["position"].is_number_integer());

  CliResult human = run_cli({"slope", "[2 +"});
  CHECK(human.status == 1);
  CHECK(human.err.find("ParseError") != std::string::npos);

  json j2 = run_json({"slope", "[0] + [3]"}, 1);
  CHECK(j2["error"]["type"] == "NonTrivialSumViolation");

  json j3 = run_json({"surface", "([2] + -[2])^r + ([2] + -[2])^r"}, 1);
  CHECK(j3["error"]["type"] == "ClosedSubtangle");

  json j4 = run_json({"oracle", "[2]^r + [2]^r"}, 1);
  CHECK(j4["error"]["type"] == "LoopPresent");

  json j5 = run_json({"decide", repo_path("does_not_exist.json")}, 1);
  CHECK(j5["error"]["type"] == "InvalidTemplate");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli({"slope"}).status == 2);
  CHECK(run_cli({"unknown-command"}).status == 2);
  CHECK(run_cli({}).status == 2);
  CHECK(run_cli({"slope", "[3]", "--bogus"}).status == 2);
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"classify", "Q2 + [3]", "--json"},
           {"decide", repo_path("templates/torus_q2_fixture.json"), "--json"}}) {
    CliResult a = run_cli(args);
    CliResult b = run_cli(args);
    CHECK(a.out == b.out);
    CHECK(a.status == b.status);
  }
}

TEST_CASE("human and json modes agree on numbers") {
  json j = run_json({"surface", "-[3]^r + [3]^r"});
  CliResult human = run_cli({"surface", "-[3]^r + [3]^r"});
  std::ostringstream expect;
  expect << "euler " << j["result"]["euler"].get<long long>() << ", boundary "
         << j["result"]["boundary_count"].get<long long>() << ", slope "
         << j["result"]["boundary_slope"].get<std::string>() << ", genus "
         << j["result"]["genus"].get<long long>();
  CHECK(human.out == expect.str() + "\n");
}
