// Exit-code contract of the command-line tool, exercised through the real
// binary (path supplied by the build through BALANCED_CLI).

#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

std::string cli_path() {
  const char* path = std::getenv("BALANCED_CLI");
  REQUIRE_MESSAGE(path != nullptr,
                  "BALANCED_CLI must point at the balanced binary");
  return path;
}

RunResult run(const std::string& args) {
  const std::string command = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer;
  size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), n);
  }
  const int status = pclose(pipe);
  result.exit_code = WEXITSTATUS(status);
  return result;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/balanced_cli_test_" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

const char* kTriangleGame =
    R"({"type":"game","d":3,"singletons":["0","0","0"],
        "pairs":[{"members":[1,2],"value":"1"},{"members":[1,3],"value":"1"},
                 {"members":[2,3],"value":"1"}],"grand_value":"1"})";

const char* kAdditiveGame =
    R"({"type":"game","d":2,"singletons":["1","2"],
        "pairs":[{"members":[1,2],"value":"3"}],"grand_value":"3"})";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("bs catalogs a points file") {
  const RunResult gen = run("gen points --kind cross-polytope --d 3");
  CHECK(gen.exit_code == 0);
  const std::string points = write_temp("cross3.json", gen.output);
  const RunResult bs = run("bs " + points);
  CHECK(bs.exit_code == 0);
  CHECK(bs.output.find("\"member_count\": 3") != std::string::npos);
  // Identical runs produce byte-identical payloads.
  CHECK(run("bs " + points).output == bs.output);
}

TEST_CASE("bs input and budget errors") {
  const std::string bad = write_temp("bad.json", "{\"type\":\"nope\"}");
  CHECK(run("bs " + bad).exit_code == 2);
  CHECK(run("bs /nonexistent/file.json").exit_code == 2);
  const RunResult gen = run("gen points --kind midpoints --d 4");
  const std::string v4 = write_temp("v4.json", gen.output);
  CHECK(run("bs " + v4 + " --budget 2").exit_code == 3);
}

TEST_CASE("classify verdicts") {
  const std::string minimal = write_temp(
      "family_min.json",
      R"({"type":"family","d":3,"members":[[1,2],[2,3],[1,3]]})");
  CHECK(run("classify " + minimal).exit_code == 0);
  const std::string not_minimal = write_temp(
      "family_path.json", R"({"type":"family","d":3,"members":[[1,2],[2,3]]})");
  const RunResult r = run("classify " + not_minimal);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("degree-one-vertex") != std::string::npos);
}

TEST_CASE("verify-theorem1 contract") {
  const RunResult ok = run("verify-theorem1 --d 4");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("\"equal\": true") != std::string::npos);
  CHECK(run("verify-theorem1 --d 1").exit_code == 2);
  CHECK(run("verify-theorem1 --d 5 --budget 1").exit_code == 3);
}

TEST_CASE("partitions table") {
  const RunResult r = run("partitions --max-d 7");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"identity_holds\": true") != std::string::npos);
  CHECK(r.output.find("\"labeled_minimal\": \"717\"") != std::string::npos);
  CHECK(run("partitions --max-d 0").exit_code == 0);
}

TEST_CASE("core verdicts and exit codes") {
  const std::string triangle = write_temp("triangle.json", kTriangleGame);
  const std::string additive = write_temp("additive.json", kAdditiveGame);
  CHECK(run("core " + triangle + " --method direct").exit_code == 1);
  CHECK(run("core " + triangle + " --method theorem1").exit_code == 1);
  CHECK(run("core " + triangle + " --method both").exit_code == 1);
  CHECK(run("core " + additive + " --method both").exit_code == 0);
  const std::string bad = write_temp("badgame.json", "{\"type\":\"game\"}");
  CHECK(run("core " + bad).exit_code == 2);
}

TEST_CASE("cross-validate runs seeded") {
  const RunResult r = run("cross-validate --games 40 --seed 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"disagreements\": 0") != std::string::npos);
  CHECK(run("cross-validate --games 10 --seed 3 --min-d 1").exit_code == 2);
}

TEST_CASE("lemma subcommands") {
  const RunResult tucker_gen = run(
      "gen complex --kind wheel --size 8 --labels 1,2,-1,2,-1,-2,1,-2,1");
  REQUIRE(tucker_gen.exit_code == 0);
  const std::string tucker = write_temp("tucker.json", tucker_gen.output);
  CHECK(run("lemma tucker " + tucker).exit_code == 0);
  // Tucker hypothesis forbids |label| > dim.
  const RunResult big_gen = run(
      "gen complex --kind wheel --size 8 --labels 1,2,-1,3,-1,-2,1,-3,1");
  const std::string big = write_temp("tucker_big.json", big_gen.output);
  CHECK(run("lemma tucker " + big).exit_code == 2);
  // Ky Fan rejects complementary edges (center +1 meets -1 on a spoke).
  CHECK(run("lemma kyfan " + tucker).exit_code == 2);
  const RunResult kyfan_gen = run(
      "gen complex --kind wheel --size 6 --labels 1,2,2,-1,-2,-2,3");
  const std::string kyfan = write_temp("kyfan.json", kyfan_gen.output);
  CHECK(run("lemma kyfan " + kyfan).exit_code == 0);

  const RunResult sperner_gen = run(
      "gen complex --kind subdivided-simplex --size 2 --labels 3,2,2,1,2,1");
  const std::string sperner = write_temp("sperner.json", sperner_gen.output);
  CHECK(run("lemma sperner " + sperner).exit_code == 0);
  const RunResult bad_sperner_gen = run(
      "gen complex --kind subdivided-simplex --size 2 --labels 1,2,2,1,2,1");
  const std::string bad_sperner =
      write_temp("sperner_bad.json", bad_sperner_gen.output);
  CHECK(run("lemma sperner " + bad_sperner).exit_code == 2);

  const RunResult path_gen =
      run("gen complex --kind path --size 4 --labels 1,2,2,-1,-1");
  const std::string path = write_temp("shashkin.json", path_gen.output);
  CHECK(run("lemma shashkin " + path + " --lambda 1,2").exit_code == 0);
  CHECK(run("lemma shashkin " + path + " --lambda 1,1").exit_code == 2);
  CHECK(run("lemma shashkin " + path).exit_code == 2);  // lambda required

  CHECK(run("lemma nope " + path).exit_code == 2);
}

TEST_CASE("gen rejects bad parameters") {
  CHECK(run("gen points --kind cross-polytope --d 0").exit_code == 2);
  CHECK(run("gen complex --kind wheel --size 5").exit_code == 2);
  CHECK(run("gen complex --kind path --size 2 --labels 1,2").exit_code == 2);
}

}  // TEST_SUITE
