#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>

// End-to-end checks against the built binary (path injected by CMake).

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(RPS_CLI_PATH) + " " + args +
                          " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.out.append(buffer, got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string fixture(const std::string& name, const std::string& content) {
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / ("rps_cli_" + name);
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path.string();
}

const std::string kPair = R"({"players":2,"rewards":[{"set":[1,2],"value":2}]})";
const std::string kSolo =
    R"({"players":1,"rewards":[{"set":[1],"value":5}],)"
    R"("penalties":[{"set":[1],"value":3}]})";

}  // namespace

TEST_CASE("value evaluates coalitions") {
  const std::string path = fixture("pair.json", kPair);
  CHECK(run("value " + path + " --coalition 1,2").out == "2\n");
  CHECK(run("value " + path + " --coalition 1").out == "0\n");
  CHECK(run("value " + path + " --coalition \"\"").out == "0\n");
  const RunResult json = run("--format json value " + path +
                             " --coalition 1,2");
  CHECK(json.out == "{\"value\":2}\n");
  CHECK(json.exit_code == 0);
}

TEST_CASE("exit code 3 on unparsable input") {
  const std::string path = fixture("broken.json", "{not json");
  CHECK(run("value " + path).exit_code == 3);
  CHECK(run("value " + path).out.empty());
  CHECK(run("value /nonexistent/file.json").exit_code == 3);
  CHECK(run("nonsense-subcommand").exit_code == 3);
}

TEST_CASE("exit code 2 on validation failures") {
  const std::string bad_n = fixture("bad_n.json", R"({"players":0})");
  CHECK(run("shapley " + bad_n).exit_code == 2);
  const std::string empty_set = fixture(
      "empty_set.json",
      R"({"players":2,"rewards":[{"set":[],"value":1}]})");
  CHECK(run("shapley " + empty_set).exit_code == 2);
  const std::string pair = fixture("pair.json", kPair);
  CHECK(run("value " + pair + " --coalition 7").exit_code == 2);
  CHECK(run("check-core " + pair + " --payment 1").exit_code == 2);
}

TEST_CASE("shapley prints exact payments") {
  const std::string path = fixture("solo.json", kSolo);
  CHECK(run("--format json shapley " + path).out ==
        "{\"payments\":[\"2\"]}\n");
  const std::string pair = fixture("pair.json", kPair);
  CHECK(run("shapley " + pair).out == "1: 1\n2: 1\n");
}

TEST_CASE("check-core reports membership and violations") {
  const std::string path = fixture("solo.json", kSolo);
  const RunResult good = run("check-core " + path + " --payment 2");
  CHECK(good.out == "in core\n");
  CHECK(good.exit_code == 0);

  const RunResult bad = run("--format json check-core " + path +
                            " --payment 1");
  CHECK(bad.out ==
        "{\"status\":\"violation\",\"property\":\"EFF\",\"coalition\":[1],"
        "\"gap\":\"1\"}\n");
  CHECK(bad.exit_code == 1);
}

TEST_CASE("core emits a core element and optional DOT") {
  const std::string path = fixture("solo.json", kSolo);
  const std::string dot =
      (std::filesystem::temp_directory_path() / "rps_cli_out.dot").string();
  const RunResult result =
      run("--format json core " + path + " --dot " + dot);
  CHECK(result.out == "{\"payments\":[\"2\"]}\n");
  CHECK(result.exit_code == 0);
  std::ifstream in(dot);
  std::string first_line;
  std::getline(in, first_line);
  CHECK(first_line == "digraph profit_sharing {");
}

TEST_CASE("solve prints the optimal selection") {
  const std::string path = fixture("solo.json", kSolo);
  CHECK(run("solve " + path).out == "selection: {1}\nvalue: 2\n");
  const std::string trap = fixture(
      "trap.json",
      R"({"players":2,"rewards":[{"set":[1],"value":1}],)"
      R"("penalties":[{"set":[1,2],"value":5}]})");
  CHECK(run("--format json solve " + trap).out ==
        "{\"selection\":[],\"value\":0}\n");
}

TEST_CASE("convex reports both properties") {
  const std::string path = fixture("pair.json", kPair);
  CHECK(run("convex " + path).out == "convex: yes\nsuperadditive: yes\n");

  const std::string table = fixture(
      "table.json",
      R"({"players":2,"values":{"":"0","1":"1","2":"0","1,2":"0"}})");
  const RunResult result = run("convex --table " + table);
  CHECK(result.out ==
        "convex: no (S={1}, T={2})\nsuperadditive: no (S={1}, T={2})\n");
  CHECK(result.exit_code == 0);
}

TEST_CASE("embed3 emits a canonical instance") {
  const std::string table = fixture(
      "three.json",
      R"({"players":3,"values":{"":"0","1":"0","2":"0","3":"0",)"
      R"("1,2":"1","1,3":"1","2,3":"1","1,2,3":"2"}})");
  const RunResult result = run("embed3 " + table);
  CHECK(result.exit_code == 0);
  CHECK(result.out ==
        "{\"players\":3,\"rewards\":[{\"set\":[1],\"value\":1},"
        "{\"set\":[2],\"value\":1},{\"set\":[3],\"value\":1}],"
        "\"penalties\":[{\"set\":[1,2,3],\"value\":1}]}\n");
}

TEST_CASE("verify passes on a healthy instance") {
  const std::string path = fixture("solo.json", kSolo);
  const RunResult result = run("verify " + path);
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("FAIL") == std::string::npos);
  CHECK(result.out.find("PASS convexity") != std::string::npos);
  CHECK(result.out.find("PASS singleton-coincidence") != std::string::npos);
  CHECK(result.out.rfind("ok\n") == result.out.size() - 3);

  const std::string pair = fixture("pair.json", kPair);
  const RunResult skipped = run("verify " + pair);
  CHECK(skipped.exit_code == 0);
  CHECK(skipped.out.find("SKIP singleton-coincidence") != std::string::npos);
}

TEST_CASE("outputs are byte-identical across runs") {
  const std::string path = fixture("pair.json", kPair);
  for (const std::string cmd :
       {"--format json shapley ", "--format json core ", "verify ",
        "--format json convex "}) {
    CHECK(run(cmd + path).out == run(cmd + path).out);
  }
}

TEST_CASE("the enumeration guard is adjustable") {
  const std::string three = fixture(
      "three_players.json",
      R"({"players":3,"rewards":[{"set":[1,2,3],"value":1}]})");
  CHECK(run("solve " + three).exit_code == 0);
  CHECK(run("--max-n 2 solve " + three).exit_code == 2);

  setenv("RPS_MAX_N", "2", 1);
  CHECK(run("solve " + three).exit_code == 2);
  // an explicit flag beats the environment
  CHECK(run("--max-n 20 solve " + three).exit_code == 0);
  unsetenv("RPS_MAX_N");
}
