#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI with the given arguments. stderr is merged into the capture
// only when asked.
Run rainbow_cli(const std::string& args, bool merge_stderr = false) {
  const std::string cmd =
      std::string("\"") + RAINBOW_CLI + "\" " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const std::string& name) {
  return std::string("\"") + RAINBOW_TEST_DATA + "/" + name + "\"";
}

bool has(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("solve") {
  auto r = rainbow_cli("solve --problem rc --input " + data("c4.txt"), true);
  CHECK(r.status == 0);
  CHECK(has(r.out, "rc = 2"));
  CHECK(has(r.out, "\"value\":2"));

  r = rainbow_cli("solve --problem rc --k 1 --input " + data("c4.txt"));
  CHECK(r.status == 1);

  r = rainbow_cli("solve --problem chromatic --input " + data("c4.txt"));
  CHECK(r.status == 0);
  CHECK(has(r.out, "\"value\":2"));

  r = rainbow_cli("solve --problem subset-rc --input " + data("path3_pairs.json"));
  CHECK(r.status == 0);
  r = rainbow_cli("solve --problem subset-rc --k 1 --input " + data("path3_pairs.json"));
  CHECK(r.status == 1);
}

TEST_CASE("input errors exit 2") {
  auto r = rainbow_cli("solve --problem rc --inline \"4 x\"", true);
  CHECK(r.status == 2);
  CHECK(has(r.out, "error: ParseError: line 1, column 3"));

  r = rainbow_cli("solve --problem bogus --inline \"1 0\"", true);
  CHECK(r.status == 2);

  r = rainbow_cli("solve --problem rc --input /nonexistent/graph.txt", true);
  CHECK(r.status == 2);
  CHECK(has(r.out, "error: "));

  r = rainbow_cli("solve --problem subset-rc --input " + data("c4.txt"), true);
  CHECK(r.status == 2);

  CHECK(rainbow_cli("--help").status == 0);
}

TEST_CASE("reduce") {
  auto r = rainbow_cli("reduce --reduction star --input " + data("c4.txt"), true);
  CHECK(r.status == 0);
  CHECK(has(r.out, "star: 5 vertices, 4 edges"));

  r = rainbow_cli("reduce --input " + data("path3_pairs.json"));
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  std::ifstream golden(std::string(RAINBOW_TEST_DATA) + "/path3_reduced.json");
  CHECK(j == nlohmann::json::parse(golden));
  CHECK(j["n"] == 17);
  CHECK(j["edges"].size() == 60);

  const auto tmp = std::filesystem::temp_directory_path();
  const auto star = tmp / "rainbow_cli_test_star.json";
  const auto dot = tmp / "rainbow_cli_test.dot";
  r = rainbow_cli("reduce --reduction star --k 3 --input " + data("c4.txt") + " --output \"" +
                  star.string() + "\"");
  CHECK(r.status == 0);
  r = rainbow_cli("reduce --reduction src-ext --input \"" + star.string() + "\" --dot \"" +
                  dot.string() + "\"", true);
  CHECK(r.status == 0);
  CHECK(has(r.out, "src-ext: 17 vertices"));
  std::filesystem::remove(star);
  std::ifstream in(dot);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(has(text.str(), "graph"));
  std::filesystem::remove(dot);
}

TEST_CASE("verify a reduced file") {
  auto r = rainbow_cli("verify --check all --input " + data("path3_reduced.json"), true);
  CHECK(r.status == 0);
  CHECK_FALSE(has(r.out, "FAIL"));
  CHECK(has(r.out, "\"verdict\":\"pass\""));
}

TEST_CASE("verify rejects a corrupted gadget coloring") {
  auto r = rainbow_cli("verify --check witness --input " + data("path3_reduced_bad_coloring.json"),
                       true);
  CHECK(r.status == 1);
  CHECK(has(r.out, "FAIL witness"));
  CHECK(has(r.out, "\"verdict\":\"fail\""));
}

TEST_CASE("verify fuzzing is reproducible") {
  const auto a = rainbow_cli("verify --check all --seeds 10 --seed 3");
  const auto b = rainbow_cli("verify --check all --seeds 10 --seed 3");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  std::istringstream lines(a.out);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j["instance"]["seed"] == 3);
    CHECK(j["verdict"] != "fail");
    ++count;
  }
  CHECK(count == 70);
  CHECK(rainbow_cli("verify all --seeds 10 --seed 3").out == a.out);

  CHECK(rainbow_cli("verify --check nope --seeds 1").status == 2);
}

TEST_CASE("demo") {
  auto r = rainbow_cli("demo micro", true);
  CHECK(r.status == 0);
  CHECK(has(r.out, "rc(G′) = 2"));
  r = rainbow_cli("demo k3", true);
  CHECK(r.status == 0);
  CHECK(has(r.out, "rc(G′) ≤ 3 certified by witness"));
  r = rainbow_cli("demo k4", true);
  CHECK(r.status == 0);
  CHECK(has(r.out, "rc(G′) > 3 certified"));
}
