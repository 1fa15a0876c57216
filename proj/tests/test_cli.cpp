#include <doctest.h>

#include <array>
#include <vector>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(VWEB_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer{};
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) r.out.append(buffer.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(VWEB_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("vweb_cli_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("gen and parse") {
  const Run gen = run("gen crossed_theta");
  CHECK(gen.status == 0);
  CHECK(gen.out.rfind("vweb 1\n", 0) == 0);
  const std::string file = temp_file("ct.vweb", gen.out);
  const Run parsed = run("parse " + file);
  CHECK(parsed.status == 0);
  CHECK(parsed.out == gen.out);
  CHECK(run("gen unlink 3").out.find("circle c3") != std::string::npos);
}

TEST_CASE("penrose and euler values") {
  const std::string ct = data("crossed_theta.vweb");
  for (const char* m : {"direct", "cube", "skein"})
    CHECK(run(std::string("penrose --method ") + m + " " + ct).out == "-6\n");
  CHECK(run("tait count " + ct).out == "6\n");
  const Run euler = run("euler " + ct + " --json");
  const auto j = nlohmann::json::parse(euler.out);
  CHECK(j["command"] == "euler");
  CHECK(j["result"]["graded_dims"] == nlohmann::json::array({6, 12}));
  CHECK(j["result"]["euler"] == -6);
  CHECK(j["elapsed_ms"].is_null());
}

TEST_CASE("json envelope") {
  const Run r = run("--json penrose --method cube " + data("theta.vweb"));
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "penrose");
  CHECK(j["input"] == data("theta.vweb"));
  CHECK(j["result"] == 6);
  CHECK(j["method"] == "cube");
  CHECK(j["terms"] == 1);
  CHECK(j.contains("elapsed_ms"));
  const auto timed = nlohmann::json::parse(run("--json --timings penrose " + data("theta.vweb")).out);
  CHECK(timed["elapsed_ms"].is_number());
}

TEST_CASE("deterministic output") {
  for (const std::string& args : std::vector<std::string>
       {"verify " + data("crossed_theta.vweb"), "--json verify " + data("bridged.vweb"),
        "tait list " + data("theta.vweb"), "export dot " + data("crossed_theta.vweb"),
        std::string("gen random --seed 17"), "--json moves list --kind VR2_add " + data("theta.vweb"),
        "euler --json " + data("crossed_theta.vweb")}) {
    CAPTURE(args);
    const Run a = run(args), b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
  }
  CHECK(run("gen random --seed 1").out != run("gen random --seed 2").out);
}

TEST_CASE("exit codes") {
  CHECK(run("").status == 1);
  CHECK(run("frobnicate").status == 1);
  CHECK(run("penrose --method magic " + data("theta.vweb")).status == 1);
  CHECK(run("parse /nonexistent/file.vweb").status == 1);
  CHECK(run("gen prism 2").status == 1);
  CHECK(run("parse " + data("syntax_error.vweb")).status == 2);
  CHECK(run("parse " + data("bad_strand.vweb")).status == 2);
  CHECK(run("verify " + data("toroidal_theta.vweb")).status == 3);
  CHECK(run("verify " + data("crossed_theta.vweb")).status == 0);
  CHECK(run("--cap 5 tait list " + data("crossed_theta.vweb")).status == 4);
  const std::string petersen = temp_file("p.vweb", run("gen petersen").out);
  CHECK(run("euler --max-crossings 2 " + petersen).status == 4);
}

TEST_CASE("resolve") {
  const std::string ct = data("crossed_theta.vweb");
  const Run one = run("resolve --assignment 1 " + ct);
  CHECK(one.status == 0);
  CHECK(one.out.find("crossing") == std::string::npos);
  const auto dir = std::filesystem::temp_directory_path() / "vweb_cli_test_resolve";
  std::filesystem::remove_all(dir);
  const Run all = run("resolve --all --out " + dir.string() + " " + ct);
  CHECK(all.status == 0);
  CHECK(std::filesystem::exists(dir / "0.vweb"));
  CHECK(std::filesystem::exists(dir / "1.vweb"));
  CHECK(run("tait count " + (dir / "1.vweb").string()).out == "12\n");
}

TEST_CASE("moves") {
  const std::string k = data("kinked_unknot.vweb");
  const Run list = run("moves list --kind VR1_remove " + k);
  CHECK(list.out == "0 VR1_remove x k1\n");
  const Run applied = run("moves apply --kind VR1_remove --site 0 " + k);
  CHECK(applied.out == "vweb 1\ncircle k1\n");
  CHECK(run("moves apply --kind VR1_remove --site 3 " + k).status == 1);
}

TEST_CASE("export dot") {
  const Run dot = run("export dot " + data("crossed_theta.vweb"));
  CHECK(dot.out.find("shape=box") != std::string::npos);
  CHECK(run("export dot " + temp_file("u1.vweb", "vweb 1\ncircle c0\n")).out ==
        "digraph vweb {\n  // circle c0\n}\n");
}
