#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "satspec/constructions.hpp"
#include "satspec/graph6.hpp"

using namespace satspec;
using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// graph6 bytes live in ASCII [63,126], which contains shell metacharacters
// but never a single quote, so single-quoting is always safe.
std::string q(const std::string& s) { return "'" + s + "'"; }

RunResult run_cli(const std::string& args, const std::string& stdin_text = "") {
  std::string cmd;
  if (!stdin_text.empty()) {
    cmd = "printf '%s' " + q(stdin_text) + " | ";
  }
  cmd += std::string(SATSPEC_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("cli build and check") {
  auto built = run_cli("build --family wheel --params 6");
  CHECK(built.exit_code == 0);
  CHECK(built.out == emit_graph6(wheel(6)) + "\n");

  auto checked = run_cli("check -k 2 " + q(emit_graph6(wheel(6))));
  CHECK(checked.exit_code == 0);
  auto j = json::parse(checked.out);
  CHECK(j["verdict"] == "Saturated");
  CHECK(j["m"] == 10);

  auto star = run_cli("build --family star --params 6,3");
  CHECK(star.out == emit_graph6(star_join(6, 3)) + "\n");

  auto bs = run_cli("build --family blockstar --blocks K:5,K:2");
  CHECK(bs.exit_code == 0);
  CHECK(parse_graph6(bs.out.substr(0, bs.out.size() - 1)).edge_count() == 11);

  CHECK(run_cli("build --family wheel --params 3").exit_code != 0);
  CHECK(run_cli("build --family nosuch --params 3").exit_code != 0);
}

TEST_CASE("cli construct") {
  auto ok = run_cli("construct --n 10 --k 2 --m 16");
  CHECK(ok.exit_code == 0);
  auto g = parse_graph6(ok.out.substr(0, ok.out.size() - 1));
  CHECK(g.n() == 10);
  CHECK(g.edge_count() == 16);
  auto checked = run_cli("check -k 2 " + q(emit_graph6(g)));
  CHECK(json::parse(checked.out)["verdict"] == "Saturated");

  auto no = run_cli("construct --n 7 --k 2 --m 14");
  CHECK(no.exit_code == 0);
  CHECK(no.out.find("NotRealizable") == 0);
}

TEST_CASE("cli packing and reduce") {
  auto p = run_cli("packing " + q(emit_graph6(complete_graph(6))));
  CHECK(p.exit_code == 0);
  CHECK(json::parse(p.out)["count"] == 2);

  // W6 plus a pendant edge reduces back to W6
  auto w6p = wheel(6).with_new_vertex(uint64_t{1} << 2);
  auto r = run_cli("reduce " + q(emit_graph6(w6p)));
  CHECK(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["m0"] == emit_graph6(wheel(6)));
  CHECK(j["m"] == emit_graph6(wheel(6)));
  CHECK(j["m_trace"]["steps"].size() == 1);
}

TEST_CASE("cli malformed input") {
  auto bad = run_cli("check -k 2 'B!'");
  CHECK(bad.exit_code == 1);
  auto j = json::parse(bad.out);
  CHECK(j["byte"] == 1);
}

TEST_CASE("cli batch mode tolerates bad lines") {
  std::string lines = emit_graph6(wheel(6)) + "\nB!\n" + emit_graph6(complete_graph(5)) + "\n";
  auto r = run_cli("check -k 2 -", lines);
  CHECK(r.exit_code == 1);  // one malformed line
  int count = 0;
  std::stringstream ss(r.out);
  std::string line;
  std::vector<std::string> verdicts;
  while (std::getline(ss, line)) {
    ++count;
    auto j = json::parse(line);
    if (j.contains("verdict")) verdicts.push_back(j["verdict"]);
    if (j.contains("error")) CHECK(j["line"] == 2);
  }
  CHECK(count == 3);
  CHECK(verdicts == std::vector<std::string>{"Saturated", "Saturated"});
}

TEST_CASE("cli spectrum uses the cache directory") {
  auto dir = std::filesystem::temp_directory_path() / "satspec_cli_cache_test";
  std::filesystem::remove_all(dir);
  std::string env = "SATSPEC_CACHE=" + dir.string() + " ";
  std::string cmd = env + std::string(SATSPEC_CLI_PATH) + " spectrum --n 6 --k 2 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  pclose(pipe);
  auto j = json::parse(out);
  CHECK(j["es"] == json::array({10, 11, 12}));
  CHECK(std::filesystem::exists(dir / "spectrum-n6-k2.json"));

  // second run loads the cached record
  FILE* pipe2 = popen(cmd.c_str(), "r");
  REQUIRE(pipe2 != nullptr);
  std::string out2;
  while ((got = fread(buf.data(), 1, buf.size(), pipe2)) > 0) out2.append(buf.data(), got);
  pclose(pipe2);
  CHECK(json::parse(out2)["es"] == json::array({10, 11, 12}));
  std::filesystem::remove_all(dir);
}

TEST_CASE("cli verify at n_max 6") {
  auto r = run_cli("verify --n-max 6");
  CHECK(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["all_pass"] == true);
}
