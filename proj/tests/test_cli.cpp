#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "hkcut/io.hpp"
#include "test_support.hpp"

namespace {

std::string binary_path() {
  const char* path = std::getenv("HKCUT_BIN");
  REQUIRE_MESSAGE(path != nullptr, "HKCUT_BIN must point at the hkcut binary");
  return path;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string command = binary_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.out.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string temp_file(const std::string& name) {
  return std::string("/tmp/hkcut_cli_test_") + name;
}

}  // namespace

TEST_CASE("solve emits the documented JSON document") {
  const std::string path = temp_file("cycle.hgr");
  std::ofstream(path) << hkcut::write_instance(hkcut::testing::h_cycle4());

  const RunResult r = run("solve --input " + path + " --k 2 --json");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("format_version") == 1);
  CHECK(doc.at("n") == 4);
  CHECK(doc.at("m") == 4);
  CHECK(doc.at("k") == 2);
  CHECK(doc.at("algorithm") == "recursive");
  CHECK(doc.at("cut_value") == 2);
  CHECK(doc.at("parts") == nlohmann::json::parse("[[1],[2,3,4]]"));
  CHECK(doc.at("stats").contains("terminal_cut_calls"));
  CHECK(doc.at("stats").contains("recursion_nodes"));
  CHECK(doc.at("stats").contains("candidates_considered"));
  CHECK(doc.at("stats").contains("wall_ms"));
}

TEST_CASE("solve human output lists value then parts") {
  const std::string path = temp_file("path.hgr");
  std::ofstream(path) << hkcut::write_instance(hkcut::testing::h_path());
  const RunResult r = run("solve --input " + path + " --k 2 --algo brute");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out == "cut_value 1\npart 1\npart 2 3\n");
}

TEST_CASE("exit codes: usage errors are 2") {
  CHECK(run("solve --input /nonexistent.hgr --k 2").exit_code == 2);
  const std::string path = temp_file("path2.hgr");
  std::ofstream(path) << hkcut::write_instance(hkcut::testing::h_path());
  CHECK(run("solve --input " + path + " --k 9").exit_code == 2);
  CHECK(run("solve --input " + path + " --k 2 --algo fastest").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("gen --n 6 --m 8 --rank-max 7 --seed 1").exit_code == 2);
  CHECK(run("verify --k 1").exit_code == 2);
}

TEST_CASE("gen then solve round trip") {
  const std::string path = temp_file("gen.hgr");
  REQUIRE(run("gen --n 6 --m 8 --rank-max 4 --seed 42 --output " + path).exit_code == 0);
  const RunResult again = run("gen --n 6 --m 8 --rank-max 4 --seed 42");
  std::ifstream in(path);
  std::stringstream file_copy;
  file_copy << in.rdbuf();
  CHECK(again.out == file_copy.str());

  const RunResult solved = run("solve --input " + path + " --k 2 --algo dc --json");
  REQUIRE(solved.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(solved.out);

  // parts reconstitute a valid partition with the stated cost
  const hkcut::Hypergraph g = hkcut::parse_instance(file_copy.str());
  std::vector<hkcut::VertexSet> parts;
  for (const auto& part : doc.at("parts")) {
    std::vector<int> ids;
    for (const auto& v : part) ids.push_back(static_cast<int>(v) - 1);
    parts.push_back(hkcut::VertexSet(ids));
  }
  CHECK(g.partition_cost(hkcut::Partition(parts)) == doc.at("cut_value").get<hkcut::Cost>());
}

TEST_CASE("verify is reproducible and clean on a healthy build") {
  const RunResult a = run("verify --k 3 --trials 5 --max-n 7 --seed 11");
  const RunResult b = run("verify --k 3 --trials 5 --max-n 7 --seed 11");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  const nlohmann::json doc = nlohmann::json::parse(a.out);
  CHECK(doc.at("passed") == true);
  CHECK(doc.at("suites").at("oracle_equivalence").at("failures").empty());
}

TEST_CASE("bench prints a table") {
  const RunResult r = run("bench --n-min 5 --n-max 5 --k-min 2 --k-max 2 --per 1 --seed 3");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("terminal_cuts") != std::string::npos);
  CHECK(r.out.find("recursive") != std::string::npos);
  CHECK(r.out.find("divide-conquer") != std::string::npos);
}
