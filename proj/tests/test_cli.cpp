#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string cmd =
      std::string(BEIC_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  std::array<char, 4096> buf{};
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) {
    result.output.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string data_file(const std::string& name) {
  return std::string(BEIC_DATA_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = fs::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  out.close();
  return path.string();
}

}  // namespace

TEST_CASE("analyze reports the running example") {
  const auto res = run_cli("--json analyze " + data_file("clutter_c6.json"));
  REQUIRE(res.exit_code == 0);
  const auto j = nlohmann::json::parse(res.output);
  CHECK(j["schema"] == 1);
  CHECK(j["dim"] == 7);
  CHECK(j["unmixed"] == false);
  CHECK(j["minimal_prime_count"] == 4);
  CHECK(j["verdict"]["status"] == "NotCohenMacaulay");
  CHECK(j["graph_cone"].is_null());
  bool found_facet = false;
  for (const auto& f : j["facets"]) {
    found_facet |= f == nlohmann::json({"1", "2", "4", "6"});
  }
  CHECK(found_facet);
  CHECK(j["cut_points"] == nlohmann::json({"4"}));
}

TEST_CASE("analyze on an edgeless clutter reports the zero ideal") {
  const auto path = temp_file("beic_edgeless.json",
                              R"({"vertices":["1","2","3"],"edges":[]})");
  const auto res = run_cli("--json analyze " + path);
  REQUIRE(res.exit_code == 0);
  const auto j = nlohmann::json::parse(res.output);
  CHECK(j["graph_edges"].empty());
  CHECK(j["dim"] == 6);
  CHECK(j["verdict"]["status"] == "CohenMacaulay");
  CHECK(j["verdict"]["depth"] == 6);
}

TEST_CASE("analyze of a star is not Cohen-Macaulay") {
  const auto path = temp_file(
      "beic_star.json",
      R"({"vertices":["1","2","3","4"],"edges":[["1","2"],["1","3"],["1","4"]]})");
  const auto res = run_cli("--json analyze " + path);
  REQUIRE(res.exit_code == 0);
  const auto j = nlohmann::json::parse(res.output);
  CHECK(j["unmixed"] == false);
  CHECK(j["verdict"]["status"] == "NotCohenMacaulay");
}

TEST_CASE("cone output matches the committed golden file byte for byte") {
  const auto res = run_cli("cone " + data_file("clutter_c6.json") + " --apex 7");
  REQUIRE(res.exit_code == 0);
  CHECK(res.output == slurp(data_file("cone7_expected.json")));
}

TEST_CASE("the cone detects graph cones that are not literal cones") {
  const auto res = run_cli("--json analyze " + data_file("cone7_expected.json"));
  REQUIRE(res.exit_code == 0);
  const auto j = nlohmann::json::parse(res.output);
  CHECK(j["graph_cone"]["apex"] == "7");
  CHECK(j["graph_cone"]["literal_cone"] == true);
  CHECK(j["dim"] == 8);

  // same graph presented through pairs: still a graph cone at 7, but the
  // clutter differs from the cone over its induced base less the apex edges
  const auto pairs = run_cli("cone " + data_file("clutter_c6_pairs.json") + " --apex 7");
  REQUIRE(pairs.exit_code == 0);
  CHECK(pairs.output != slurp(data_file("cone7_expected.json")));
}

TEST_CASE("cone apex collisions exit with 5") {
  const auto res = run_cli("cone " + data_file("clutter_c6.json") + " --apex 4", true);
  CHECK(res.exit_code == 5);
}

TEST_CASE("glue validates the shared vertex") {
  const auto a = temp_file("beic_k2a.json", R"({"vertices":["1","2"],"edges":[["1","2"]]})");
  const auto b = temp_file("beic_k2b.json", R"({"vertices":["2","3"],"edges":[["2","3"]]})");
  const auto ok = run_cli("glue " + a + " " + b + " --at 2");
  REQUIRE(ok.exit_code == 0);
  const auto j = nlohmann::json::parse(ok.output);
  CHECK(j["edges"] == nlohmann::json({{"1", "2"}, {"2", "3"}}));

  // the path's middle vertex is not free
  const auto p = temp_file("beic_p3.json",
                           R"({"vertices":["1","2","3"],"edges":[["1","2"],["2","3"]]})");
  const auto c = temp_file("beic_k2c.json", R"({"vertices":["2","9"],"edges":[["2","9"]]})");
  CHECK(run_cli("glue " + p + " " + c + " --at 2", true).exit_code == 4);

  // sharing more than the glue vertex is rejected
  const auto d = temp_file("beic_k2d.json", R"({"vertices":["1","2"],"edges":[["1","2"]]})");
  CHECK(run_cli("glue " + a + " " + d + " --at 2", true).exit_code == 4);
}

TEST_CASE("random generation is reproducible and committed") {
  const std::string args = "random --vertices 6 --edges 4 --max-arity 3 --seed 42";
  const auto once = run_cli(args);
  const auto twice = run_cli(args);
  REQUIRE(once.exit_code == 0);
  CHECK(once.output == twice.output);
  CHECK(once.output == slurp(data_file("random_n6_m4_k3_seed42.json")));

  CHECK(run_cli("random --vertices 3 --edges 50 --max-arity 2 --seed 1", true)
            .exit_code == 6);
}

TEST_CASE("export-generators") {
  const auto res = run_cli("export-generators " + data_file("clutter_c6.json"));
  REQUIRE(res.exit_code == 0);
  CHECK(res.output == "x1*y2 - x2*y1\n"
                      "x1*y3 - x3*y1\n"
                      "x1*y4 - x4*y1\n"
                      "x1*y6 - x6*y1\n"
                      "x2*y4 - x4*y2\n"
                      "x2*y6 - x6*y2\n"
                      "x3*y6 - x6*y3\n"
                      "x4*y5 - x5*y4\n"
                      "x4*y6 - x6*y4\n");

  const auto single = temp_file("beic_single.json",
                                R"({"vertices":["1","2"],"edges":[["1","2"]]})");
  CHECK(run_cli("export-generators " + single).output == "x1*y2 - x2*y1\n");

  const auto empty = temp_file("beic_none.json", R"({"vertices":["1"],"edges":[]})");
  const auto none = run_cli("export-generators " + empty);
  CHECK(none.exit_code == 0);
  CHECK(none.output.empty());
}

TEST_CASE("parse failures exit with 2") {
  const auto bad = temp_file("beic_bad.json", "{nope");
  CHECK(run_cli("analyze " + bad, true).exit_code == 2);
  const auto nested = temp_file(
      "beic_nested.json",
      R"({"vertices":["1","2","3"],"edges":[["1","2"],["1","2","3"]]})");
  CHECK(run_cli("analyze " + nested, true).exit_code == 2);
  CHECK(run_cli("analyze /definitely/not/there.json", true).exit_code == 2);
}

TEST_CASE("the enumeration budget exits with 3 and names the flag") {
  const auto res =
      run_cli("analyze " + data_file("clutter_c6.json") + " --max-enum-vertices 4", true);
  CHECK(res.exit_code == 3);
  CHECK(res.output.find("--max-enum-vertices") != std::string::npos);
}

TEST_CASE("oracle cross-check") {
  CHECK(run_cli("--oracle analyze " + data_file("clutter_c6.json")).exit_code == 0);
  CHECK(run_cli("--oracle minimal-primes " + data_file("clutter_c6.json")).exit_code == 0);

  // thirteen vertices exceed the oracle budget
  const auto big = run_cli("random --vertices 13 --edges 6 --max-arity 3 --seed 7");
  REQUIRE(big.exit_code == 0);
  const auto path = temp_file("beic_big.json", big.output);
  CHECK(run_cli("--oracle analyze " + path, true).exit_code == 3);
}

TEST_CASE("remaining subcommands answer in json") {
  const auto c6 = data_file("clutter_c6.json");
  auto j = nlohmann::json::parse(run_cli("--json unmixed " + c6).output);
  CHECK(j["unmixed"] == false);
  j = nlohmann::json::parse(run_cli("--json dimension " + c6).output);
  CHECK(j["dim"] == 7);
  j = nlohmann::json::parse(run_cli("--json cm " + c6).output);
  CHECK(j["verdict"]["status"] == "NotCohenMacaulay");
  j = nlohmann::json::parse(run_cli("--json minimal-primes " + c6).output);
  CHECK(j["minimal_primes"].size() == 4);
  CHECK(j["minimal_primes"][1]["t"] == nlohmann::json({"4"}));
  CHECK(j["minimal_primes"][1]["height"] == 5);
}

TEST_CASE("threads flag changes nothing observable") {
  const auto c6 = data_file("clutter_c6.json");
  CHECK(run_cli("--json analyze " + c6).output ==
        run_cli("--json --threads 4 analyze " + c6).output);
}
