// End-to-end checks of the command-line tool, run as a subprocess.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "pfold/crease.hpp"
#include "pfold/grid.hpp"
#include "pfold/recursion.hpp"
#include "pfold/render.hpp"
#include "pfold/substitution.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;  // stdout + stderr interleaved
};

RunResult run_cli(const std::string& args, const std::string& env = {}) {
  const std::string cmd = env + " " + std::string(PFOLD_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("count matches the documented example output") {
  const auto r = run_cli("count --rows 2 --cols 2 --structure T");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "76 (plateau at T_5)\n");

  const auto s = run_cli("count --rows 2 --cols 2 --structure S");
  CHECK(s.exit_code == 0);
  CHECK(s.out.find("68 (plateau at S_") == 0);
}

TEST_CASE("sequence emits n value lines") {
  const auto r = run_cli("sequence --n-max 5 --method closed");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1 4\n2 68\n3 184\n4 316\n5 520\n");
}

TEST_CASE("sequence methods agree within the enumeration range") {
  const auto closed = run_cli("sequence --n-max 12 --method closed");
  const auto recursive = run_cli("sequence --n-max 12 --method recursive");
  const auto brute = run_cli("sequence --n-max 12 --method brute");
  CHECK(closed.exit_code == 0);
  CHECK(recursive.exit_code == 0);
  CHECK(brute.exit_code == 0);
  CHECK(closed.out == recursive.out);
  CHECK(closed.out == brute.out);
}

TEST_CASE("supertile output in both formats") {
  const auto level0 = run_cli("supertile --letter N --level 0");
  CHECK(level0.exit_code == 0);
  CHECK(level0.out == "N\n");

  const auto text = run_cli("supertile --letter N --level 1");
  CHECK(text.out == "IN\nPL\n");

  const auto json = run_cli("supertile --letter N --level 2 --format json");
  CHECK(json.exit_code == 0);
  CHECK(pfold::grid_from_json(json.out) == pfold::t_supertile(2));

  const auto b4 = run_cli("supertile --letter N --level 2 --alphabet b4");
  CHECK(b4.out == "2123\n2033\n3230\n3331\n");
}

TEST_CASE("table reproduces the seed CSV byte for byte") {
  const auto r = run_cli("table");
  CHECK(r.exit_code == 0);
  CHECK(r.out == pfold::seed_table_csv());
}

TEST_CASE("census switches from enumeration to recursion at the budget") {
  const auto r = run_cli("census --n-max 12 --brute-max 6");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == pfold::census_csv_header());
  pfold::RecursionEngine engine;
  for (int n = 1; n <= 12; ++n) {
    REQUIRE(std::getline(lines, line));
    std::ostringstream want;
    want << n;
    for (char fam : {'a', 'b', 'c'})
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) want << ',' << engine.value(fam, i, j, n);
    want << ',' << engine.complexity(n);
    CHECK(line == want.str());
  }
}

TEST_CASE("verify runs a reduced budget and reports success") {
  const auto r = run_cli("verify --max-square 3 --max-closed-n 1000 --max-depth 10");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("0 failed") != std::string::npos);

  const auto j = run_cli("verify --max-square 3 --max-closed-n 1000 --max-depth 10 --json");
  CHECK(j.exit_code == 0);
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed.is_array());
  bool saw_pass = false;
  for (const auto& row : parsed) saw_pass |= row["status"] == "pass";
  CHECK(saw_pass);
}

TEST_CASE("render writes files atomically in both formats") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "pfold_cli_test";
  fs::create_directories(dir);

  const fs::path svg_path = dir / "s2.svg";
  const auto r = run_cli("render --which S --level 2 --format svg --out " + svg_path.string());
  CHECK(r.exit_code == 0);
  CHECK(slurp(svg_path) == pfold::render_svg(pfold::decorate(pfold::s_supertile(2))));
  CHECK_FALSE(fs::exists(svg_path.string() + ".tmp"));

  const fs::path ascii_path = dir / "fold3.txt";
  const auto a = run_cli("render --which fold --level 3 --format ascii --out " +
                         ascii_path.string());
  CHECK(a.exit_code == 0);
  CHECK(slurp(ascii_path) == pfold::render_ascii(pfold::fold_structure(3)));

  fs::remove_all(dir);
}

TEST_CASE("count --dump writes the sorted pattern records") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "pfold_patterns.txt";
  const auto r = run_cli("count --rows 1 --cols 1 --structure S --dump " + path.string());
  CHECK(r.exit_code == 0);
  CHECK(slurp(path) == "1 1 B4 0\n1 1 B4 1\n1 1 B4 2\n1 1 B4 3\n");
  fs::remove(path);
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run_cli("count --rows 2").exit_code == 2);              // missing required flag
  CHECK(run_cli("nonsense").exit_code == 2);                    // unknown subcommand
  CHECK(run_cli("count --rows 2 --cols 2 --structure X").exit_code == 2);
  CHECK(run_cli("supertile --letter N --level 0 --alphabet b4").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);                            // subcommand required
}

TEST_CASE("resource caps exit with status 1") {
  const auto r = run_cli("supertile --letter N --level 4", "PFOLD_DEPTH_CAP=3");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("resource cap") != std::string::npos);
  CHECK(run_cli("supertile --letter N --level 4", "PFOLD_DEPTH_CAP=4").exit_code == 0);
}
