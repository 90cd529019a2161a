// Command-line front end: supertile generation, window counting, census
// export, identity verification, crease rendering, and sequence export.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <thread>

#include "pfold/census.hpp"
#include "pfold/crease.hpp"
#include "pfold/recursion.hpp"
#include "pfold/render.hpp"
#include "pfold/substitution.hpp"
#include "pfold/verify.hpp"

namespace {

int env_depth_cap() {
  if (const char* v = std::getenv("PFOLD_DEPTH_CAP")) {
    const int cap = std::atoi(v);
    if (cap >= 0) return cap;
  }
  return pfold::kDefaultDepthCap;
}

int resolve_workers(int workers) {
  if (workers > 0) return workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::min(8u, std::max(1u, hw)));
}

// Write via a temp file in the same directory, then rename into place.
void write_atomically(const std::string& path, const std::string& data) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  fs::rename(tmp, target);
}

struct SupertileArgs {
  std::string letter = "N";
  int level = 0;
  std::string alphabet = "a16";
  std::string format = "text";
};

int cmd_supertile(const SupertileArgs& a) {
  const int cap = env_depth_cap();
  if (a.level < 0 || (a.alphabet == "b4" && a.level < 1)) {
    std::cerr << "supertile: --level must be >= " << (a.alphabet == "b4" ? 1 : 0)
              << " for --alphabet " << a.alphabet << '\n';
    return 2;
  }
  const pfold::Letter16 seed = pfold::Letter16::from_char(a.letter[0]);
  pfold::Grid g = a.alphabet == "b4"
                      ? pfold::phi_apply(pfold::supertile(seed, a.level - 1, cap))
                      : pfold::supertile(seed, a.level, cap);
  if (a.format == "json") {
    std::cout << pfold::grid_to_json(g) << '\n';
  } else {
    for (int r = 1; r <= g.rows(); ++r) std::cout << g.row_string(r) << '\n';
  }
  return 0;
}

struct CountArgs {
  int rows = 0, cols = 0;
  std::string structure = "T";
  int workers = 0;
  std::string dump_path;
};

int cmd_count(const CountArgs& a) {
  pfold::CensusOptions opts;
  opts.depth_cap = env_depth_cap();
  opts.workers = resolve_workers(a.workers);
  const pfold::Structure s = a.structure == "S" ? pfold::Structure::S : pfold::Structure::T;
  const pfold::CensusResult res = pfold::stable_pattern_set(s, a.rows, a.cols, opts);
  std::cout << res.set.size() << " (plateau at " << pfold::structure_name(s) << "_"
            << res.plateau_level << ")\n";
  if (!a.dump_path.empty()) write_atomically(a.dump_path, pfold::pattern_set_to_text(res.set));
  return 0;
}

struct CensusArgs {
  int n_max = 10;
  int brute_max = 8;
  int workers = 0;
};

int cmd_census(const CensusArgs& a) {
  pfold::CensusOptions opts;
  opts.depth_cap = env_depth_cap();
  opts.workers = resolve_workers(a.workers);
  pfold::CensusCache cache;
  pfold::RecursionEngine engine;
  std::cout << pfold::census_csv_header() << '\n';
  for (int n = 1; n <= a.n_max; ++n) {
    const bool brute = n <= a.brute_max;
    const pfold::ClassCounts counts =
        brute ? cache.class_counts(n, opts) : engine.class_counts(n);
    const std::uint64_t total = brute ? cache.complexity(n, opts) : engine.complexity(n);
    std::cout << n;
    for (char fam : {'a', 'b', 'c'})
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) std::cout << ',' << counts.at(fam, i, j);
    std::cout << ',' << total << '\n';
  }
  return 0;
}

struct VerifyArgs {
  int max_square = 24;
  int max_depth = 12;
  std::uint64_t max_closed_n = 1'000'000;
  int workers = 0;
  bool json = false;
};

int cmd_verify(const VerifyArgs& a) {
  pfold::VerifyBudget budget;
  budget.max_square = a.max_square;
  budget.max_depth = a.max_depth;
  budget.max_closed_n = a.max_closed_n;
  budget.workers = resolve_workers(a.workers);
  const auto reports = pfold::verify_all(budget);
  std::cout << (a.json ? pfold::report_json(reports) + "\n" : pfold::report_table(reports));
  return pfold::all_passed(reports) ? 0 : 1;
}

struct RenderArgs {
  std::string which = "S";
  int level = 1;
  std::string format = "svg";
  std::string out;
};

int cmd_render(const RenderArgs& a) {
  const int cap = env_depth_cap();
  if (a.level < 0 || (a.which == "S" && a.level < 1)) {
    std::cerr << "render: --level must be >= " << (a.which == "S" ? 1 : 0) << " for --which "
              << a.which << '\n';
    return 2;
  }
  const pfold::CreaseField field = a.which == "fold"
                                       ? pfold::fold_structure(a.level, cap)
                                       : pfold::decorate(pfold::s_supertile(a.level, cap));
  const std::string data =
      a.format == "ascii" ? pfold::render_ascii(field) : pfold::render_svg(field);
  write_atomically(a.out, data);
  return 0;
}

struct SequenceArgs {
  std::uint64_t n_max = 10;
  std::string method = "closed";
  bool no_crosscheck = false;
  int workers = 0;
};

int cmd_sequence(const SequenceArgs& a) {
  pfold::RecursionEngine engine;
  pfold::CensusOptions opts;
  opts.depth_cap = env_depth_cap();
  opts.workers = resolve_workers(a.workers);
  for (std::uint64_t n = 1; n <= a.n_max; ++n) {
    std::uint64_t v;
    if (a.method == "brute")
      v = pfold::complexity_bruteforce(static_cast<int>(n), opts);
    else if (a.method == "recursive")
      v = engine.complexity(n);
    else
      v = pfold::complexity_closed(n);
    std::cout << n << ' ' << v << '\n';
  }
  if (a.method == "closed" && !a.no_crosscheck) {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<std::uint64_t> pick(1, a.n_max);
    for (int k = 0; k < 32; ++k) {
      const std::uint64_t n = pick(rng);
      if (pfold::complexity_closed(n) != engine.complexity(n)) {
        std::cerr << "cross-check failed at n=" << n << '\n';
        return 1;
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-D paperfolding structure: generation, pattern census, verification"};
  app.require_subcommand(1);

  SupertileArgs sup;
  auto* sup_cmd = app.add_subcommand("supertile", "print an iterated-substitution tile");
  sup_cmd->add_option("--letter", sup.letter, "seed letter A..P")
      ->check(CLI::IsMember({"A","B","C","D","E","F","G","H","I","J","K","L","M","N","O","P"}))
      ->default_val("N");
  sup_cmd->add_option("--level", sup.level, "substitution iterations")->required();
  sup_cmd->add_option("--alphabet", sup.alphabet, "a16 or b4")
      ->check(CLI::IsMember({"a16", "b4"}))->default_val("a16");
  sup_cmd->add_option("--format", sup.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))->default_val("text");

  CountArgs cnt;
  auto* cnt_cmd = app.add_subcommand("count", "count distinct windows of the infinite structure");
  cnt_cmd->add_option("--rows", cnt.rows, "window rows")->required()->check(CLI::PositiveNumber);
  cnt_cmd->add_option("--cols", cnt.cols, "window cols")->required()->check(CLI::PositiveNumber);
  cnt_cmd->add_option("--structure", cnt.structure, "T or S")
      ->check(CLI::IsMember({"T", "S"}))->default_val("T");
  cnt_cmd->add_option("--workers", cnt.workers, "scan partitions (0 = auto)");
  cnt_cmd->add_option("--dump", cnt.dump_path, "write the pattern set as sorted text records");

  CensusArgs cen;
  auto* cen_cmd = app.add_subcommand("census", "print the count table as CSV");
  cen_cmd->add_option("--n-max", cen.n_max, "largest index")->required()->check(CLI::PositiveNumber);
  cen_cmd->add_option("--brute-max", cen.brute_max, "enumerate up to this index, recurse beyond");
  cen_cmd->add_option("--workers", cen.workers, "scan partitions (0 = auto)");

  VerifyArgs ver;
  ver.max_depth = env_depth_cap();
  auto* ver_cmd = app.add_subcommand("verify", "run the full identity check suite");
  ver_cmd->add_option("--max-square", ver.max_square, "largest window dimension");
  ver_cmd->add_option("--max-depth", ver.max_depth, "supertile depth cap");
  ver_cmd->add_option("--max-closed-n", ver.max_closed_n, "closed-form loop bound");
  ver_cmd->add_option("--workers", ver.workers, "scan partitions (0 = auto)");
  ver_cmd->add_flag("--json", ver.json, "machine-readable report");

  RenderArgs ren;
  auto* ren_cmd = app.add_subcommand("render", "render a crease pattern");
  ren_cmd->add_option("--which", ren.which, "S (decorated tile) or fold (recursive fold pattern)")
      ->check(CLI::IsMember({"S", "fold"}))->default_val("S");
  ren_cmd->add_option("--level", ren.level, "structure level")->required();
  ren_cmd->add_option("--format", ren.format, "svg or ascii")
      ->check(CLI::IsMember({"svg", "ascii"}))->default_val("svg");
  ren_cmd->add_option("--out", ren.out, "output path (written atomically)")->required();

  auto* tab_cmd = app.add_subcommand("table", "print the seed count table as CSV");

  SequenceArgs seq;
  auto* seq_cmd = app.add_subcommand("sequence", "emit `n value` lines of the square-pattern count");
  seq_cmd->add_option("--n-max", seq.n_max, "largest index")->required()->check(CLI::PositiveNumber);
  seq_cmd->add_option("--method", seq.method, "closed, recursive, or brute")
      ->check(CLI::IsMember({"closed", "recursive", "brute"}))->default_val("closed");
  seq_cmd->add_flag("--no-crosscheck", seq.no_crosscheck, "skip closed-vs-recursive spot checks");
  seq_cmd->add_option("--workers", seq.workers, "scan partitions for brute (0 = auto)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sup_cmd->parsed()) return cmd_supertile(sup);
    if (cnt_cmd->parsed()) return cmd_count(cnt);
    if (cen_cmd->parsed()) return cmd_census(cen);
    if (ver_cmd->parsed()) return cmd_verify(ver);
    if (ren_cmd->parsed()) return cmd_render(ren);
    if (tab_cmd->parsed()) {
      std::cout << pfold::seed_table_csv();
      return 0;
    }
    if (seq_cmd->parsed()) return cmd_sequence(seq);
  } catch (const pfold::budget_error& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
