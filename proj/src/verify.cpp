#include "pfold/verify.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "pfold/crease.hpp"
#include "pfold/recursion.hpp"

namespace pfold {

namespace {

using Clock = std::chrono::steady_clock;

struct Runner {
  std::vector<CheckReport> reports;

  // Body returns a witness string; empty means pass. Exceptions from budget
  // guards mark the check skipped, anything else fails it.
  void run(const std::string& id, const std::string& anchor, const std::string& params,
           const std::function<std::string()>& body) {
    CheckReport rep{id, anchor, params, CheckReport::Status::pass, {}, 0.0};
    const auto t0 = Clock::now();
    try {
      rep.witness = body();
      rep.status = rep.witness.empty() ? CheckReport::Status::pass : CheckReport::Status::fail;
    } catch (const budget_error& e) {
      rep.status = CheckReport::Status::skipped;
      rep.witness = e.what();
    } catch (const std::exception& e) {
      rep.status = CheckReport::Status::fail;
      rep.witness = e.what();
    }
    rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    reports.push_back(std::move(rep));
  }

  void skip(const std::string& id, const std::string& anchor, const std::string& params,
            const std::string& why) {
    reports.push_back({id, anchor, params, CheckReport::Status::skipped, why, 0.0});
  }
};

std::string range_str(std::int64_t lo, std::int64_t hi) {
  std::ostringstream os;
  os << "n=" << lo << ".." << hi;
  return os.str();
}

// One term of a count identity: value(family, i, j, mult*n + add) + value_add.
struct Term {
  char family;
  int i, j;
  int mult;
  int add;
  std::uint64_t value_add = 0;
};

struct IdentityGroup {
  const char* name;
  int min_n;
  std::vector<std::vector<Term>> items;  // all terms of an item must agree
};

// Unique-extension equalities between square, wide, and tall class counts,
// stated at split indices 2n/2n+1.
const std::vector<IdentityGroup>& split2_extensions() {
  static const std::vector<IdentityGroup> groups = {
      {"split2-1", 2, {{{'a',1,2,2,0}, {'b',1,2,2,0}, {'b',2,2,2,-1}}}},
      {"split2-2", 2, {{{'a',2,1,2,0}, {'c',1,1,2,0}, {'c',2,1,2,-1}}}},
      {"split2-3", 2, {{{'a',2,2,2,0}, {'a',1,2,2,1}, {'c',1,2,2,0}, {'b',2,2,2,0}}}},
      {"split2-4", 2, {{{'a',1,1,2,1}, {'b',1,1,2,1}, {'b',2,1,2,0}}}},
      {"split2-5", 2, {{{'a',2,1,2,1}, {'a',1,1,2,2}, {'b',2,1,2,1}, {'c',1,1,2,1}}}},
      {"split2-6", 2, {{{'a',2,2,2,1}, {'c',1,2,2,1}, {'c',2,2,2,0}}}},
  };
  return groups;
}

// The same equalities split at indices 4n..4n+3.
const std::vector<IdentityGroup>& split4_extensions() {
  static const std::vector<IdentityGroup> groups = {
      {"split4-1", 1, {{{'a',1,2,4,0}, {'b',1,2,4,0}}}},
      {"split4-2", 1, {{{'a',2,1,4,0}, {'c',1,1,4,0}}}},
      {"split4-3", 1, {{{'a',2,2,4,0}, {'a',1,2,4,1}, {'c',1,2,4,0}, {'b',2,2,4,0}}}},
      {"split4-4", 1, {{{'a',1,1,4,1}, {'b',1,1,4,1}, {'b',2,1,4,0}}}},
      {"split4-5", 1, {{{'a',2,1,4,1}, {'a',1,1,4,2}, {'c',1,1,4,1}, {'b',2,1,4,1}}}},
      {"split4-6", 1, {{{'a',2,2,4,1}, {'c',1,2,4,1}, {'c',2,2,4,0}}}},
      {"split4-7", 1, {{{'a',1,2,4,2}, {'b',1,2,4,2}, {'b',2,2,4,1}}}},
      {"split4-8", 1, {{{'a',2,1,4,2}, {'c',1,1,4,2}, {'c',2,1,4,1}}}},
      {"split4-9", 1, {{{'a',2,2,4,2}, {'a',1,2,4,3}, {'c',1,2,4,2}, {'b',2,2,4,2}}}},
      {"split4-10", 1, {{{'a',1,1,4,3}, {'b',1,1,4,3}, {'b',2,1,4,2}}}},
      {"split4-11", 1, {{{'a',2,1,4,3}, {'c',1,1,4,3}, {'b',2,1,4,3}}}},
      {"split4-12", 1, {{{'a',2,2,4,3}, {'c',1,2,4,3}, {'c',2,2,4,2}}}},
  };
  return groups;
}

// Equal even-index classes, odd square/wide equality, and the two +4 offsets.
const std::vector<IdentityGroup>& derived_identity_groups() {
  static const std::vector<IdentityGroup> groups = {
      {"even-classes-equal", 1, {{{'a',1,2,2,0}, {'a',2,1,2,0}, {'a',2,2,2,0}}}},
      {"odd-square-equals-wide", 1, {{{'a',1,1,2,1}, {'b',1,2,2,1}}}},
      {"even-plus4", 1, {{{'a',1,1,2,0,4}, {'a',1,2,2,0}}}},
      {"odd-plus4", 1, {{{'a',2,1,2,1,4}, {'b',2,2,2,1}}}},
  };
  return groups;
}

using CountFn = std::function<std::uint64_t(char, int, int, std::int64_t)>;

int max_index(const IdentityGroup& g, std::int64_t n) {
  std::int64_t m = 0;
  for (const auto& item : g.items)
    for (const auto& t : item) m = std::max(m, std::int64_t(t.mult) * n + t.add);
  return static_cast<int>(m);
}

// Checks the groups for every n in [min_n, n_max] whose indices stay within
// max_idx; returns the first counterexample.
std::string check_identity_groups(const std::vector<IdentityGroup>& groups, const CountFn& value,
                                  std::int64_t n_max, int max_idx, std::int64_t* covered_to) {
  std::int64_t covered = 0;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    bool any = false;
    for (const auto& g : groups) {
      if (n < g.min_n || max_index(g, n) > max_idx) continue;
      any = true;
      for (const auto& item : g.items) {
        const Term& first = item.front();
        const std::uint64_t want =
            value(first.family, first.i, first.j, std::int64_t(first.mult) * n + first.add) +
            first.value_add;
        for (std::size_t k = 1; k < item.size(); ++k) {
          const Term& t = item[k];
          const std::uint64_t got =
              value(t.family, t.i, t.j, std::int64_t(t.mult) * n + t.add) + t.value_add;
          if (got != want) {
            std::ostringstream os;
            os << g.name << " at n=" << n << ": " << t.family << t.i << t.j << "("
               << t.mult * n + t.add << ")=" << got << " vs " << first.family << first.i
               << first.j << "(" << first.mult * n + first.add << ")=" << want;
            if (covered_to) *covered_to = covered;
            return os.str();
          }
        }
      }
    }
    if (any) covered = n;
  }
  if (covered_to) *covered_to = covered;
  return {};
}

std::string u64(std::uint64_t v) { return std::to_string(v); }

}  // namespace

const std::vector<std::string>& known_anchors() {
  static const std::vector<std::string> anchors = {
      "initial-value-table", "plateau-certificate", "t-partition",     "s-partition",
      "s-partition-small-n", "q-partition",         "unique-extension", "q-extension",
      "image-transfer",      "position-classes",    "cardinality-transfer",
      "recursion-vs-enumeration", "derived-identities", "closed-form", "quadrant-relation",
  };
  return anchors;
}

bool all_passed(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (r.status == CheckReport::Status::fail) return false;
  return true;
}

std::vector<CheckReport> verify_all(const VerifyBudget& budget_in, const SubstitutionSystem& rules) {
  VerifyBudget budget = budget_in;
  budget.max_square = std::max(1, budget.max_square);
  Runner runner;
  CensusOptions opts;
  opts.depth_cap = budget.max_depth;
  opts.workers = budget.workers;
  opts.max_dim = std::max(opts.max_dim, budget.max_square + 1);
  opts.rules = &rules;
  CensusCache cache;
  RecursionEngine engine;

  const auto& seeds = seed_table();
  std::map<int, ClassCounts> brute;  // class counts by index, filled as checks need them
  auto brute_at = [&](int n) -> const ClassCounts& {
    auto it = brute.find(n);
    if (it == brute.end()) it = brute.emplace(n, cache.class_counts(n, opts)).first;
    return it->second;
  };
  auto brute_value = [&](char fam, int i, int j, std::int64_t n) {
    return brute_at(static_cast<int>(n)).at(fam, i, j);
  };

  // --- initial value table, by enumeration
  const int abc_brute_max = std::min(10, budget.max_square - 1);
  if (abc_brute_max >= 1) {
    runner.run("seed-table/classes", "initial-value-table", range_str(1, abc_brute_max), [&] {
      for (int n = 1; n <= abc_brute_max; ++n) {
        const ClassCounts& got = brute_at(n);
        int row = 0;
        for (char fam : {'a', 'b', 'c'})
          for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j, ++row)
              if (got.at(fam, i, j) != seeds[row][n - 1]) {
                std::ostringstream os;
                os << "n=" << n << " " << fam << i << j << ": got " << got.at(fam, i, j)
                   << " want " << seeds[row][n - 1];
                return os.str();
              }
      }
      return std::string{};
    });
  } else {
    runner.skip("seed-table/classes", "initial-value-table", "n=1..10", "window budget too small");
  }
  if (abc_brute_max < 10 && abc_brute_max >= 1)
    runner.skip("seed-table/classes-rest", "initial-value-table",
                range_str(abc_brute_max + 1, 10), "window budget too small");

  const int a_brute_max = std::min(10, budget.max_square);
  runner.run("seed-table/squares", "initial-value-table", range_str(1, a_brute_max), [&] {
    for (int n = 1; n <= a_brute_max; ++n) {
      const std::uint64_t got = cache.complexity(n, opts);
      if (got != seeds[12][n - 1])
        return "n=" + std::to_string(n) + ": got " + u64(got) + " want " + u64(seeds[12][n - 1]);
    }
    return std::string{};
  });

  // --- plateau certificates
  runner.run("plateau/2x2", "plateau-certificate", "76 patterns at level 5", [&] {
    const auto res = cache.get(Structure::T, 2, 2, opts);
    if (res->set.size() != 76 || res->plateau_level != 5)
      return "got " + u64(res->set.size()) + " at level " + std::to_string(res->plateau_level);
    return std::string{};
  });
  if (budget.max_square >= 4) {
    runner.run("plateau/4x4", "plateau-certificate", "316 patterns at level 6", [&] {
      const auto res = cache.get(Structure::T, 4, 4, opts);
      if (res->set.size() != 316 || res->plateau_level != 6)
        return "got " + u64(res->set.size()) + " at level " + std::to_string(res->plateau_level);
      return std::string{};
    });
  } else {
    runner.skip("plateau/4x4", "plateau-certificate", "316 patterns at level 6",
                "window budget too small");
  }

  // --- four-way partitions
  const int part_max = std::min(8, budget.max_square);
  runner.run("partition/t-classes", "t-partition",
             "all shapes with dims <= " + std::to_string(part_max), [&] {
    for (int m = 1; m <= part_max; ++m)
      for (int n = 1; n <= part_max; ++n) {
        const auto base = cache.get(Structure::T, m, n, opts);
        std::vector<PatternSet> parts;
        std::size_t total = 0;
        for (int i = 1; i <= 2; ++i)
          for (int j = 1; j <= 2; ++j) {
            parts.push_back(pij_from_base(base->set, Structure::T, i, j, rules));
            if (parts.back().size() == 0)
              return "empty class (" + std::to_string(i) + "," + std::to_string(j) + ") at " +
                     std::to_string(m) + "x" + std::to_string(n);
            if (!parts.back().subset_of(base->set))
              return "class not inside full set at " + std::to_string(m) + "x" + std::to_string(n);
            total += parts.back().size();
          }
        for (std::size_t p = 0; p < parts.size(); ++p)
          for (std::size_t q = p + 1; q < parts.size(); ++q)
            if (!parts[p].disjoint_with(parts[q]))
              return "classes overlap at " + std::to_string(m) + "x" + std::to_string(n);
        if (total != base->set.size())
          return "union misses patterns at " + std::to_string(m) + "x" + std::to_string(n);
      }
    return std::string{};
  });

  runner.run("partition/s-classes", "s-partition",
             "3 <= dims <= " + std::to_string(part_max), [&] {
    for (int m = 3; m <= part_max; ++m)
      for (int n = 3; n <= part_max; ++n) {
        const auto base = cache.get(Structure::T, m, n, opts);
        const auto full = cache.get(Structure::S, m, n, opts);
        std::vector<PatternSet> parts;
        std::size_t total = 0;
        for (int i = 1; i <= 2; ++i)
          for (int j = 1; j <= 2; ++j) {
            parts.push_back(pij_from_base(base->set, Structure::S, i, j, rules));
            if (parts.back().size() == 0)
              return "empty class at " + std::to_string(m) + "x" + std::to_string(n);
            if (!parts.back().subset_of(full->set))
              return "class not inside full set at " + std::to_string(m) + "x" + std::to_string(n);
            total += parts.back().size();
          }
        for (std::size_t p = 0; p < parts.size(); ++p)
          for (std::size_t q = p + 1; q < parts.size(); ++q)
            if (!parts[p].disjoint_with(parts[q]))
              return "classes overlap at " + std::to_string(m) + "x" + std::to_string(n);
        if (total != full->set.size())
          return "union misses patterns at " + std::to_string(m) + "x" + std::to_string(n);
      }
    return std::string{};
  });

  runner.run("partition/s-small-n-failure", "s-partition-small-n", "n=1,2", [&] {
    const std::uint64_t a1 = cache.complexity(1, opts);
    const std::uint64_t t1 = cache.get(Structure::T, 1, 1, opts)->set.size();
    if (a1 != 4 || t1 != 16)
      return "1x1: " + u64(a1) + " vs " + u64(t1) + " (want 4 vs 16)";
    const std::uint64_t a2 = cache.complexity(2, opts);
    const std::uint64_t t2 = cache.get(Structure::T, 2, 2, opts)->set.size();
    if (a2 != 68 || t2 != 76)
      return "2x2: " + u64(a2) + " vs " + u64(t2) + " (want 68 vs 76)";
    return std::string{};
  });

  runner.run("partition/q-classes", "q-partition",
             "2 <= dims <= " + std::to_string(part_max), [&] {
    for (int m = 2; m <= part_max; ++m)
      for (int n = 2; n <= part_max; ++n) {
        const auto base = cache.get(Structure::T, m, n, opts);
        for (int i = 1; i <= 2; ++i)
          for (int j = 1; j <= 2; ++j) {
            const PatternSet whole = pij_from_base(base->set, Structure::T, i, j, rules);
            std::vector<PatternSet> parts;
            std::size_t total = 0;
            for (int k : {0, 2})
              for (int l : {0, 2}) {
                parts.push_back(qij_from_base(base->set, i + k, j + l, rules));
                if (parts.back().size() == 0)
                  return "empty q-class at " + std::to_string(m) + "x" + std::to_string(n);
                if (!parts.back().subset_of(whole))
                  return "q-class escapes its p-class at " + std::to_string(m) + "x" +
                         std::to_string(n);
                total += parts.back().size();
              }
            for (std::size_t p = 0; p < parts.size(); ++p)
              for (std::size_t q = p + 1; q < parts.size(); ++q)
                if (!parts[p].disjoint_with(parts[q]))
                  return "q-classes overlap at " + std::to_string(m) + "x" + std::to_string(n);
            if (total != whole.size())
              return "q-union misses patterns at " + std::to_string(m) + "x" + std::to_string(n);
          }
      }
    return std::string{};
  });

  // --- unique-extension identities on enumerated counts
  const int ext_brute_max = std::min(16, budget.max_square - 1);
  auto run_groups = [&](const std::string& id, const std::string& anchor,
                        const std::vector<IdentityGroup>& groups, const CountFn& value,
                        std::int64_t n_max, int max_idx) {
    runner.run(id, anchor, range_str(1, n_max) + " (indices <= " + std::to_string(max_idx) + ")",
               [&] {
                 std::int64_t covered = 0;
                 std::string w = check_identity_groups(groups, value, n_max, max_idx, &covered);
                 if (w.empty() && covered == 0) throw budget_error("no index fits the budget");
                 return w;
               });
  };
  run_groups("extension/split2-brute", "unique-extension", split2_extensions(), brute_value,
             (ext_brute_max - 2) / 2, ext_brute_max);
  run_groups("extension/split4-brute", "unique-extension", split4_extensions(), brute_value,
             (ext_brute_max - 3) / 4, ext_brute_max);
  run_groups("extension/derived-brute", "derived-identities", derived_identity_groups(),
             brute_value, (ext_brute_max - 1) / 2, ext_brute_max);

  // --- q-extension
  if (budget.max_square >= 11) {
    runner.run("q-extension/example", "q-extension", "5x6 class (4,4) vs 11x11 class (1,2)", [&] {
      const auto q44 = qij_from_base(cache.get(Structure::T, 5, 6, opts)->set, 4, 4, rules);
      const auto q12 = qij_from_base(cache.get(Structure::T, 11, 11, opts)->set, 1, 2, rules);
      if (q44.size() != q12.size()) return u64(q44.size()) + " vs " + u64(q12.size());
      return std::string{};
    });
  } else {
    runner.skip("q-extension/example", "q-extension", "5x6 vs 11x11", "window budget too small");
  }
  for (int n = 1; n <= 2; ++n) {
    const int big = 4 * n + 7;
    const std::string params = std::to_string(4 * n + 1) + "x" + std::to_string(4 * n + 2) +
                               " class (4,4) vs " + std::to_string(big) + "x" +
                               std::to_string(big) + " class (1,2)";
    if (big <= budget.max_square) {
      runner.run("q-extension/shifted-" + std::to_string(n), "q-extension", params, [&, n, big] {
        const auto lhs =
            qij_from_base(cache.get(Structure::T, 4 * n + 1, 4 * n + 2, opts)->set, 4, 4, rules);
        const auto rhs = qij_from_base(cache.get(Structure::T, big, big, opts)->set, 1, 2, rules);
        if (lhs.size() != rhs.size()) return u64(lhs.size()) + " vs " + u64(rhs.size());
        return std::string{};
      });
    } else {
      runner.skip("q-extension/shifted-" + std::to_string(n), "q-extension", params,
                  "window budget too small");
    }
  }

  // --- image-equality transfer between the two substitutions
  runner.run("image-transfer/pairs", "image-transfer", "shapes up to 3x3", [&] {
    for (auto [m, n] : {std::pair{1, 1}, {2, 2}, {2, 3}, {3, 3}}) {
      if (std::max(m, n) > budget.max_square) continue;
      const auto base = cache.get(Structure::T, m, n, opts);
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
          // crop equality classes must coincide for the two substitutions
          std::map<std::string, std::string> by_mu, by_phi;
          for (const auto& cells : base->set.members()) {
            const Grid g = base->set.member_grid(cells);
            const Grid mu_img = mu_apply(g, rules).subgrid(i, j, m, n);
            const Grid phi_img = phi_apply(g, rules).subgrid(i, j, m, n);
            const std::string mk = pattern_key(mu_img), pk = pattern_key(phi_img);
            auto [it1, fresh1] = by_mu.emplace(mk, pk);
            if (!fresh1 && it1->second != pk)
              return "same mu-crop, different phi-crop at " + std::to_string(m) + "x" +
                     std::to_string(n);
            auto [it2, fresh2] = by_phi.emplace(pk, mk);
            if (!fresh2 && it2->second != mk)
              return "same phi-crop, different mu-crop at " + std::to_string(m) + "x" +
                     std::to_string(n);
          }
        }
    }
    return std::string{};
  });

  // --- position-class characterization
  runner.run("position-classes/windows", "position-classes", "shapes up to 4x4", [&] {
    for (auto [m, n] : {std::pair{1, 1}, {2, 2}, {2, 3}, {3, 3}, {4, 4}}) {
      if (std::max(m, n) > budget.max_square) continue;
      const auto base = cache.get(Structure::T, m, n, opts);
      const Grid big = t_supertile(base->plateau_level + 1, opts.depth_cap, rules);
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
          const PatternSet by_image = pij_from_base(base->set, Structure::T, i, j, rules);
          const PatternSet by_anchor = enumerate_subpatterns_strided(big, m, n, i, j, 2);
          if (!(by_image == by_anchor))
            return "image and anchor constructions differ at " + std::to_string(m) + "x" +
                   std::to_string(n) + " class (" + std::to_string(i) + "," + std::to_string(j) +
                   ")";
        }
    }
    return std::string{};
  });

  // --- equal counts over the two alphabets from 3x3 upwards
  const int transfer_max = std::min(12, budget.max_square);
  if (transfer_max >= 3) {
    runner.run("cardinality/transfer", "cardinality-transfer", range_str(3, transfer_max), [&] {
      for (int n = 3; n <= transfer_max; ++n) {
        const std::uint64_t over_t = cache.get(Structure::T, n, n, opts)->set.size();
        const std::uint64_t over_s = cache.complexity(n, opts);
        if (over_t != over_s)
          return "n=" + std::to_string(n) + ": " + u64(over_t) + " vs " + u64(over_s);
      }
      return std::string{};
    });
  } else {
    runner.skip("cardinality/transfer", "cardinality-transfer", "n=3..12",
                "window budget too small");
  }

  // --- recursion vs enumeration
  if (ext_brute_max >= 1) {
    runner.run("recursion/vs-enumeration", "recursion-vs-enumeration", range_str(1, ext_brute_max),
               [&] {
                 for (int n = 1; n <= ext_brute_max; ++n) {
                   const ClassCounts& want = brute_at(n);
                   for (char fam : {'a', 'b', 'c'})
                     for (int i = 1; i <= 2; ++i)
                       for (int j = 1; j <= 2; ++j)
                         if (engine.value(fam, i, j, n) != want.at(fam, i, j)) {
                           std::ostringstream os;
                           os << fam << i << j << "(" << n << "): recursion "
                              << engine.value(fam, i, j, n) << " vs enumeration "
                              << want.at(fam, i, j);
                           return os.str();
                         }
                 }
                 return std::string{};
               });
  } else {
    runner.skip("recursion/vs-enumeration", "recursion-vs-enumeration", "n=1..16",
                "window budget too small");
  }

  // --- derived identities on recursive values
  runner.run("derived/recursive", "derived-identities", "n=1..2000", [&] {
    for (std::uint64_t n = 1; n <= 2000; ++n)
      for (const auto& chk : derived_identities(engine, n))
        if (chk.applicable && !chk.ok) return chk.name + " " + chk.witness;
    return std::string{};
  });
  auto engine_value = [&](char fam, int i, int j, std::int64_t n) {
    return engine.value(fam, i, j, static_cast<std::uint64_t>(n));
  };
  run_groups("extension/split2-recursive", "unique-extension", split2_extensions(),
             engine_value, 500, 4 * 500 + 3);
  run_groups("extension/split4-recursive", "unique-extension", split4_extensions(),
             engine_value, 500, 4 * 500 + 3);

  // --- headline cross-validation
  const int cross_max = std::min(24, budget.max_square);
  runner.run("cross-validation/three-routes", "closed-form", range_str(1, cross_max), [&] {
    for (int n = 1; n <= cross_max; ++n) {
      const std::uint64_t by_enum = cache.complexity(n, opts);
      const std::uint64_t by_rec = engine.complexity(n);
      const std::uint64_t by_closed = complexity_closed(n);
      if (by_enum != by_rec || by_rec != by_closed) {
        std::ostringstream os;
        os << "n=" << n << ": enumeration " << by_enum << ", recursion " << by_rec
           << ", closed form " << by_closed;
        return os.str();
      }
    }
    return std::string{};
  });

  runner.run("cross-validation/closed-vs-recursion", "closed-form",
             range_str(1, static_cast<std::int64_t>(budget.max_closed_n)), [&] {
    for (std::uint64_t n = 1; n <= budget.max_closed_n; ++n)
      if (engine.complexity(n) != complexity_closed(n)) {
        std::ostringstream os;
        os << "n=" << n << ": recursion " << engine.complexity(n) << " vs closed form "
           << complexity_closed(n);
        return os.str();
      }
    return std::string{};
  });

  // --- geometry
  const int quad_max = std::min(6, budget.max_depth - 1);
  if (quad_max >= 1) {
    runner.run("geometry/quadrant", "quadrant-relation", range_str(1, quad_max), [&] {
      for (int n = 1; n <= quad_max; ++n) {
        const QuadrantReport rep = quadrant_equivalence(n, budget.max_depth, rules);
        if (!rep.equal) return "level " + std::to_string(n) + ": " + rep.first_mismatch;
      }
      return std::string{};
    });
  } else {
    runner.skip("geometry/quadrant", "quadrant-relation", "n=1..6", "depth cap too small");
  }

  return runner.reports;
}

std::string report_table(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  std::size_t id_w = 4, pr_w = 6;
  for (const auto& r : reports) {
    id_w = std::max(id_w, r.id.size());
    pr_w = std::max(pr_w, r.params.size());
  }
  os << std::left << std::setw(8) << "status" << std::setw(static_cast<int>(id_w) + 2) << "check"
     << std::setw(static_cast<int>(pr_w) + 2) << "params" << std::setw(10) << "elapsed"
     << "witness" << '\n';
  for (const auto& r : reports) {
    const char* st = r.status == CheckReport::Status::pass     ? "pass"
                     : r.status == CheckReport::Status::fail   ? "FAIL"
                                                               : "skipped";
    std::ostringstream el;
    el << std::fixed << std::setprecision(2) << r.seconds << "s";
    os << std::left << std::setw(8) << st << std::setw(static_cast<int>(id_w) + 2) << r.id
       << std::setw(static_cast<int>(pr_w) + 2) << r.params << std::setw(10) << el.str()
       << r.witness << '\n';
  }
  int pass = 0, fail = 0, skip = 0;
  for (const auto& r : reports) {
    if (r.status == CheckReport::Status::pass) ++pass;
    if (r.status == CheckReport::Status::fail) ++fail;
    if (r.status == CheckReport::Status::skipped) ++skip;
  }
  os << pass << " passed, " << fail << " failed, " << skip << " skipped" << '\n';
  return os.str();
}

std::string report_json(const std::vector<CheckReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["anchor"] = r.anchor;
    j["params"] = r.params;
    j["status"] = r.status == CheckReport::Status::pass     ? "pass"
                  : r.status == CheckReport::Status::fail   ? "fail"
                                                            : "skipped";
    j["witness"] = r.witness;
    j["seconds"] = r.seconds;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

}  // namespace pfold
