#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "pfold/grid.hpp"
#include "pfold/substitution.hpp"

namespace pfold {

enum class Structure { T, S };

constexpr const char* structure_name(Structure s) { return s == Structure::T ? "T" : "S"; }

struct CensusOptions {
  int depth_cap = kDefaultDepthCap;
  int max_dim = 64;  // refuse window dimensions above this
  int workers = 1;   // row-band partitions for window scans
  const SubstitutionSystem* rules = nullptr;  // nullptr -> paperfolding_rules()

  const SubstitutionSystem& subst() const { return rules ? *rules : paperfolding_rules(); }
};

// Deduplicated set of same-shape patterns over one alphabet. Members are the
// row-major cell bytes; the shared shape and alphabet complete the canonical
// key (see pattern_key in grid.hpp).
class PatternSet {
 public:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };
  using Members = std::unordered_set<std::string, Hash, std::equal_to<>>;

  PatternSet(Alphabet alphabet, int rows, int cols);

  Alphabet alphabet() const { return alphabet_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t size() const { return members_.size(); }

  bool insert(std::string_view cells);  // true if newly inserted
  bool contains(std::string_view cells) const { return members_.find(cells) != members_.end(); }
  bool contains(const Grid& g) const;

  bool subset_of(const PatternSet& other) const;
  bool disjoint_with(const PatternSet& other) const;
  bool operator==(const PatternSet& other) const;

  const Members& members() const { return members_; }
  std::vector<std::string> sorted_members() const;  // lexicographic on cell bytes
  Grid member_grid(std::string_view cells) const;

  void merge(PatternSet&& other);  // union; shapes must agree

 private:
  Alphabet alphabet_;
  int rows_;
  int cols_;
  Members members_;
};

// Newline-delimited export, one record per pattern ("rows cols alphabet data"),
// sorted lexicographically on the canonical key.
std::string pattern_set_to_text(const PatternSet& set);

// Every m x n window of g, via exhaustive sliding scan. workers > 1 splits the
// anchor rows into disjoint bands scanned concurrently and merged by union;
// the result is identical to the single-worker scan.
PatternSet enumerate_subpatterns(const Grid& g, int m, int n, int workers = 1);

// Windows whose anchor is congruent to (r0, c0) with the given stride.
PatternSet enumerate_subpatterns_strided(const Grid& g, int m, int n, int r0, int c0, int stride);

struct CensusResult {
  PatternSet set;
  int plateau_level;  // first level whose window set equals the next level's
};

// P(T, m x n) resp. P(S, m x n): iterate levels from the smallest one whose
// side covers the window, stop at the first level k with set(k) == set(k+1).
// The chain inclusion set(k) <= set(k+1) is asserted along the way.
CensusResult stable_pattern_set(Structure s, int m, int n, const CensusOptions& opts = {});

// Position-classified sets. pij: crops of substitution images of the members
// of P(T, m x n) at offset (i, j); class indices reduce mod 2. qij: same with
// the twice-iterated substitution, indices mod 4.
PatternSet pij_from_base(const PatternSet& base_t, Structure target, int i, int j,
                         const SubstitutionSystem& rules = paperfolding_rules());
PatternSet qij_from_base(const PatternSet& base_t, int i, int j,
                         const SubstitutionSystem& rules = paperfolding_rules());
PatternSet pij_set(Structure target, int m, int n, int i, int j, const CensusOptions& opts = {});
PatternSet qij_set(int m, int n, int i, int j, const CensusOptions& opts = {});

int p_class_index(int i);  // reduce an arbitrary positive index mod 2 into {1, 2}
int q_class_index(int i);  // mod 4 into {1..4}

// The twelve window-class counts at index n: a over n x n, b over n x (n+1)
// (wide), c over (n+1) x n (tall). Indices i, j in {1, 2}, 0-based storage.
struct ClassCounts {
  std::uint64_t a[2][2] = {};
  std::uint64_t b[2][2] = {};
  std::uint64_t c[2][2] = {};

  std::uint64_t& at(char family, int i, int j);
  std::uint64_t at(char family, int i, int j) const;
  bool operator==(const ClassCounts&) const = default;
};

ClassCounts class_counts_bruteforce(int n, const CensusOptions& opts = {});

// |P(S, n x n)|: the number of distinct n x n patterns of the infinite
// structure, found by exhaustive enumeration at the plateau level.
std::uint64_t complexity_bruteforce(int n, const CensusOptions& opts = {});

// Shared store of stable pattern sets, keyed by (structure, rows, cols), so a
// verification run enumerates each shape once.
class CensusCache {
 public:
  std::shared_ptr<const CensusResult> get(Structure s, int m, int n, const CensusOptions& opts);
  ClassCounts class_counts(int n, const CensusOptions& opts);
  std::uint64_t complexity(int n, const CensusOptions& opts);

 private:
  std::map<std::tuple<int, int, int>, std::shared_ptr<const CensusResult>> store_;
};

}  // namespace pfold
