#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "pfold/census.hpp"

namespace pfold {

// floor(log2(n - 1)) for n >= 2, via bit operations only (no floating point,
// so the n = 2^k + 1 boundaries are exact).
int alpha_index(std::uint64_t n);

// The closed-form square-pattern count: special-cased at n = 1, 2, quadratic
// in n with the alpha_index power-of-two terms for n >= 3. Throws budget_error
// when the count would overflow 64 bits.
std::uint64_t complexity_closed(std::uint64_t n);

// Memoized evaluation of the window-class counts and the square-pattern count
// from their recursion systems. Arguments up to 10 come from the seed table;
// larger arguments reduce by splitting the index as 4q + r. The memo tables
// are the only state; an engine is not synchronized, so confine it to one
// thread or guard calls externally.
class RecursionEngine {
 public:
  explicit RecursionEngine(const std::array<std::array<std::uint64_t, 10>, 12>* seeds = nullptr);

  std::uint64_t value(char family, int i, int j, std::uint64_t n);  // family a, b, or c
  ClassCounts class_counts(std::uint64_t n);

  // Square-pattern count via the halving system, seeds n <= 5.
  std::uint64_t complexity(std::uint64_t n);

 private:
  std::uint64_t eval(int func, std::uint64_t n);

  std::array<std::array<std::uint64_t, 10>, 12> seeds_;
  std::unordered_map<std::uint64_t, std::uint64_t> memo_;
  std::unordered_map<std::uint64_t, std::uint64_t> memo_complexity_;
};

// Seed values for the twelve class counts plus the square-pattern count,
// n = 1..10, in export row order a11,a12,a21,a22,b11,...,c22,A.
const std::array<std::array<std::uint64_t, 10>, 13>& seed_table();
extern const std::array<const char*, 13> kSeedRowNames;

// The seed table in the documented CSV form (columns n,a11,...,c22,A).
std::string seed_table_csv();
std::string census_csv_header();

struct IdentityCheck {
  std::string name;
  bool applicable;
  bool ok;
  std::string witness;
};

// Evaluates the derived count identities at index n on engine values:
// the equal even-index classes, the square/wide equality at odd index, the
// two +4 offsets, and (for n >= 3) the halving recursions for the
// square-pattern count.
std::vector<IdentityCheck> derived_identities(RecursionEngine& engine, std::uint64_t n);

}  // namespace pfold
