#pragma once

#include <array>
#include <cstdint>

#include "pfold/grid.hpp"
#include "pfold/letters.hpp"

namespace pfold {

// A pair of block substitutions: each letter of the 16-letter alphabet maps to
// a 2x2 block, once over the 16-letter alphabet (mu) and once over the
// 4-letter alphabet (phi). Blocks are stored row-major: TL, TR, BL, BR.
// The rules are plain data so alternate tables can be substituted in tests;
// only the paperfolding tables ship.
struct SubstitutionSystem {
  std::array<std::array<std::uint8_t, 4>, 16> mu;
  std::array<std::array<std::uint8_t, 4>, 16> phi;
};

const SubstitutionSystem& paperfolding_rules();

inline constexpr int kDefaultDepthCap = 12;  // grids up to 4096 x 4096 are materialized

// Apply the block substitution cell-wise; doubles both dimensions.
Grid mu_apply(const Grid& g, const SubstitutionSystem& rules = paperfolding_rules());
Grid phi_apply(const Grid& g, const SubstitutionSystem& rules = paperfolding_rules());

// level-fold iterate of mu on a single letter; a 2^level x 2^level grid.
Grid supertile(Letter16 seed, int level, int depth_cap = kDefaultDepthCap,
               const SubstitutionSystem& rules = paperfolding_rules());

// The distinguished supertiles: t_supertile(n) iterates mu on N,
// s_supertile(n) = phi(t_supertile(n - 1)) for n >= 1.
Grid t_supertile(int level, int depth_cap = kDefaultDepthCap,
                 const SubstitutionSystem& rules = paperfolding_rules());
Grid s_supertile(int level, int depth_cap = kDefaultDepthCap,
                 const SubstitutionSystem& rules = paperfolding_rules());

// Streaming access to supertile(seed, level) without materializing it:
// descends one substitution level per step using the parity of (r, c).
Letter16 cell_at(Letter16 seed, int level, std::int64_t r, std::int64_t c,
                 const SubstitutionSystem& rules = paperfolding_rules());
Letter4 s_cell_at(int level, std::int64_t r, std::int64_t c,
                  const SubstitutionSystem& rules = paperfolding_rules());

}  // namespace pfold
