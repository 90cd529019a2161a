#pragma once

#include <string>

#include "pfold/crease.hpp"

namespace pfold {

// Fixed 2-characters-per-cell text layout: '+' at grid corners, '-'/'|' on
// uncreased edges, '*' for mountain folds and 'o' for valley folds.
std::string render_ascii(const CreaseField& f);

// Deterministic SVG 1.1, one unit per cell: light grid lines, solid segments
// on creased edges, filled circle (radius 0.15) for a mountain fold and open
// circle for a valley fold, matching the usual crease-diagram convention.
std::string render_svg(const CreaseField& f);

}  // namespace pfold
