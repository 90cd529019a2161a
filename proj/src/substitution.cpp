#include "pfold/substitution.hpp"

#include <sstream>
#include <stdexcept>

namespace pfold {

namespace {

// Block images for A..P in row-major TL TR BL BR order.
constexpr const char* kMuBlocks[16] = {
    "AFGC", "AFHD", "BEGC", "BEHD",  // A B C D
    "ANGK", "ANHL", "BMGK", "BMHL",  // E F G H
    "IFOC", "IFPD", "JEOC", "JEPD",  // I J K L
    "INOK", "INPL", "JMOK", "JMPL",  // M N O P
};

constexpr const char* kPhiBlocks[16] = {
    "0100", "0111", "1000", "1011",  // A B C D
    "0302", "0313", "1202", "1213",  // E F G H
    "2120", "2131", "3020", "3031",  // I J K L
    "2322", "2333", "3222", "3233",  // M N O P
};

SubstitutionSystem build_paperfolding() {
  SubstitutionSystem s{};
  for (int x = 0; x < 16; ++x) {
    for (int k = 0; k < 4; ++k) {
      s.mu[x][k] = static_cast<std::uint8_t>(kMuBlocks[x][k] - 'A');
      s.phi[x][k] = static_cast<std::uint8_t>(kPhiBlocks[x][k] - '0');
    }
  }
  return s;
}

Grid apply_blocks(const Grid& g, const std::array<std::array<std::uint8_t, 4>, 16>& table,
                  Alphabet out_alphabet) {
  if (g.alphabet() != Alphabet::A16)
    throw std::invalid_argument("block substitution requires a grid over the 16-letter alphabet");
  Grid out(out_alphabet, 2 * g.rows(), 2 * g.cols());
  for (int r = 1; r <= g.rows(); ++r) {
    const std::uint8_t* in = g.row_ptr(r);
    std::uint8_t* top = out.row_ptr(2 * r - 1);
    std::uint8_t* bot = out.row_ptr(2 * r);
    for (std::size_t c = 0; c < std::size_t(g.cols()); ++c) {
      const auto& blk = table[in[c]];
      top[2 * c] = blk[0];
      top[2 * c + 1] = blk[1];
      bot[2 * c] = blk[2];
      bot[2 * c + 1] = blk[3];
    }
  }
  return out;
}

void check_depth(int level, int depth_cap) {
  if (level < 0) throw std::invalid_argument("supertile level must be nonnegative");
  if (level > depth_cap) {
    std::ostringstream os;
    os << "supertile level " << level << " exceeds depth cap " << depth_cap;
    throw budget_error(os.str());
  }
}

}  // namespace

const SubstitutionSystem& paperfolding_rules() {
  static const SubstitutionSystem rules = build_paperfolding();
  return rules;
}

Grid mu_apply(const Grid& g, const SubstitutionSystem& rules) {
  return apply_blocks(g, rules.mu, Alphabet::A16);
}

Grid phi_apply(const Grid& g, const SubstitutionSystem& rules) {
  return apply_blocks(g, rules.phi, Alphabet::B4);
}

Grid supertile(Letter16 seed, int level, int depth_cap, const SubstitutionSystem& rules) {
  check_depth(level, depth_cap);
  Grid g(Alphabet::A16, 1, 1, static_cast<std::uint8_t>(seed.index()));
  for (int k = 0; k < level; ++k) g = mu_apply(g, rules);
  return g;
}

Grid t_supertile(int level, int depth_cap, const SubstitutionSystem& rules) {
  return supertile(Letter16::from_char('N'), level, depth_cap, rules);
}

Grid s_supertile(int level, int depth_cap, const SubstitutionSystem& rules) {
  if (level < 1) throw std::invalid_argument("s_supertile is defined for level >= 1");
  check_depth(level, depth_cap);
  return phi_apply(t_supertile(level - 1, depth_cap, rules), rules);
}

Letter16 cell_at(Letter16 seed, int level, std::int64_t r, std::int64_t c,
                 const SubstitutionSystem& rules) {
  if (level < 0 || level > 62) throw std::invalid_argument("cell_at level out of range");
  const std::int64_t side = std::int64_t(1) << level;
  if (r < 1 || r > side || c < 1 || c > side) {
    std::ostringstream os;
    os << "cell (" << r << "," << c << ") outside 2^" << level << " square";
    throw std::out_of_range(os.str());
  }
  std::uint8_t v = static_cast<std::uint8_t>(seed.index());
  for (int bit = level - 1; bit >= 0; --bit) {
    const int i = static_cast<int>(((r - 1) >> bit) & 1);
    const int j = static_cast<int>(((c - 1) >> bit) & 1);
    v = rules.mu[v][2 * i + j];
  }
  return Letter16::from_index(v);
}

Letter4 s_cell_at(int level, std::int64_t r, std::int64_t c, const SubstitutionSystem& rules) {
  if (level < 1) throw std::invalid_argument("s_cell_at is defined for level >= 1");
  const std::int64_t side = std::int64_t(1) << level;
  if (r < 1 || r > side || c < 1 || c > side) throw std::out_of_range("cell outside 2^level square");
  const Letter16 parent =
      cell_at(Letter16::from_char('N'), level - 1, (r + 1) / 2, (c + 1) / 2, rules);
  const int i = static_cast<int>(1 - (r & 1));
  const int j = static_cast<int>(1 - (c & 1));
  return Letter4::from_index(rules.phi[parent.index()][2 * i + j]);
}

}  // namespace pfold
