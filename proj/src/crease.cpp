#include "pfold/crease.hpp"

#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace pfold {

namespace {

std::uint8_t raw(std::optional<Fold> f) { return f ? static_cast<std::uint8_t>(*f) : 0; }

std::optional<Fold> boxed(std::uint8_t v) {
  if (v == 0) return std::nullopt;
  return static_cast<Fold>(v);
}

const char* fold_name(std::optional<Fold> f) {
  if (!f) return "none";
  return *f == Fold::mountain ? "mountain" : "valley";
}

}  // namespace

CreaseField::CreaseField(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("CreaseField dimensions must be positive");
  v_.assign(std::size_t(rows) * (cols + 1), 0);
  h_.assign(std::size_t(rows + 1) * cols, 0);
}

std::size_t CreaseField::v_idx(int r, int c) const {
  if (r < 1 || r > rows_ || c < 1 || c > cols_ + 1) {
    std::ostringstream os;
    os << "vertical edge (" << r << "," << c << ") outside " << rows_ << "x" << cols_ << " field";
    throw std::out_of_range(os.str());
  }
  return std::size_t(r - 1) * (cols_ + 1) + (c - 1);
}

std::size_t CreaseField::h_idx(int r, int c) const {
  if (r < 0 || r > rows_ || c < 1 || c > cols_) {
    std::ostringstream os;
    os << "horizontal edge (" << r << "," << c << ") outside " << rows_ << "x" << cols_ << " field";
    throw std::out_of_range(os.str());
  }
  return std::size_t(r) * cols_ + (c - 1);
}

std::optional<Fold> CreaseField::v_edge(int r, int c) const { return boxed(v_[v_idx(r, c)]); }
std::optional<Fold> CreaseField::h_edge(int r, int c) const { return boxed(h_[h_idx(r, c)]); }
void CreaseField::set_v(int r, int c, std::optional<Fold> f) { v_[v_idx(r, c)] = raw(f); }
void CreaseField::set_h(int r, int c, std::optional<Fold> f) { h_[h_idx(r, c)] = raw(f); }

std::size_t CreaseField::crease_count() const {
  std::size_t n = 0;
  for (auto v : v_) n += v != 0;
  for (auto v : h_) n += v != 0;
  return n;
}

CreaseField decorate(const Grid& s) {
  if (s.alphabet() != Alphabet::B4)
    throw std::invalid_argument("decorate requires a grid over the 4-letter alphabet");
  CreaseField f(s.rows(), s.cols());
  for (int r = 1; r <= s.rows(); ++r) {
    for (int c = 1; c <= s.cols(); ++c) {
      const std::uint8_t v = s.at(r, c);
      f.set_v(r, c, (v & 2) ? Fold::valley : Fold::mountain);
      f.set_h(r, c, (v & 1) ? Fold::valley : Fold::mountain);
    }
  }
  return f;
}

CreaseField reflect_x(const CreaseField& f) {
  CreaseField out(f.rows(), f.cols());
  for (int r = 1; r <= f.rows(); ++r)
    for (int c = 1; c <= f.cols() + 1; ++c) {
      auto e = f.v_edge(f.rows() + 1 - r, c);
      out.set_v(r, c, e ? std::optional<Fold>(flip(*e)) : std::nullopt);
    }
  for (int r = 0; r <= f.rows(); ++r)
    for (int c = 1; c <= f.cols(); ++c) {
      auto e = f.h_edge(f.rows() - r, c);
      out.set_h(r, c, e ? std::optional<Fold>(flip(*e)) : std::nullopt);
    }
  return out;
}

CreaseField reflect_y(const CreaseField& f) {
  CreaseField out(f.rows(), f.cols());
  for (int r = 1; r <= f.rows(); ++r)
    for (int c = 1; c <= f.cols() + 1; ++c) {
      auto e = f.v_edge(r, f.cols() + 2 - c);
      out.set_v(r, c, e ? std::optional<Fold>(flip(*e)) : std::nullopt);
    }
  for (int r = 0; r <= f.rows(); ++r)
    for (int c = 1; c <= f.cols(); ++c) {
      auto e = f.h_edge(r, f.cols() + 1 - c);
      out.set_h(r, c, e ? std::optional<Fold>(flip(*e)) : std::nullopt);
    }
  return out;
}

CreaseField rotate180(const CreaseField& f) { return reflect_x(reflect_y(f)); }

namespace {

// Copy src's edges onto dst with the given cell offset. Boundary edges of src
// land on interior lines of dst; callers place quadrants first and write the
// center axes afterwards.
void place(CreaseField& dst, const CreaseField& src, int row_off, int col_off) {
  for (int r = 1; r <= src.rows(); ++r)
    for (int c = 1; c <= src.cols() + 1; ++c)
      if (auto e = src.v_edge(r, c)) dst.set_v(r + row_off, c + col_off, e);
  for (int r = 0; r <= src.rows(); ++r)
    for (int c = 1; c <= src.cols(); ++c)
      if (auto e = src.h_edge(r, c)) dst.set_h(r + row_off, c + col_off, e);
}

}  // namespace

CreaseField fold_structure(int level, int depth_cap) {
  if (level < 0) throw std::invalid_argument("fold level must be nonnegative");
  if (level > depth_cap) {
    std::ostringstream os;
    os << "fold level " << level << " exceeds depth cap " << depth_cap;
    throw budget_error(os.str());
  }
  CreaseField f(1, 1);  // the unfolded sheet
  for (int k = 1; k <= level; ++k) {
    const int half = 1 << (k - 1);
    CreaseField next(2 * half, 2 * half);
    if (k > 1) {  // level-1 quadrants are empty 1x1 sheets, nothing to place
      place(next, f, 0, half);                       // upper right
      place(next, reflect_x(f), half, half);         // lower right
      place(next, reflect_y(f), 0, 0);               // upper left
      place(next, reflect_x(reflect_y(f)), half, 0); // lower left
    }
    for (int r = 1; r <= 2 * half; ++r) next.set_v(r, half + 1, Fold::valley);
    for (int c = 1; c <= 2 * half; ++c)
      next.set_h(half, c, c <= half ? Fold::mountain : Fold::valley);
    f = std::move(next);
  }
  return f;
}

CreaseField upper_right_quadrant(const CreaseField& f) {
  if (f.rows() != f.cols() || f.rows() % 2 != 0)
    throw std::invalid_argument("quadrant extraction needs an even-sided square field");
  const int half = f.rows() / 2;
  CreaseField out(half, half);
  for (int r = 1; r <= half; ++r)
    for (int c = 1; c <= half + 1; ++c) out.set_v(r, c, f.v_edge(r, c + half));
  for (int r = 0; r <= half; ++r)
    for (int c = 1; c <= half; ++c) out.set_h(r, c, f.h_edge(r, c + half));
  return out;
}

QuadrantReport quadrant_equivalence(int level, int depth_cap, const SubstitutionSystem& rules) {
  if (level < 1) throw std::invalid_argument("quadrant equivalence needs level >= 1");
  const CreaseField dec = decorate(s_supertile(level, depth_cap, rules));
  const CreaseField quad = upper_right_quadrant(fold_structure(level + 1, depth_cap));
  QuadrantReport rep{level, true, {}};
  for (int r = 1; r <= dec.rows() && rep.equal; ++r)
    for (int c = 1; c <= dec.cols() + 1 && rep.equal; ++c)
      if (dec.v_edge(r, c) != quad.v_edge(r, c)) {
        rep.equal = false;
        std::ostringstream os;
        os << "vertical edge (" << r << "," << c << "): " << fold_name(dec.v_edge(r, c)) << " vs "
           << fold_name(quad.v_edge(r, c));
        rep.first_mismatch = os.str();
      }
  for (int r = 0; r <= dec.rows() && rep.equal; ++r)
    for (int c = 1; c <= dec.cols() && rep.equal; ++c)
      if (dec.h_edge(r, c) != quad.h_edge(r, c)) {
        rep.equal = false;
        std::ostringstream os;
        os << "horizontal edge (" << r << "," << c << "): " << fold_name(dec.h_edge(r, c))
           << " vs " << fold_name(quad.h_edge(r, c));
        rep.first_mismatch = os.str();
      }
  return rep;
}

namespace {

char edge_char(std::optional<Fold> f) {
  if (!f) return '.';
  return *f == Fold::mountain ? 'M' : 'V';
}

std::optional<Fold> edge_from_char(char ch) {
  switch (ch) {
    case '.': return std::nullopt;
    case 'M': return Fold::mountain;
    case 'V': return Fold::valley;
  }
  throw std::invalid_argument("crease edge character must be M, V, or .");
}

}  // namespace

std::string crease_to_json(const CreaseField& f) {
  std::string v, h;
  v.reserve(std::size_t(f.rows()) * (f.cols() + 1));
  h.reserve(std::size_t(f.rows() + 1) * f.cols());
  for (int r = 1; r <= f.rows(); ++r)
    for (int c = 1; c <= f.cols() + 1; ++c) v.push_back(edge_char(f.v_edge(r, c)));
  for (int r = 0; r <= f.rows(); ++r)
    for (int c = 1; c <= f.cols(); ++c) h.push_back(edge_char(f.h_edge(r, c)));
  nlohmann::ordered_json j;
  j["rows"] = f.rows();
  j["cols"] = f.cols();
  j["v"] = v;
  j["h"] = h;
  return j.dump();
}

CreaseField crease_from_json(std::string_view json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  const std::string v = j.at("v").get<std::string>();
  const std::string h = j.at("h").get<std::string>();
  if (rows <= 0 || cols <= 0 || v.size() != std::size_t(rows) * (cols + 1) ||
      h.size() != std::size_t(rows + 1) * cols)
    throw std::invalid_argument("crease JSON edge arrays do not match dimensions");
  CreaseField f(rows, cols);
  std::size_t k = 0;
  for (int r = 1; r <= rows; ++r)
    for (int c = 1; c <= cols + 1; ++c) f.set_v(r, c, edge_from_char(v[k++]));
  k = 0;
  for (int r = 0; r <= rows; ++r)
    for (int c = 1; c <= cols; ++c) f.set_h(r, c, edge_from_char(h[k++]));
  return f;
}

}  // namespace pfold
