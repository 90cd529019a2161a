#include "pfold/grid.hpp"

#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace pfold {

Grid::Grid(Alphabet alphabet, int rows, int cols, std::uint8_t fill)
    : alphabet_(alphabet), rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("Grid dimensions must be positive");
  check_value(fill);
  cells_.assign(std::size_t(rows) * cols, fill);
}

Grid Grid::from_rows(Alphabet alphabet, const std::vector<std::string>& rows) {
  if (rows.empty()) throw std::invalid_argument("Grid needs at least one row");
  const int r = static_cast<int>(rows.size());
  const int c = static_cast<int>(rows[0].size());
  Grid g(alphabet, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("Grid rows must all have the same length");
    for (int j = 0; j < c; ++j) g.cells_[std::size_t(i) * c + j] = letter_from_char(alphabet, rows[i][j]);
  }
  return g;
}

void Grid::check_index(int r, int c) const {
  if (r < 1 || r > rows_ || c < 1 || c > cols_) {
    std::ostringstream os;
    os << "Grid index (" << r << "," << c << ") outside " << rows_ << "x" << cols_;
    throw std::out_of_range(os.str());
  }
}

void Grid::check_value(std::uint8_t v) const {
  if (v >= alphabet_size(alphabet_)) throw std::invalid_argument("cell value outside alphabet");
}

Grid Grid::subgrid(int r, int c, int m, int n) const {
  if (m < 1 || n < 1) throw std::invalid_argument("subgrid shape must be positive");
  if (r < 1 || c < 1 || r + m - 1 > rows_ || c + n - 1 > cols_) {
    std::ostringstream os;
    os << "subgrid [" << r << "," << c << "," << m << "x" << n << "] outside " << rows_ << "x" << cols_;
    throw std::out_of_range(os.str());
  }
  Grid out(alphabet_, m, n);
  for (int i = 0; i < m; ++i)
    std::copy_n(row_ptr(r + i) + (c - 1), n, out.row_ptr(i + 1));
  return out;
}

std::string Grid::row_string(int r) const {
  check_index(r, 1);
  std::string s(cols_, '?');
  const std::uint8_t* p = row_ptr(r);
  for (int j = 0; j < cols_; ++j) s[j] = letter_to_char(alphabet_, p[j]);
  return s;
}

std::string Grid::data_string() const {
  std::string s;
  s.reserve(cells_.size());
  for (std::uint8_t v : cells_) s.push_back(letter_to_char(alphabet_, v));
  return s;
}

std::string grid_to_json(const Grid& g) {
  nlohmann::ordered_json j;
  j["alphabet"] = alphabet_name(g.alphabet());
  j["rows"] = g.rows();
  j["cols"] = g.cols();
  j["data"] = g.data_string();
  return j.dump();
}

Grid grid_from_json(std::string_view json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  const std::string aname = j.at("alphabet").get<std::string>();
  Alphabet a;
  if (aname == "A16")
    a = Alphabet::A16;
  else if (aname == "B4")
    a = Alphabet::B4;
  else
    throw std::invalid_argument("unknown alphabet tag: " + aname);
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  const std::string data = j.at("data").get<std::string>();
  if (rows <= 0 || cols <= 0 || data.size() != std::size_t(rows) * cols)
    throw std::invalid_argument("grid JSON data length does not match rows*cols");
  Grid g(a, rows, cols);
  for (int r = 1; r <= rows; ++r)
    for (int c = 1; c <= cols; ++c)
      g.set(r, c, letter_from_char(a, data[std::size_t(r - 1) * cols + (c - 1)]));
  return g;
}

std::string pattern_key(const Grid& g) {
  if (g.rows() > 255 || g.cols() > 255)
    throw std::invalid_argument("pattern key limited to dimensions <= 255");
  std::string key;
  key.reserve(3 + g.cells().size());
  key.push_back(static_cast<char>(g.alphabet() == Alphabet::A16 ? 0 : 1));
  key.push_back(static_cast<char>(g.rows()));
  key.push_back(static_cast<char>(g.cols()));
  key.append(reinterpret_cast<const char*>(g.cells().data()), g.cells().size());
  return key;
}

Grid grid_from_pattern_key(std::string_view key) {
  if (key.size() < 3) throw std::invalid_argument("pattern key too short");
  const Alphabet a = key[0] == 0 ? Alphabet::A16 : Alphabet::B4;
  const int rows = static_cast<unsigned char>(key[1]);
  const int cols = static_cast<unsigned char>(key[2]);
  if (key.size() != 3 + std::size_t(rows) * cols)
    throw std::invalid_argument("pattern key length does not match header");
  Grid g(a, rows, cols);
  for (int r = 1; r <= rows; ++r)
    for (int c = 1; c <= cols; ++c)
      g.set(r, c, static_cast<std::uint8_t>(key[3 + std::size_t(r - 1) * cols + (c - 1)]));
  return g;
}

}  // namespace pfold
