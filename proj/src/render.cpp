#include "pfold/render.hpp"

#include <sstream>

namespace pfold {

namespace {

char mark(std::optional<Fold> f, char plain) {
  if (!f) return plain;
  return *f == Fold::mountain ? '*' : 'o';
}

// Coordinates are multiples of one half; print without float formatting.
std::string half_units(int halves) {
  std::string s = std::to_string(halves / 2);
  if (halves % 2) s += ".5";
  return s;
}

}  // namespace

std::string render_ascii(const CreaseField& f) {
  std::ostringstream os;
  for (int line = 0; line <= 2 * f.rows(); ++line) {
    std::string row;
    if (line % 2 == 0) {
      const int r = line / 2;  // horizontal edges below cell row r
      for (int c = 1; c <= f.cols(); ++c) {
        row += '+';
        row += mark(f.h_edge(r, c), '-');
      }
      row += '+';
    } else {
      const int r = (line + 1) / 2;
      for (int c = 1; c <= f.cols() + 1; ++c) {
        row += mark(f.v_edge(r, c), '|');
        if (c <= f.cols()) row += ' ';
      }
    }
    os << row << '\n';
  }
  return os.str();
}

std::string render_svg(const CreaseField& f) {
  const int R = f.rows(), C = f.cols();
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"-0.5 -0.5 "
     << C + 1 << ' ' << R + 1 << "\" width=\"" << 32 * (C + 1) << "\" height=\"" << 32 * (R + 1)
     << "\">\n";
  os << "<g stroke=\"#bbbbbb\" stroke-width=\"0.02\">\n";
  for (int c = 0; c <= C; ++c)
    os << "<line x1=\"" << c << "\" y1=\"0\" x2=\"" << c << "\" y2=\"" << R << "\"/>\n";
  for (int r = 0; r <= R; ++r)
    os << "<line x1=\"0\" y1=\"" << r << "\" x2=\"" << C << "\" y2=\"" << r << "\"/>\n";
  os << "</g>\n<g stroke=\"#000000\" stroke-width=\"0.04\">\n";
  // Cell (r, c) spans x in [c-1, c], y in [r-1, r] with y growing downwards.
  for (int r = 1; r <= R; ++r)
    for (int c = 1; c <= C + 1; ++c)
      if (f.v_edge(r, c))
        os << "<line x1=\"" << c - 1 << "\" y1=\"" << r - 1 << "\" x2=\"" << c - 1 << "\" y2=\""
           << r << "\"/>\n";
  for (int r = 0; r <= R; ++r)
    for (int c = 1; c <= C; ++c)
      if (f.h_edge(r, c))
        os << "<line x1=\"" << c - 1 << "\" y1=\"" << r << "\" x2=\"" << c << "\" y2=\"" << r
           << "\"/>\n";
  os << "</g>\n<g stroke=\"#000000\" stroke-width=\"0.03\">\n";
  auto circle = [&os](int x_halves, int y_halves, Fold f) {
    os << "<circle cx=\"" << half_units(x_halves) << "\" cy=\"" << half_units(y_halves)
       << "\" r=\"0.15\" fill=\"" << (f == Fold::mountain ? "black" : "white") << "\"/>\n";
  };
  for (int r = 1; r <= R; ++r)
    for (int c = 1; c <= C + 1; ++c)
      if (auto e = f.v_edge(r, c)) circle(2 * (c - 1), 2 * r - 1, *e);
  for (int r = 0; r <= R; ++r)
    for (int c = 1; c <= C; ++c)
      if (auto e = f.h_edge(r, c)) circle(2 * c - 1, 2 * r, *e);
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace pfold
