#include "vhlab/path.hpp"

#include <algorithm>
#include <stdexcept>

namespace vhlab::path {

using heis::Letter;
using heis::checked_add;
using heis::checked_mul;
using heis::checked_sub;

std::pair<std::int64_t, std::int64_t> LatticePath::endpoint() const {
  return points.back();
}

LatticePath word_to_path(const heis::Word& w) {
  // two alphabets are supported: {x, x^-1, y, y^-1, e} and {x, x^-1, t};
  // mixing y-letters with t-letters has no path reading (t flips y too)
  bool has_t = false, has_y = false;
  for (Letter l : w) {
    has_t |= (l == Letter::T);
    has_y |= (l == Letter::Y || l == Letter::Yinv);
  }
  if (has_t && has_y)
    throw std::invalid_argument("word_to_path: y-letters cannot mix with t");
  LatticePath p;
  p.points.reserve(w.size() + 1);
  std::int64_t x = 0, y = 0;
  int mode = 0;  // 0: x-letters move horizontally; 1: vertically
  p.points.emplace_back(x, y);
  for (Letter l : w) {
    switch (l) {
      case Letter::X:
        (mode == 0 ? x : y) = checked_add(mode == 0 ? x : y, 1);
        break;
      case Letter::Xinv:
        (mode == 0 ? x : y) = checked_sub(mode == 0 ? x : y, 1);
        break;
      case Letter::Y:
        y = checked_add(y, 1);
        break;
      case Letter::Yinv:
        y = checked_sub(y, 1);
        break;
      case Letter::T:
        mode ^= 1;
        continue;  // no vertex added for a mode toggle
      case Letter::E:
        continue;
    }
    p.points.emplace_back(x, y);
  }
  return p;
}

namespace {
// closure of p as move list: p's own moves then x^{-a} y^{-b}
std::vector<std::pair<std::int64_t, std::int64_t>> closed_vertices(
    const LatticePath& p) {
  auto pts = p.points;
  auto [a, b] = p.endpoint();
  std::int64_t x = a, y = b;
  while (x != 0) {
    x += (a > 0 ? -1 : 1);
    pts.emplace_back(x, y);
  }
  while (y != 0) {
    y += (b > 0 ? -1 : 1);
    pts.emplace_back(x, y);
  }
  return pts;
}
}  // namespace

std::int64_t algebraic_area(const LatticePath& p) {
  // cocycle: up move adds the abscissa, down move subtracts it; the closure
  // x^{-a} y^{-b} contributes nothing (its vertical run is at abscissa 0)
  std::int64_t area = 0;
  for (std::size_t i = 1; i < p.points.size(); ++i) {
    auto [x0, y0] = p.points[i - 1];
    auto [x1, y1] = p.points[i];
    if (y1 != y0) area = checked_add(area, checked_mul(x0, y1 - y0));
  }
  return area;
}

std::int64_t WindingGrid::sum() const {
  std::int64_t s = 0;
  for (const auto& row : rows)
    for (std::int64_t v : row) s = checked_add(s, v);
  return s;
}

std::int64_t WindingGrid::at(std::int64_t x, std::int64_t y) const {
  std::int64_t iy = y - ymin, ix = x - xmin;
  if (iy < 0 || ix < 0 || iy >= static_cast<std::int64_t>(rows.size())) return 0;
  if (ix >= static_cast<std::int64_t>(rows[iy].size())) return 0;
  return rows[iy][ix];
}

WindingGrid winding_grid(const LatticePath& p) {
  auto pts = closed_vertices(p);
  std::int64_t xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  for (auto [x, y] : pts) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  WindingGrid g;
  g.xmin = xmin;
  g.ymin = ymin;
  std::size_t w = static_cast<std::size_t>(xmax - xmin);
  std::size_t h = static_cast<std::size_t>(ymax - ymin);
  if (w == 0 || h == 0) {  // degenerate curve encloses nothing
    g.rows.assign(h ? h : 0, std::vector<std::int64_t>(w, 0));
    return g;
  }
  g.rows.assign(h, std::vector<std::int64_t>(w, 0));
  // ray casting per row, accumulated as a difference array:
  // an up edge at abscissa u covering the row crosses the rightward ray of
  // every cell with center x+1/2 < u, i.e. cells xmin..u-1: +1 each
  std::vector<std::int64_t> diff(w + 1);
  for (std::int64_t row = 0; row < static_cast<std::int64_t>(h); ++row) {
    std::fill(diff.begin(), diff.end(), 0);
    std::int64_t ylow = ymin + row;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      auto [x0, y0] = pts[i - 1];
      auto [x1, y1] = pts[i];
      if (x0 != x1) continue;  // horizontal edge: no crossing
      // the vertical edge spans [lo, lo+1); it covers this row iff lo == ylow
      std::int64_t lo = std::min(y0, y1);
      if (lo != ylow) continue;
      int dir = y1 > y0 ? 1 : -1;
      if (x0 > xmin) {
        diff[0] += dir;
        diff[x0 - xmin] -= dir;
      }
    }
    std::int64_t acc = 0;
    for (std::size_t col = 0; col < w; ++col) {
      acc += diff[col];
      g.rows[row][col] = acc;
    }
  }
  return g;
}

bool is_trivial_h3(const heis::Word& w) {
  for (Letter l : w)
    if (l == Letter::T)
      throw std::invalid_argument("is_trivial_h3: t-letters not allowed here");
  LatticePath p = word_to_path(w);
  return p.endpoint() == std::pair<std::int64_t, std::int64_t>{0, 0} &&
         algebraic_area(p) == 0;
}

}  // namespace vhlab::path
