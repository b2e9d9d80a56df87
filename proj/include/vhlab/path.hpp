#pragma once
// =============================================================================
// Lattice-path reading of group words.
//
// Over the x,y alphabet a word walks on Z^2 (x/xinv = right/left, y/yinv =
// up/down, e = stay).  Over the x,t alphabet of vH the involution t toggles a
// direction mode: x moves horizontally while the mode is even and vertically
// while it is odd.
//
// Closing a path whose endpoint is (a,b) with a horizontal run x^{-a} followed
// by a vertical run y^{-b} produces a closed lattice curve.  Its algebraic
// area -- the sum over all unit cells of the winding number of the curve
// around the cell -- equals the c-coordinate (commutator coordinate) of the
// word evaluated in the Heisenberg group.  The incremental form of the same
// invariant: each up move adds the current abscissa to a running total, each
// down move subtracts it.  A word is trivial in H iff its path returns to the
// origin with area 0.
//
// Winding numbers are computed independently of the cocycle by ray casting:
// the winding number of a cell equals the signed number of vertical curve
// edges crossing a horizontal ray cast from the cell's center to the right
// (up edges count +1, down edges -1).
// =============================================================================
#include <cstdint>
#include <vector>

#include "vhlab/heis.hpp"

namespace vhlab::path {

struct LatticePath {
  // vertices visited, starting at (0,0); size = #moves + 1
  std::vector<std::pair<std::int64_t, std::int64_t>> points;
  std::pair<std::int64_t, std::int64_t> endpoint() const;
};

// projects a word to its path; both alphabets supported (t toggles the mode)
LatticePath word_to_path(const heis::Word& w);

// area of the path closed with x^{-a} y^{-b}; computed by the cocycle
std::int64_t algebraic_area(const LatticePath& p);

struct WindingGrid {
  std::int64_t xmin = 0, ymin = 0;       // cell (xmin,ymin) is rows[0][0]
  std::vector<std::vector<std::int64_t>> rows;  // rows[y][x], y increasing
  std::int64_t sum() const;
  std::int64_t at(std::int64_t x, std::int64_t y) const;  // 0 outside
};

// winding number of every unit cell of the closed curve (path + closure)
WindingGrid winding_grid(const LatticePath& p);

// trivial in H <=> endpoint (0,0) and area 0
bool is_trivial_h3(const heis::Word& w);

}  // namespace vhlab::path
