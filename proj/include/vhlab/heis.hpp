#pragma once
// =============================================================================
// The discrete Heisenberg group H and its flip extension vH = H x| C2.
//
// H is Z^3 with (a,b,c)(a',b',c') = (a+a', b+b', c+c' + a b'); think of
// (a,b,c) as the unitriangular matrix [[1,a,c],[0,1,b],[0,0,1]].  Generators
// x = (1,0,0), y = (0,1,0); the commutator z = [x,y] = (0,0,1) is central.
//
// The flip is the order-2 automorphism exchanging x and y.  On coordinates it
// is (a,b,c) |-> (b,a,ab-c): writing h = x^a y^b z^(c-ab) and swapping x,y
// (which inverts z) gives y^a x^b z^(ab-c).  vH adjoins an involution t acting
// by the flip: (h,e)(h',e') = (h flip^e(h'), e xor e'), so t x t = y.
//
// vH embeds in SL3(Z):
//   x -> [[1,1,0],[0,1,1],[0,0,1]],  y -> [[1,1,0],[0,1,-1],[0,0,1]],
//   t -> diag(-1,-1,1),
// and a vH element in the normal form x^a y^b [x,y]^(c-ab) t^e maps to the
// corresponding matrix product.  sl3_check evaluates words along both routes.
//
// Coordinates are 64-bit with overflow-checked arithmetic: any overflow throws
// instead of wrapping, so results that come back are exact.
// =============================================================================
#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace vhlab::heis {

enum class Letter : std::uint8_t { X, Xinv, Y, Yinv, T, E };
using Word = std::vector<Letter>;

// checked 64-bit ops (throw std::overflow_error on wrap)
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

struct HeisElement {
  std::int64_t a = 0, b = 0, c = 0;
  friend bool operator==(const HeisElement&, const HeisElement&) = default;
};

HeisElement h_identity();
HeisElement h_mul(const HeisElement& g, const HeisElement& h);
HeisElement h_inverse(const HeisElement& g);
HeisElement flip(const HeisElement& g);  // (a,b,c) -> (b,a,ab-c)

struct VHElement {
  HeisElement h;
  int eps = 0;  // 0 or 1
  friend bool operator==(const VHElement&, const VHElement&) = default;
};

VHElement vh_identity();
VHElement vh_mul(const VHElement& g, const VHElement& h);
VHElement vh_inverse(const VHElement& g);
VHElement vh_generator(Letter l);  // image of a single letter

VHElement eval_word(const Word& w);  // left-to-right product

// parses words like "x^2 y^4 x^-2 t e" or the compact "x2 y-3 t t x"
Word parse_word(const std::string& text);
std::string word_to_string(const Word& w);

// 3x3 integer matrices, row-major
using Mat3 = std::array<std::int64_t, 9>;
Mat3 mat3_identity();
Mat3 mat3_mul(const Mat3& A, const Mat3& B);
Mat3 sl3_image_letter(Letter l);             // generator images
Mat3 sl3_image(const VHElement& g);          // via the normal form
bool sl3_check(const Word& w);               // both evaluation routes agree?

}  // namespace vhlab::heis
