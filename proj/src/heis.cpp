#include "vhlab/heis.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace vhlab::heis {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 add overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("int64 sub overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 mul overflow");
  return r;
}

HeisElement h_identity() { return {}; }

HeisElement h_mul(const HeisElement& g, const HeisElement& h) {
  return {checked_add(g.a, h.a), checked_add(g.b, h.b),
          checked_add(checked_add(g.c, h.c), checked_mul(g.a, h.b))};
}

HeisElement h_inverse(const HeisElement& g) {
  // (a,b,c)^-1 = (-a,-b, ab-c)
  return {checked_sub(0, g.a), checked_sub(0, g.b),
          checked_sub(checked_mul(g.a, g.b), g.c)};
}

HeisElement flip(const HeisElement& g) {
  return {g.b, g.a, checked_sub(checked_mul(g.a, g.b), g.c)};
}

VHElement vh_identity() { return {}; }

VHElement vh_mul(const VHElement& g, const VHElement& h) {
  HeisElement rhs = g.eps ? flip(h.h) : h.h;
  return {h_mul(g.h, rhs), g.eps ^ h.eps};
}

VHElement vh_inverse(const VHElement& g) {
  HeisElement inv = h_inverse(g.h);
  return {g.eps ? flip(inv) : inv, g.eps};
}

VHElement vh_generator(Letter l) {
  switch (l) {
    case Letter::X:    return {{1, 0, 0}, 0};
    case Letter::Xinv: return {{-1, 0, 0}, 0};
    case Letter::Y:    return {{0, 1, 0}, 0};
    case Letter::Yinv: return {{0, -1, 0}, 0};
    case Letter::T:    return {{0, 0, 0}, 1};
    case Letter::E:    return {{0, 0, 0}, 0};
  }
  throw std::logic_error("vh_generator: bad letter");
}

VHElement eval_word(const Word& w) {
  VHElement acc = vh_identity();
  for (Letter l : w) acc = vh_mul(acc, vh_generator(l));
  return acc;
}

Word parse_word(const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    std::size_t i = 0;
    char base = static_cast<char>(std::tolower(tok[i]));
    if (base != 'x' && base != 'y' && base != 't' && base != 'e')
      throw std::invalid_argument("parse_word: unknown letter in '" + tok + "'");
    ++i;
    long exp = 1;
    if (i < tok.size()) {
      if (tok[i] == '^') ++i;
      if (i >= tok.size()) throw std::invalid_argument("parse_word: bad token '" + tok + "'");
      exp = std::stol(tok.substr(i));
    }
    if ((base == 't' || base == 'e') && exp < 0)
      throw std::invalid_argument("parse_word: negative power of involution/identity");
    Letter pos = base == 'x' ? Letter::X : base == 'y' ? Letter::Y
                : base == 't' ? Letter::T : Letter::E;
    Letter neg = base == 'x' ? Letter::Xinv : Letter::Yinv;
    for (long k = 0; k < (exp < 0 ? -exp : exp); ++k)
      w.push_back(exp < 0 ? neg : pos);
  }
  return w;
}

std::string word_to_string(const Word& w) {
  static const char* names[] = {"x", "x^-1", "y", "y^-1", "t", "e"};
  std::string s;
  for (Letter l : w) {
    if (!s.empty()) s += ' ';
    s += names[static_cast<int>(l)];
  }
  return s;
}

Mat3 mat3_identity() { return {1, 0, 0, 0, 1, 0, 0, 0, 1}; }

Mat3 mat3_mul(const Mat3& A, const Mat3& B) {
  Mat3 C{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::int64_t s = 0;
      for (int k = 0; k < 3; ++k)
        s = checked_add(s, checked_mul(A[3 * i + k], B[3 * k + j]));
      C[3 * i + j] = s;
    }
  return C;
}

Mat3 sl3_image_letter(Letter l) {
  static const Mat3 X{1, 1, 0, 0, 1, 1, 0, 0, 1};
  static const Mat3 Xinv{1, -1, 1, 0, 1, -1, 0, 0, 1};
  static const Mat3 Y{1, 1, 0, 0, 1, -1, 0, 0, 1};
  static const Mat3 Yinv{1, -1, -1, 0, 1, 1, 0, 0, 1};
  static const Mat3 T{-1, 0, 0, 0, -1, 0, 0, 0, 1};
  switch (l) {
    case Letter::X:    return X;
    case Letter::Xinv: return Xinv;
    case Letter::Y:    return Y;
    case Letter::Yinv: return Yinv;
    case Letter::T:    return T;
    case Letter::E:    return mat3_identity();
  }
  throw std::logic_error("sl3_image_letter: bad letter");
}

namespace {
Mat3 mat3_repeat(const Mat3& base, std::int64_t n) {
  Mat3 acc = mat3_identity();
  for (std::int64_t i = 0; i < n; ++i) acc = mat3_mul(acc, base);
  return acc;
}
}  // namespace

Mat3 sl3_image(const VHElement& g) {
  // normal form x^a y^b [x,y]^(c-ab) t^eps; [x,y] -> [[1,0,-2],[0,1,0],[0,0,1]]
  Mat3 M = mat3_identity();
  const Mat3 x = sl3_image_letter(Letter::X), xi = sl3_image_letter(Letter::Xinv);
  const Mat3 y = sl3_image_letter(Letter::Y), yi = sl3_image_letter(Letter::Yinv);
  M = mat3_mul(M, mat3_repeat(g.h.a >= 0 ? x : xi, g.h.a >= 0 ? g.h.a : -g.h.a));
  M = mat3_mul(M, mat3_repeat(g.h.b >= 0 ? y : yi, g.h.b >= 0 ? g.h.b : -g.h.b));
  std::int64_t zexp = checked_sub(g.h.c, checked_mul(g.h.a, g.h.b));
  Mat3 Z = mat3_identity();
  Z[2] = checked_mul(-2, zexp);  // [x,y]^k = [[1,0,-2k],[0,1,0],[0,0,1]]
  M = mat3_mul(M, Z);
  if (g.eps) M = mat3_mul(M, sl3_image_letter(Letter::T));
  return M;
}

bool sl3_check(const Word& w) {
  Mat3 direct = mat3_identity();
  for (Letter l : w) direct = mat3_mul(direct, sl3_image_letter(l));
  return direct == sl3_image(eval_word(w));
}

}  // namespace vhlab::heis
