#pragma once
// =============================================================================
// The staircase Diophantine system and the 6-t count formula.
//
//   S_n = { (a,b,c,d) in Z_{>0}^4 : a+b+c+d = n and ab = cd }.
//
// The dihedral group D8 = <sigma, tau> acts on S_n by sigma (a,b,c,d) =
// (a,b,d,c) and tau (a,b,c,d) = (c,d,a,b).  Orbits come in four kinds:
// the fixed point (n/4,n/4,n/4,n/4) when 4 | n; size-4 orbits of type
// (a,b,a,b) (a<b, only for even n, [(n-1)/4] of them); size-4 orbits of type
// (a,b,c,c) (a<b, ab = c^2); and free size-8 orbits.  Consequently
//   |S_n| = [4|n] + 4 [2|n] [(n-1)/4] + 4 A(n) + 8 B(n),
// where A(n) = #{(a,b,c) : a<b, ab=c^2, a+b+2c=n} -- computed three ways:
// brute force, the totient sum (1/2) sum_{z^2 | n, z >= 3} phi(z), and the
// closed form (m(n) - 1 - [4|n]) / 2 with m the square-part function.
//
// The 6-t count formula evaluates
//   r2(2l+6) = 8^6 ( sum_{S_l} 4 (2(a+c)+3)  +  sum_{k<l} 4*6*|S_k| )
// under two readings of the first sum: `expanded` runs over every member of
// S_l; `representative` runs over one lexicographically minimal member per
// orbit (the factor 4 standing for the orbit).  Both values are produced;
// which (if either) matches the walk engine's r2 is decided by the engine.
// =============================================================================
#include <array>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace vhlab::dioph {

struct SolutionQuad {
  std::int64_t a = 0, b = 0, c = 0, d = 0;
  friend auto operator<=>(const SolutionQuad&, const SolutionQuad&) = default;
};

// all ordered solutions, sorted lexicographically
std::vector<SolutionQuad> enumerate_Sn(std::int64_t n, bool brute = false);

enum class OrbitKind { Fixed, ABAB, ABCC, Free };

struct Orbit {
  SolutionQuad rep;  // lexicographically smallest member
  OrbitKind kind = OrbitKind::Free;
  int size = 0;
};

struct OrbitStats {
  std::vector<Orbit> orbits;
  std::int64_t fixed = 0, abab = 0, abcc = 0, free_orbits = 0;  // orbit counts
  std::int64_t total_elements = 0;
};

OrbitStats orbit_decompose(std::int64_t n);

// the eight permutations of <sigma, tau> acting on quadruples
const std::vector<std::array<int, 4>>& d8_permutations();

enum class AbccMethod { Brute, Totient, ClosedForm };
std::int64_t count_abcc(std::int64_t n, AbccMethod method);

enum class Reading { Expanded, Representative };
// r2(2l+6) prediction; exact integer
mpz_class r2_formula(std::int64_t ell, Reading reading);

}  // namespace vhlab::dioph
