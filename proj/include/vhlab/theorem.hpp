#pragma once
// =============================================================================
// The headline congruence, row by row.
//
// For j >= 0 and l = 4j+8 the reduced split gives r(l) = r1(l) + r2(l) + r3(l)
// with 2^24 | r3(l).  The claimed congruence chain:
//   r(l) - r1(l) - 2^21 * 3 * [j/2]  is divisible by 2^22, and
//   s_j := (r(l) - r1(l) - 2^21 * 3 * [j/2]) / 2^22  satisfies
//   s_j = (m(2j+1) - 1) / 2   (mod 2),
// tying the walk counts to the square-part function m.  A mod-2^K lane with
// K >= 23 determines s_j mod 2^{K-22}, in particular its parity; the default
// K = 24 also witnesses the r3 divisibility.
//
// Each row also records the two readings of the 6-t count formula next to the
// engine's r2(l); the engine is the authority, the formula the conjecture.
// Rows are reported, not asserted: a mismatch is a finding, not an error.
// =============================================================================
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "vhlab/walk.hpp"

namespace vhlab::theorem {

struct MiracleRow {
  int j = 0;
  int length = 0;          // 4j+8
  mpz_class r, r1, r2, r3; // exact values or mod-2^K residues
  bool divisibility_ok = false;  // 2^22 | r - r1 - 2^21*3*[j/2]
  mpz_class s_value;       // s_j (exact lane) or s_j mod 2^{K-22}
  int s_parity = 0;
  mpz_class m_value;       // m(2j+1)
  int rhs_parity = 0;      // ((m(2j+1)-1)/2) mod 2
  bool congruence_match = false;
  bool r3_divisible = false;  // 2^min(K,24) | r3
  mpz_class r2_formula_expanded, r2_formula_representative;
  bool r2_matches_expanded = false, r2_matches_representative = false;
};

// s_j from r(l), r1(l) given exactly or as residues mod 2^K (K >= 23);
// .second = divisibility by 2^22 held
std::pair<mpz_class, bool> s_coefficient(int j, const mpz_class& r,
                                         const mpz_class& r1,
                                         const walk::RingSpec& ring);

// runs the walk engine to length 4*j_max+8 and assembles all rows
std::vector<MiracleRow> miracle_report(int j_max, const walk::RingSpec& ring,
                                       const walk::EngineOptions& opts = {});

// rows from precomputed reduced tables (exercised by tests; deterministic)
std::vector<MiracleRow> miracle_rows_from_tables(const walk::ReducedTables& t,
                                                 int j_max);

std::string report_to_json(const std::vector<MiracleRow>& rows);

}  // namespace vhlab::theorem
