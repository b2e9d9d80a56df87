#include "vhlab/theorem.hpp"

#include <stdexcept>

#include <json.hpp>

#include "vhlab/arith.hpp"
#include "vhlab/dioph.hpp"

namespace vhlab::theorem {

namespace {

mpz_class two_pow(int e) {
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return v;
}

mpz_class mod_reduce(const mpz_class& v, int bits) {
  mpz_class m;
  mpz_fdiv_r_2exp(m.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  return m;
}

}  // namespace

std::pair<mpz_class, bool> s_coefficient(int j, const mpz_class& r,
                                         const mpz_class& r1,
                                         const walk::RingSpec& ring) {
  if (j < 0) throw std::invalid_argument("s_coefficient: j must be >= 0");
  mpz_class num = r - r1 - two_pow(21) * 3 * (j / 2);
  switch (ring.kind) {
    case walk::RingSpec::Kind::Exact: {
      bool ok = mpz_divisible_2exp_p(num.get_mpz_t(), 22) != 0;
      mpz_class s;
      mpz_fdiv_q_2exp(s.get_mpz_t(), num.get_mpz_t(), 22);
      return {s, ok};
    }
    case walk::RingSpec::Kind::Mod2K: {
      if (ring.k < 23)
        throw std::invalid_argument(
            "s_coefficient: modular ring needs K >= 23 to see the parity of s");
      mpz_class res = mod_reduce(num, ring.k);
      bool ok = mpz_divisible_2exp_p(res.get_mpz_t(), 22) != 0;
      mpz_class s;
      mpz_fdiv_q_2exp(s.get_mpz_t(), res.get_mpz_t(), 22);  // s mod 2^{K-22}
      return {s, ok};
    }
    case walk::RingSpec::Kind::Real:
      break;
  }
  throw std::invalid_argument("s_coefficient: ring must be exact or mod 2^K");
}

std::vector<MiracleRow> miracle_rows_from_tables(const walk::ReducedTables& t,
                                                 int j_max) {
  if (j_max < 0) throw std::invalid_argument("miracle rows: j_max must be >= 0");
  std::size_t need = static_cast<std::size_t>(4 * j_max + 8);
  if (t.r.max_len() < need || t.r1.max_len() < need || t.r2.max_len() < need ||
      t.r3.max_len() < need)
    throw std::invalid_argument("miracle rows: tables shorter than 4*j_max+8");
  const walk::RingSpec& ring = t.r.ring;
  std::vector<MiracleRow> rows;
  for (int j = 0; j <= j_max; ++j) {
    MiracleRow row;
    row.j = j;
    row.length = 4 * j + 8;
    row.r = t.r.counts[row.length];
    row.r1 = t.r1.counts[row.length];
    row.r2 = t.r2.counts[row.length];
    row.r3 = t.r3.counts[row.length];

    auto [s, ok] = s_coefficient(j, row.r, row.r1, ring);
    row.s_value = s;
    row.divisibility_ok = ok;
    row.s_parity = mpz_tstbit(s.get_mpz_t(), 0);

    row.m_value = arith::max_square_divisor(mpz_class(2 * j + 1));
    mpz_class rhs = (row.m_value - 1) / 2;
    row.rhs_parity = mpz_tstbit(rhs.get_mpz_t(), 0);
    row.congruence_match = ok && (row.s_parity == row.rhs_parity);

    int r3_bits = ring.kind == walk::RingSpec::Kind::Exact
                      ? 24
                      : std::min(ring.k, 24);
    row.r3_divisible = mpz_divisible_2exp_p(row.r3.get_mpz_t(),
                                            static_cast<mp_bitcnt_t>(r3_bits)) != 0;

    int dioph_index = (row.length - 6) / 2;  // words of length 2l+6 carry S_l
    row.r2_formula_expanded =
        dioph::r2_formula(dioph_index, dioph::Reading::Expanded);
    row.r2_formula_representative =
        dioph::r2_formula(dioph_index, dioph::Reading::Representative);
    if (ring.kind == walk::RingSpec::Kind::Exact) {
      row.r2_matches_expanded = row.r2 == row.r2_formula_expanded;
      row.r2_matches_representative = row.r2 == row.r2_formula_representative;
    } else {
      row.r2_matches_expanded =
          mod_reduce(row.r2_formula_expanded, ring.k) == row.r2;
      row.r2_matches_representative =
          mod_reduce(row.r2_formula_representative, ring.k) == row.r2;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<MiracleRow> miracle_report(int j_max, const walk::RingSpec& ring,
                                       const walk::EngineOptions& opts) {
  if (j_max < 0) throw std::invalid_argument("miracle_report: j_max must be >= 0");
  walk::ReducedTables t = walk::count_reduced_split(4 * j_max + 8, ring, opts);
  return miracle_rows_from_tables(t, j_max);
}

std::string report_to_json(const std::vector<MiracleRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const MiracleRow& row : rows) {
    nlohmann::json j;
    j["j"] = row.j;
    j["length"] = row.length;
    j["r"] = row.r.get_str();
    j["r1"] = row.r1.get_str();
    j["r2"] = row.r2.get_str();
    j["r3"] = row.r3.get_str();
    j["divisibility_ok"] = row.divisibility_ok;
    j["s_value"] = row.s_value.get_str();
    j["s_parity"] = row.s_parity;
    j["m_value"] = row.m_value.get_str();
    j["rhs_parity"] = row.rhs_parity;
    j["congruence_match"] = row.congruence_match;
    j["r3_divisible"] = row.r3_divisible;
    j["r2_formula_expanded"] = row.r2_formula_expanded.get_str();
    j["r2_formula_representative"] = row.r2_formula_representative.get_str();
    j["r2_matches_expanded"] = row.r2_matches_expanded;
    j["r2_matches_representative"] = row.r2_matches_representative;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

}  // namespace vhlab::theorem
