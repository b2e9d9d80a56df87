// =============================================================================
// Acceptance gate: twelve checks, one verdict line each.
//
//   [PASS] / [FAIL]  -- gating checks; any FAIL makes the exit status nonzero
//   [REPORT]         -- always-run probes whose findings are recorded, not
//                       asserted; only their explicitly gated sub-parts count
//
// Indented lines are supporting detail.  Every number printed here is
// computed in-process during the run; nothing is read from fixtures.
// =============================================================================
#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "vhlab/arith.hpp"
#include "vhlab/dioph.hpp"
#include "vhlab/heis.hpp"
#include "vhlab/path.hpp"
#include "vhlab/series.hpp"
#include "vhlab/subword.hpp"
#include "vhlab/theorem.hpp"
#include "vhlab/walk.hpp"

using namespace vhlab;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

class Criterion {
 public:
  Criterion(const char* id, bool gating, std::string label)
      : id_(id), gating_(gating), label_(std::move(label)), start_(Clock::now()) {}

  void fail(const std::string& why) {
    ok_ = false;
    if (!why.empty()) detail(why);
  }
  void require(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
  void detail(const std::string& line) { details_.push_back(line); }
  void note(const std::string& s) { note_ = s; }

  void finish() {
    double secs = std::chrono::duration<double>(Clock::now() - start_).count();
    const char* tag = gating_ ? (ok_ ? "[PASS]" : "[FAIL]") : "[REPORT]";
    std::printf("%s %s %s%s%s  (%.2fs)\n", tag, id_, label_.c_str(),
                note_.empty() ? "" : ": ", note_.c_str(), secs);
    for (const auto& d : details_) std::printf("         %s\n", d.c_str());
    if (gating_ && !ok_) ++g_failures;
    std::fflush(stdout);
  }

  bool ok() const { return ok_; }

 private:
  const char* id_;
  bool gating_;
  std::string label_;
  std::string note_;
  std::vector<std::string> details_;
  bool ok_ = true;
  Clock::time_point start_;
};

template <class Fn>
void run(Criterion& c, Fn&& fn) {
  try {
    fn(c);
  } catch (const std::exception& e) {
    c.fail(std::string("unexpected exception: ") + e.what());
  }
  c.finish();
}

std::string zstr(const mpz_class& z) { return z.get_str(); }

// ---------------------------------------------------------------- criteria --

void c01_figure(Criterion& c) {
  heis::Word w =
      heis::parse_word("x^2 y^4 x^4 y^-2 x^-2 y^6 x^-2 y^-3 x^6 y^4");
  heis::VHElement g = heis::eval_word(w);
  c.require(g.h.a == 8 && g.h.b == 9 && g.h.c == 46 && g.eps == 0,
            "word evaluates to (" + std::to_string(g.h.a) + "," +
                std::to_string(g.h.b) + "," + std::to_string(g.h.c) +
                "), expected (8,9,46)");
  path::LatticePath p = path::word_to_path(w);
  c.require(p.endpoint() == std::pair<std::int64_t, std::int64_t>{8, 9},
            "path endpoint is not (8,9)");
  std::int64_t area = path::algebraic_area(p);
  c.require(area == 46, "area " + std::to_string(area) + ", expected 46");
  path::WindingGrid grid = path::winding_grid(p);
  c.require(grid.sum() == 46, "winding sum != 46");
  std::map<std::int64_t, int> census;
  for (const auto& row : grid.rows)
    for (std::int64_t v : row)
      if (v) ++census[v];
  c.require(census[1] == 38 && census[2] == 6 && census[-1] == 4 &&
                census.size() == 3,
            "winding census differs from {+1:38, +2:6, -1:4}");
  c.require(heis::sl3_check(w), "matrix evaluation route disagrees");
  c.note("(8,9,46); area 46 = winding sum; census {+1:38,+2:6,-1:4}");
}

void c02_brute(Criterion& c) {
  walk::BruteTables bt =
      walk::brute_force_closed(walk::GeneratorSet::vh_default(), 10);
  walk::CountTable dp = walk::count_closed(walk::GeneratorSet::vh_default(), 10,
                                           walk::RingSpec::exact());
  walk::ReducedTables rt =
      walk::count_reduced_split(10, walk::RingSpec::exact());
  for (std::size_t l = 0; l <= 10; ++l) {
    c.require(dp.counts[l] == bt.c.counts[l],
              "closed counts disagree at length " + std::to_string(l));
    c.require(rt.r.counts[l] == bt.r.counts[l] &&
                  rt.r1.counts[l] == bt.r1.counts[l] &&
                  rt.r2.counts[l] == bt.r2.counts[l] &&
                  rt.r3.counts[l] == bt.r3.counts[l],
              "reduced tables disagree at length " + std::to_string(l));
  }
  c.require(dp.counts[2] == 66 && dp.counts[4] == 4614,
            "closed counts at lengths 2/4 are off");
  c.require(rt.r.counts[2] == 64 && rt.r.counts[4] == 4224,
            "reduced counts at lengths 2/4 are off");
  c.require(rt.r3.counts[8] == mpz_class(1) << 24, "r3(8) != 2^24");

  walk::BruteTables h3 = walk::brute_force_closed(walk::GeneratorSet::h3_lazy(), 8);
  walk::CountTable h3dp = walk::count_closed(walk::GeneratorSet::h3_lazy(), 8,
                                             walk::RingSpec::exact());
  for (std::size_t l = 0; l <= 8; ++l)
    c.require(h3dp.counts[l] == h3.c.counts[l],
              "lazy-walk counts disagree at length " + std::to_string(l));
  c.note("exhaustive enumeration = engine, all five tables, lengths <= 10");
}

void c03_modular(Criterion& c) {
  walk::ReducedTables ex = walk::count_reduced_split(20, walk::RingSpec::exact());
  mpz_class mask = (mpz_class(1) << 24) - 1;
  std::vector<walk::ReducedTables> lanes;
  for (int threads : {1, 4, 8}) {
    walk::EngineOptions o;
    o.threads = threads;
    lanes.push_back(walk::count_reduced_split(20, walk::RingSpec::mod2k(24), o));
  }
  for (std::size_t l = 0; l <= 20; ++l) {
    auto residues_equal = [&](const walk::ReducedTables& a,
                              const walk::ReducedTables& b) {
      return a.r.counts[l] == b.r.counts[l] &&
             a.r1.counts[l] == b.r1.counts[l] &&
             a.r2.counts[l] == b.r2.counts[l] &&
             a.r3.counts[l] == b.r3.counts[l];
    };
    c.require(residues_equal(lanes[0], lanes[1]) &&
                  residues_equal(lanes[0], lanes[2]),
              "worker counts disagree at length " + std::to_string(l));
    c.require(lanes[0].r.counts[l] == (ex.r.counts[l] & mask) &&
                  lanes[0].r1.counts[l] == (ex.r1.counts[l] & mask) &&
                  lanes[0].r2.counts[l] == (ex.r2.counts[l] & mask) &&
                  lanes[0].r3.counts[l] == (ex.r3.counts[l] & mask),
              "mod 2^24 lane is not the exact reduction at length " +
                  std::to_string(l));
  }
  c.note("lengths <= 20, workers 1/4/8 bit-identical, residues = exact mod 2^24");
}

void c04_staircase(Criterion& c) {
  c.require(dioph::enumerate_Sn(4).size() == 1 &&
                dioph::enumerate_Sn(6).size() == 4 &&
                dioph::enumerate_Sn(8).size() == 5 &&
                dioph::enumerate_Sn(9).size() == 4,
            "small solution-set sizes are off");
  for (int n = 1; n <= 150; ++n)
    if (dioph::enumerate_Sn(n) != dioph::enumerate_Sn(n, true)) {
      c.fail("fast enumeration != brute force at n=" + std::to_string(n));
      break;
    }
  for (int n = 1; n <= 10000; ++n)
    if (dioph::count_abcc(n, dioph::AbccMethod::Brute) !=
        dioph::count_abcc(n, dioph::AbccMethod::Totient)) {
      c.fail("abcc brute != totient at n=" + std::to_string(n));
      break;
    }
  for (int n = 1; n <= 100000; ++n)
    if (dioph::count_abcc(n, dioph::AbccMethod::Totient) !=
        dioph::count_abcc(n, dioph::AbccMethod::ClosedForm)) {
      c.fail("abcc totient != closed form at n=" + std::to_string(n));
      break;
    }
  const auto& perms = dioph::d8_permutations();
  for (int n = 1; n <= 2000; ++n) {
    dioph::OrbitStats st = dioph::orbit_decompose(n);
    auto all = dioph::enumerate_Sn(n);
    std::set<dioph::SolutionQuad> covered;
    std::int64_t size_sum = 0;
    for (const auto& orb : st.orbits) {
      size_sum += orb.size;
      std::int64_t v[4] = {orb.rep.a, orb.rep.b, orb.rep.c, orb.rep.d};
      for (const auto& p : perms)
        covered.insert(dioph::SolutionQuad{v[p[0]], v[p[1]], v[p[2]], v[p[3]]});
    }
    c.require(size_sum == static_cast<std::int64_t>(all.size()) &&
                  covered == std::set<dioph::SolutionQuad>(all.begin(), all.end()),
              "orbits fail to partition the solutions at n=" + std::to_string(n));
    std::int64_t mod8 = ((n % 4 == 0 ? 1 : 0) +
                         4 * (n % 2 == 0 ? (n - 1) / 4 : 0) +
                         4 * dioph::count_abcc(n, dioph::AbccMethod::ClosedForm)) %
                        8;
    c.require(static_cast<std::int64_t>(all.size()) % 8 == mod8,
              "mod-8 residual identity fails at n=" + std::to_string(n));
    if (!c.ok()) break;
  }
  c.note("counts to 1e5, orbits + mod-8 identity to 2000");
}

void c05_arith(Criterion& c) {
  c.require(!arith::gauss_identity_counterexample(100000).has_value(),
            "totient divisor-sum identity failed below 1e5");
  std::mt19937_64 rng(424242);
  int done = 0;
  while (done < 10000) {
    std::uint64_t a = rng() % 1000000 + 1, b = rng() % 1000000 + 1;
    if (std::gcd(a, b) != 1) continue;
    if (arith::f_sign_u64(a * b) != arith::f_sign_u64(a) * arith::f_sign_u64(b)) {
      c.fail("multiplicativity fails at " + std::to_string(a) + "," +
             std::to_string(b));
      break;
    }
    ++done;
  }
  std::vector<std::uint32_t> sieved;
  arith::m_sieve_range(1, 100001, sieved);
  for (std::uint64_t n = 1; n <= 100000; ++n) {
    std::uint64_t best = 1;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % (d * d) == 0) best = d;
    if (sieved[n - 1] != best || arith::max_square_divisor_u64(n) != best) {
      c.fail("square part wrong at n=" + std::to_string(n));
      break;
    }
  }
  c.note("totient identity to 1e5; 1e4 coprime pairs; m(n) vs direct to 1e5");
}

void c06_complexity(Criterion& c) {
  std::vector<std::int8_t> constant(64, 1), alternating;
  for (int i = 0; i < 64; ++i) alternating.push_back(i % 2 ? -1 : 1);
  auto pc = subword::complexity_profile(constant, 6);
  auto pa = subword::complexity_profile(alternating, 6);
  for (int n = 1; n <= 6; ++n) {
    c.require(pc[n] == 1, "constant sequence complexity != 1");
    c.require(pa[n] == 2, "alternating sequence complexity != 2");
  }
  for (const char* which : {"f", "catalan", "odd"}) {
    std::vector<std::int8_t> seq =
        which[0] == 'f' ? subword::f_sequence(4096)
        : which[0] == 'c' ? subword::catalan_mod2_sequence(4096)
                          : subword::odd_residue_sequence(4096);
    auto p = subword::complexity_profile(seq, 8);
    for (int n = 0; n < 8; ++n)
      c.require(p[n] <= p[n + 1] && p[n + 1] <= 2 * p[n],
                std::string("growth bounds fail for ") + which + " at n=" +
                    std::to_string(n));
  }
  std::mt19937_64 rng(987654321);
  int via_crt = 0;
  for (int i = 0; i < 100; ++i) {
    std::vector<std::int8_t> block(6);
    for (auto& v : block) v = (rng() & 1) ? 1 : -1;
    subword::WitnessCertificate cert = subword::crt_witness(block);
    if (!cert.trace.via_scan) ++via_crt;
    if (!subword::verify_certificate(cert)) {
      c.fail("witness for block " +
             std::to_string(subword::encode_block(block)) +
             " failed verification");
      break;
    }
  }
  c.note("profiles bounded; 100 random 6-blocks certified (" +
         std::to_string(via_crt) + " needed the congruence construction)");
}

void c07_series(Criterion& c) {
  std::vector<mpz_class> cat{1};
  for (int n = 1; n < 30; ++n) {
    mpz_class v;
    mpz_bin_uiui(v.get_mpz_t(), 2 * n, n);
    cat.push_back(v / (n + 1));
  }
  series::Recurrence known;
  known.p = {series::Poly{{1, 1}}, series::Poly{{2, -4}}};
  c.require(!series::check_recurrence(known, cat).has_value(),
            "classical first-order recurrence fails on 30 terms");

  auto g = series::guess_recurrence(cat, 2, 2);
  c.require(g.has_value() && g->p == known.p,
            "guess does not recover the first-order recurrence");

  std::vector<mpz_class> fib{0, 1};
  for (int i = 2; i < 30; ++i) fib.push_back(fib[i - 1] + fib[i - 2]);
  auto gf = series::guess_recurrence(fib, 3, 2);
  c.require(gf.has_value() &&
                gf->p == std::vector<series::Poly>{series::Poly{{1}},
                                                   series::Poly{{-1}},
                                                   series::Poly{{-1}}},
            "guess does not recover the Fibonacci recurrence");

  std::vector<mpz_class> cat40 = cat;
  for (int n = 30; n < 40; ++n) {
    mpz_class v;
    mpz_bin_uiui(v.get_mpz_t(), 2 * n, n);
    cat40.push_back(v / (n + 1));
  }
  auto ge = series::guess_recurrence(cat40, 2, 2, /*even_shifts_only=*/true);
  c.require(ge.has_value(), "no even-shift recurrence found");
  if (ge) {
    std::vector<mpz_class> evens, odds;
    for (int i = 0; 2 * i < 40; ++i) evens.push_back(cat40[2 * i]);
    for (int i = 0; 2 * i + 1 < 40; ++i) odds.push_back(cat40[2 * i + 1]);
    c.require(!series::check_recurrence(series::extract_even(*ge), evens)
                   .has_value(),
              "transformed recurrence fails on the even-index subsequence");
    c.require(!series::check_recurrence(series::extract_even(*ge, true), odds)
                   .has_value(),
              "transformed recurrence fails on the odd-index subsequence");
  }

  series::TruncatedSeries C = series::TruncatedSeries::from_ints(
      std::vector<mpz_class>(cat.begin(), cat.begin() + 21));
  series::TruncatedSeries one, z;
  one.coeff.assign(21, mpq_class(0));
  one.coeff[0] = 1;
  z.coeff.assign(21, mpq_class(0));
  z.coeff[1] = 1;
  c.require(C == series::ts_add(one, series::ts_mul(z, series::ts_mul(C, C))),
            "generating function fails C = 1 + z C^2 through order 20");
  c.note("guess/check/transform verified; C = 1 + z C^2 to order 20");
}

void c08_rows(Criterion& c) {
  // gate: the first two rows must satisfy every claimed property; the rest of
  // the table is recorded as findings either way
  walk::ReducedTables ex = walk::count_reduced_split(28, walk::RingSpec::exact());
  auto rows = theorem::miracle_rows_from_tables(ex, 5);

  walk::ReducedTables md =
      walk::count_reduced_split(28, walk::RingSpec::mod2k(24));
  auto mrows = theorem::miracle_rows_from_tables(md, 5);

  bool lanes_agree = true;
  for (std::size_t i = 0; i < rows.size(); ++i)
    lanes_agree = lanes_agree &&
                  mrows[i].divisibility_ok == rows[i].divisibility_ok &&
                  mrows[i].s_parity == rows[i].s_parity &&
                  mrows[i].congruence_match == rows[i].congruence_match &&
                  mrows[i].r3_divisible == rows[i].r3_divisible &&
                  mrows[i].r2_matches_expanded == rows[i].r2_matches_expanded;

  bool gate = lanes_agree;
  for (int j = 0; j <= 1; ++j)
    gate = gate && rows[j].congruence_match && rows[j].divisibility_ok &&
           rows[j].r3_divisible && rows[j].r2_matches_expanded;
  if (!gate) {
    c.fail("");
    ++g_failures;  // gated sub-part of a reported criterion
  }

  std::vector<int> match_js, miss_js;
  bool expanded_all = true, representative_all = true;
  for (const auto& row : rows) {
    (row.congruence_match ? match_js : miss_js).push_back(row.j);
    expanded_all = expanded_all && row.r2_matches_expanded;
    representative_all = representative_all && row.r2_matches_representative;
    std::ostringstream d;
    d << "j=" << row.j << " len=" << row.length << ": s=" << zstr(row.s_value)
      << " (parity " << row.s_parity << "), m(" << 2 * row.j + 1
      << ")=" << zstr(row.m_value) << " -> rhs parity " << row.rhs_parity
      << "; congruence " << (row.congruence_match ? "HOLDS" : "FAILS")
      << "; 2^22 divisibility " << (row.divisibility_ok ? "ok" : "BROKEN")
      << "; 2^24 | r3 " << (row.r3_divisible ? "ok" : "BROKEN");
    c.detail(d.str());
    std::ostringstream d2;
    d2 << "      r2=" << zstr(row.r2) << " vs readings "
       << zstr(row.r2_formula_expanded) << " (member sum, "
       << (row.r2_matches_expanded ? "match" : "MISMATCH") << ") / "
       << zstr(row.r2_formula_representative) << " (orbit reps, "
       << (row.r2_matches_representative ? "match" : "MISMATCH") << ")";
    c.detail(d2.str());
  }
  std::ostringstream note;
  note << "gate j<=1 " << (gate ? "ok" : "FAILED") << "; congruence holds at j={";
  for (std::size_t i = 0; i < match_js.size(); ++i)
    note << (i ? "," : "") << match_js[i];
  note << "}, fails at j={";
  for (std::size_t i = 0; i < miss_js.size(); ++i)
    note << (i ? "," : "") << miss_js[i];
  note << "}; member-sum reading " << (expanded_all ? "matches" : "MISSES")
       << " every row, orbit-rep reading "
       << (representative_all ? "matches every row" : "refuted");
  c.note(note.str());
}

void c09_cogrowth(Criterion& c) {
  walk::CountTable gamma = walk::count_closed(walk::GeneratorSet::vh_default(),
                                              12, walk::RingSpec::exact());
  walk::ReducedTables red = walk::count_reduced_split(12, walk::RingSpec::exact());
  series::CogrowthReport at2 =
      series::cogrowth_check(red.r.counts, gamma.counts, 2);
  // the order-2 agreement is a hard gate even though the full comparison is
  // reported: both sides must equal 65 there (64 + 1 and 66 - 1)
  bool gate = at2.pass && red.r.counts[2] == 64 && gamma.counts[2] == 66;
  if (!gate) {
    c.fail("order-2 values are off");
    ++g_failures;
  }

  series::CogrowthReport full =
      series::cogrowth_check(red.r.counts, gamma.counts, 12);
  std::ostringstream note;
  note << "order-2 gate " << (gate ? "ok (both sides 65)" : "FAILED")
       << "; full comparison: ";
  if (full.pass) {
    note << "holds through order 12";
  } else {
    note << "first mismatch at order " << full.first_mismatch << " ("
         << full.lhs.get_str() << " vs " << full.rhs.get_str() << ")";
  }
  c.note(note.str());
}

void c10_density(Criterion& c) {
  arith::DensityResult d = arith::density_scan(10000000);
  double err = d.density - 0.65342;
  c.require(err < 0.002 && err > -0.002,
            "density " + std::to_string(d.density) + " misses 0.65342 by >= 0.002");
  std::ostringstream note;
  note.precision(7);
  note << std::fixed << "density(1e7) = " << d.density << " ("
       << d.matched << "/" << d.total << "); limit constant "
       << arith::density_constant();
  c.note(note.str());
}

void c11_ratio(Criterion& c) {
  double ratio = walk::h3_lazy_ratio(40);
  double target = 25.0 / 16.0;
  c.require(ratio > 0.75 * target && ratio < 1.25 * target,
            "ratio " + std::to_string(ratio) + " not within 25% of 25/16");
  std::ostringstream note;
  note.precision(6);
  note << std::fixed << "l=40: l^2 p_l = " << ratio << ", limit 25/16 = "
       << target << " (off by " << (ratio / target - 1) * 100 << "%)";
  c.note(note.str());
}

void c12_saturation(Criterion& c) {
  const std::uint64_t X = 10000000;
  std::uint64_t closed = 0, missing_total = 0, out_of_domain = 0;
  bool trouble = false;
  std::ostringstream per_n;
  for (int n = 1; n <= 8; ++n) {
    subword::SaturationResult s = subword::saturation_scan(n, X);
    per_n << (n > 1 ? ", " : "") << "n=" << n << ": " << s.present << "/"
          << (1u << n);
    missing_total += s.missing.size();
    for (std::uint32_t code : s.missing) {
      subword::WitnessOptions opts;
      opts.force_crt = true;  // known absent from the scanned window
      // The all-minus block fails at every position, so its congruence
      // needs one fresh prime cube per position; at length 8 that modulus
      // (~3e41) exceeds the exact-factorization range.  That is the one
      // acceptable non-closure.
      bool all_minus = code == (1u << n) - 1;
      try {
        subword::WitnessCertificate cert =
            subword::crt_witness(subword::decode_block(code, n), opts);
        if (subword::verify_certificate(cert)) {
          ++closed;
        } else {
          trouble = true;
          c.detail("witness for block code " + std::to_string(code) +
                   " (n=" + std::to_string(n) + ") failed verification");
        }
      } catch (const std::invalid_argument& e) {
        ++out_of_domain;
        c.detail("block code " + std::to_string(code) +
                 " (n=" + std::to_string(n) + ") " +
                 (all_minus ? "(all-minus) " : "") +
                 "needs integers beyond the 2^128 factorization range: " +
                 e.what());
        if (!all_minus) trouble = true;
      } catch (const subword::BudgetExceeded& e) {
        trouble = true;
        c.detail("block code " + std::to_string(code) +
                 " (n=" + std::to_string(n) + ") exhausted its candidate "
                 "budget: " + std::string(e.what()));
      }
    }
  }
  c.detail("blocks seen in f(1..1e7): " + per_n.str());
  if (trouble) {
    c.fail("");
    ++g_failures;  // a lying or missing certificate is a hard failure even here
  }
  std::ostringstream note;
  note << missing_total << " blocks of length <= 8 absent from the window; "
       << closed << " closed by verified congruence witnesses";
  if (out_of_domain > 0)
    note << "; " << out_of_domain
         << " (the all-minus length-8 block) out of factorization range";
  if (trouble) note << "; UNEXPLAINED non-closures present";
  c.note(note.str());
}

}  // namespace

int main() {
  std::printf("acceptance: twelve checks, exit status = number of gate failures\n");
  {
    Criterion c("C01", true, "figure word: endpoint, area, winding census");
    run(c, c01_figure);
  }
  {
    Criterion c("C02", true, "exhaustive enumeration vs engine, lengths <= 10");
    run(c, c02_brute);
  }
  {
    Criterion c("C03", true, "modular lane = exact lane, schedule-independent");
    run(c, c03_modular);
  }
  {
    Criterion c("C04", true, "staircase system: counts, orbits, residuals");
    run(c, c04_staircase);
  }
  {
    Criterion c("C05", true, "square-part arithmetic cross-checks");
    run(c, c05_arith);
  }
  {
    Criterion c("C06", true, "subword complexity and block witnesses");
    run(c, c06_complexity);
  }
  {
    Criterion c("C07", true, "recurrence toolkit round trip");
    run(c, c07_series);
  }
  {
    Criterion c("C08", false, "congruence table, lengths 8..28");
    run(c, c08_rows);
  }
  {
    Criterion c("C09", false, "cogrowth identity comparison to order 12");
    run(c, c09_cogrowth);
  }
  {
    Criterion c("C10", true, "sign density at 1e7 within 0.002 of the constant");
    run(c, c10_density);
  }
  {
    Criterion c("C11", true, "lazy-walk return ratio within 25% of 25/16");
    run(c, c11_ratio);
  }
  {
    Criterion c("C12", false, "block saturation of the sign sequence");
    run(c, c12_saturation);
  }
  std::printf("acceptance: %d gate failure(s)\n", g_failures);
  return g_failures > 0 ? 1 : 0;
}
