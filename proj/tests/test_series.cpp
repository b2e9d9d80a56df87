#include <doctest.h>

#include <stdexcept>

#include <vector>

#include "vhlab/series.hpp"

using namespace vhlab::series;

namespace {

std::vector<mpz_class> catalan(int count) {
  std::vector<mpz_class> c{1};
  for (int n = 1; n < count; ++n) {
    mpz_class v;
    mpz_bin_uiui(v.get_mpz_t(), 2 * n, n);
    c.push_back(v / (n + 1));
  }
  return c;
}

TruncatedSeries constant_one(int order) {
  TruncatedSeries s;
  s.coeff.assign(order, mpq_class(0));
  s.coeff[0] = 1;
  return s;
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("series arithmetic: reciprocal, product, composition") {
  // 1/(1-z) is the all-ones series
  TruncatedSeries one_minus_z = constant_one(12);
  one_minus_z.coeff[1] = -1;
  TruncatedSeries geo = ts_reciprocal(one_minus_z, 12);
  for (const auto& q : geo.coeff) CHECK(q == 1);
  CHECK(ts_mul(one_minus_z, geo) == constant_one(12));

  // 1/(1-u) composed with u = z/(1+z) collapses to 1 + z
  TruncatedSeries one_plus_z = constant_one(12);
  one_plus_z.coeff[1] = 1;
  TruncatedSeries z;
  z.coeff.assign(12, mpq_class(0));
  z.coeff[1] = 1;
  TruncatedSeries inner = ts_mul(z, ts_reciprocal(one_plus_z, 12));
  TruncatedSeries expect = one_plus_z;
  CHECK(ts_compose(geo, inner) == expect);

  // binary ops truncate to the shorter operand
  TruncatedSeries shorty;
  shorty.coeff.assign(3, mpq_class(1));
  CHECK(ts_add(geo, shorty).order() == 3);
  CHECK(ts_mul(geo, shorty).order() == 3);

  // preconditions
  CHECK_THROWS_AS(ts_reciprocal(z, 5), std::invalid_argument);   // zero constant
  CHECK_THROWS_AS(ts_compose(geo, one_plus_z), std::invalid_argument);
}

TEST_CASE("even and odd parts dissect and reassemble") {
  TruncatedSeries s;
  for (int i = 0; i < 10; ++i) s.coeff.push_back(mpq_class(i * i + 1));
  TruncatedSeries e = even_part(s), o = odd_part(s);
  REQUIRE(e.order() == 5);
  REQUIRE(o.order() == 5);
  for (int i = 0; i < 5; ++i) {
    CHECK(e.coeff[i] == s.coeff[2 * i]);
    CHECK(o.coeff[i] == s.coeff[2 * i + 1]);
  }
}

TEST_CASE("Catalan numbers satisfy C = 1 + z C^2") {
  auto cat = catalan(21);
  TruncatedSeries C = TruncatedSeries::from_ints(cat);
  TruncatedSeries z;
  z.coeff.assign(21, mpq_class(0));
  z.coeff[1] = 1;
  TruncatedSeries rhs = ts_add(constant_one(21), ts_mul(z, ts_mul(C, C)));
  CHECK(C == rhs);
}

TEST_CASE("recurrence checking pinpoints the first violation") {
  // (n+1) C_n = (4n-2) C_{n-1}
  Recurrence rec;
  rec.p = {Poly{{1, 1}}, Poly{{2, -4}}};
  auto cat = catalan(30);
  CHECK_FALSE(check_recurrence(rec, cat).has_value());

  auto broken = cat;
  broken[17] += 1;
  auto bad = check_recurrence(rec, broken);
  REQUIRE(bad.has_value());
  CHECK(*bad == 17);
}

TEST_CASE("guessing recovers classical recurrences with exact arithmetic") {
  SUBCASE("Catalan: order 1, degree 1") {
    auto g = guess_recurrence(catalan(30), 2, 2);
    REQUIRE(g.has_value());
    CHECK(g->order() == 1);
    CHECK(g->degree() == 1);
    CHECK(g->p == std::vector<Poly>{Poly{{1, 1}}, Poly{{2, -4}}});
  }
  SUBCASE("Fibonacci: order 2, degree 0") {
    std::vector<mpz_class> fib{0, 1};
    for (int i = 2; i < 30; ++i) fib.push_back(fib[i - 1] + fib[i - 2]);
    auto g = guess_recurrence(fib, 3, 2);
    REQUIRE(g.has_value());
    CHECK(g->p == std::vector<Poly>{Poly{{1}}, Poly{{-1}}, Poly{{-1}}});
  }
  SUBCASE("primes admit no small recurrence") {
    std::vector<mpz_class> pr{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41,
                              43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
                              101, 103, 107, 109, 113};
    CHECK_FALSE(guess_recurrence(pr, 3, 2).has_value());
  }
  SUBCASE("underdetermined systems are refused, not fudged") {
    std::vector<mpz_class> tiny{1, 1, 2, 5};
    CHECK_THROWS_AS(guess_recurrence(tiny, 3, 3), std::invalid_argument);
  }
}

TEST_CASE("even-index subsequence transform") {
  auto cat = catalan(40);

  // an even-shift recurrence for the full sequence
  auto g = guess_recurrence(cat, 2, 2, /*even_shifts_only=*/true);
  REQUIRE(g.has_value());
  CHECK(g->p == std::vector<Poly>{Poly{{0, 1, 1}}, Poly{{0, 0, 0}},
                                  Poly{{-12, 32, -16}}});

  // JSON survives a round trip
  CHECK(Recurrence::from_json(g->to_json()).p == g->p);

  // transform to the even-index subsequence and verify directly
  Recurrence even = extract_even(*g);
  CHECK(even.p == std::vector<Poly>{Poly{{0, 2, 4}}, Poly{{-12, 64, -64}}});
  std::vector<mpz_class> c_even, c_odd;
  for (int i = 0; 2 * i < 40; ++i) c_even.push_back(cat[2 * i]);
  for (int i = 0; 2 * i + 1 < 40; ++i) c_odd.push_back(cat[2 * i + 1]);
  CHECK_FALSE(check_recurrence(even, c_even).has_value());

  Recurrence odd = extract_even(*g, /*odd_variant=*/true);
  CHECK_FALSE(check_recurrence(odd, c_odd).has_value());

  // a recurrence with a live odd shift cannot be transformed
  Recurrence full;
  full.p = {Poly{{1, 1}}, Poly{{2, -4}}};
  CHECK_THROWS_AS(extract_even(full), std::invalid_argument);
}

TEST_CASE("cogrowth comparison: null case, integers, and the flip extension") {
  SUBCASE("two constant-1 series already disagree at order 2") {
    std::vector<mpz_class> ones(13, 0);
    ones[0] = 1;
    CogrowthReport rep = cogrowth_check(ones, ones, 12);
    CHECK_FALSE(rep.pass);
    CHECK(rep.first_mismatch == 2);
    CHECK(rep.lhs == 1);
    CHECK(rep.rhs == -1);
  }
  SUBCASE("simple random walk on the integers passes") {
    // reduced closed words: only the empty one; all closed words: central
    // binomials at even lengths
    std::vector<mpz_class> r(13, 0), gamma(13, 0);
    r[0] = 1;
    for (int n = 0; 2 * n <= 12; ++n) {
      mpz_class v;
      mpz_bin_uiui(v.get_mpz_t(), 2 * n, n);
      gamma[2 * n] = v;
    }
    CogrowthReport rep = cogrowth_check(r, gamma, 12);
    CHECK(rep.pass);
  }
  SUBCASE("the weighted flip-extension pair fails at order 4") {
    std::vector<mpz_class> r{1, 0, 64, 0, 4224, 0,
                             295040, 0, 21569664, 0, 1633271936};
    std::vector<mpz_class> gamma{1, 0, 66, 0, 4614, 0,
                                 338964, 0, 25935942, 0, 2049736956};
    CogrowthReport rep = cogrowth_check(r, gamma, 10);
    CHECK_FALSE(rep.pass);
    CHECK(rep.first_mismatch == 4);
    CHECK(rep.lhs == 4289);
    CHECK(rep.rhs == 4417);
    // order 2 agrees: 64 + 1 on the left, 66 - 1 on the right
    CHECK(cogrowth_check(r, gamma, 2).pass);
  }
  SUBCASE("insufficient prefixes are rejected") {
    std::vector<mpz_class> shorty{1, 0, 2};
    CHECK_THROWS_AS(cogrowth_check(shorty, shorty, 12), std::invalid_argument);
  }
}

}  // TEST_SUITE
