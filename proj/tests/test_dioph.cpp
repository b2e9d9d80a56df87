#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <set>

#include "vhlab/arith.hpp"
#include "vhlab/dioph.hpp"

using namespace vhlab::dioph;

TEST_SUITE("dioph") {

TEST_CASE("solution counts and contents for small n") {
  // |S_n| for n = 1..16
  const std::int64_t sizes[16] = {0, 0, 0, 1, 0, 4,  0, 5,
                                  4, 8, 0, 17, 0, 12, 16, 17};
  for (int n = 1; n <= 16; ++n) {
    CAPTURE(n);
    CHECK(static_cast<std::int64_t>(enumerate_Sn(n).size()) == sizes[n - 1]);
  }
  CHECK(enumerate_Sn(4) == std::vector<SolutionQuad>{{1, 1, 1, 1}});
  CHECK(enumerate_Sn(6) == std::vector<SolutionQuad>{
                               {1, 2, 1, 2}, {1, 2, 2, 1}, {2, 1, 1, 2}, {2, 1, 2, 1}});
  CHECK(enumerate_Sn(9) == std::vector<SolutionQuad>{
                               {1, 4, 2, 2}, {2, 2, 1, 4}, {2, 2, 4, 1}, {4, 1, 2, 2}});
}

TEST_CASE("fast enumeration equals brute force") {
  for (int n = 1; n <= 120; ++n) {
    CAPTURE(n);
    CHECK(enumerate_Sn(n) == enumerate_Sn(n, /*brute=*/true));
  }
}

TEST_CASE("every returned quadruple solves the system, sorted strictly") {
  for (int n : {97, 200, 241}) {
    auto sols = enumerate_Sn(n);
    CAPTURE(n);
    for (std::size_t i = 0; i < sols.size(); ++i) {
      const auto& q = sols[i];
      CHECK(q.a >= 1);
      CHECK(q.b >= 1);
      CHECK(q.c >= 1);
      CHECK(q.d >= 1);
      CHECK(q.a + q.b + q.c + q.d == n);
      CHECK(q.a * q.b == q.c * q.d);
      if (i) CHECK(sols[i - 1] < q);
    }
  }
}

TEST_CASE("dihedral action: eight permutations preserving the system") {
  const auto& perms = d8_permutations();
  REQUIRE(perms.size() == 8);
  std::set<std::array<int, 4>> distinct(perms.begin(), perms.end());
  CHECK(distinct.size() == 8);
  CHECK(distinct.count({0, 1, 2, 3}) == 1);  // identity present
  // closed under composition
  for (const auto& p : perms)
    for (const auto& q : perms) {
      std::array<int, 4> pq{};
      for (int i = 0; i < 4; ++i) pq[i] = p[q[i]];
      CHECK(distinct.count(pq) == 1);
    }
  // the action maps solutions to solutions
  auto sols = enumerate_Sn(60);
  std::set<SolutionQuad> pool(sols.begin(), sols.end());
  for (const auto& q : sols)
    for (const auto& p : perms) {
      std::int64_t v[4] = {q.a, q.b, q.c, q.d};
      SolutionQuad img{v[p[0]], v[p[1]], v[p[2]], v[p[3]]};
      CHECK(pool.count(img) == 1);
    }
}

TEST_CASE("orbit decomposition reconstructs the solution set") {
  SUBCASE("n = 12 by hand") {
    OrbitStats st = orbit_decompose(12);
    CHECK(st.fixed == 1);   // (3,3,3,3)
    CHECK(st.abab == 2);
    CHECK(st.abcc == 0);
    CHECK(st.free_orbits == 1);
    CHECK(st.total_elements == 17);
  }
  SUBCASE("orbits partition S_n and reps are minimal") {
    for (int n = 1; n <= 200; ++n) {
      CAPTURE(n);
      OrbitStats st = orbit_decompose(n);
      auto all = enumerate_Sn(n);
      std::int64_t size_sum = 0;
      std::set<SolutionQuad> covered;
      const auto& perms = d8_permutations();
      for (const auto& orb : st.orbits) {
        size_sum += orb.size;
        std::set<SolutionQuad> members;
        std::int64_t v[4] = {orb.rep.a, orb.rep.b, orb.rep.c, orb.rep.d};
        for (const auto& p : perms)
          members.insert(SolutionQuad{v[p[0]], v[p[1]], v[p[2]], v[p[3]]});
        CHECK(static_cast<int>(members.size()) == orb.size);
        CHECK(*members.begin() == orb.rep);  // lexicographically least member
        covered.insert(members.begin(), members.end());
      }
      CHECK(size_sum == static_cast<std::int64_t>(all.size()));
      CHECK(covered == std::set<SolutionQuad>(all.begin(), all.end()));
      CHECK(st.total_elements == static_cast<std::int64_t>(all.size()));
    }
  }
  SUBCASE("orbit-kind census matches the counting formula") {
    for (int n = 1; n <= 200; ++n) {
      CAPTURE(n);
      OrbitStats st = orbit_decompose(n);
      CHECK(st.fixed == (n % 4 == 0 ? 1 : 0));
      CHECK(st.abab == (n % 2 == 0 ? (n - 1) / 4 : 0));
      CHECK(st.abcc == count_abcc(n, AbccMethod::Brute));
      CHECK(st.total_elements ==
            st.fixed + 4 * st.abab + 4 * st.abcc + 8 * st.free_orbits);
    }
  }
  SUBCASE("mod-8 residual identity") {
    for (int n = 1; n <= 500; ++n) {
      CAPTURE(n);
      std::int64_t lhs = static_cast<std::int64_t>(enumerate_Sn(n).size()) % 8;
      std::int64_t rhs = ((n % 4 == 0 ? 1 : 0) +
                          4 * (n % 2 == 0 ? (n - 1) / 4 : 0) +
                          4 * count_abcc(n, AbccMethod::ClosedForm)) %
                         8;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("three routes to the abcc count agree") {
  for (int n = 1; n <= 3000; ++n) {
    std::int64_t b = count_abcc(n, AbccMethod::Brute);
    std::int64_t t = count_abcc(n, AbccMethod::Totient);
    std::int64_t c = count_abcc(n, AbccMethod::ClosedForm);
    CAPTURE(n);
    CHECK(b == t);
    CHECK(t == c);
  }
  // the closed form ties the count to the square part
  CHECK(count_abcc(9, AbccMethod::ClosedForm) == 1);   // m(9)=3: (1,4,2,2)
  CHECK(count_abcc(16, AbccMethod::ClosedForm) == 1);  // m(16)=4: (2,8,4,4)
  CHECK(count_abcc(7, AbccMethod::ClosedForm) == 0);   // squarefree n
  CHECK((vhlab::arith::max_square_divisor_u64(9) - 1 - 0) / 2 == 1);
}

TEST_CASE("six-t count formula: the two readings") {
  const mpz_class w6 = mpz_class(1) << 18;  // 8^6

  // below the first solutions both readings are forced to the tail
  CHECK(r2_formula(1, Reading::Expanded) == 0);
  CHECK(r2_formula(1, Reading::Representative) == 0);

  // index 4: single solution (1,1,1,1); tail empty below 4
  CHECK(r2_formula(4, Reading::Expanded) == 28 * w6);
  CHECK(r2_formula(4, Reading::Representative) == 28 * w6);

  // index 5: no solutions at 5, tail picks up |S_4| = 1
  CHECK(r2_formula(5, Reading::Expanded) == 24 * w6);
  CHECK(r2_formula(5, Reading::Representative) == 24 * w6);

  // index 9: the readings separate -- S_9 is one orbit of size four whose
  // members have distinct a+c, so summing members differs from 4x one rep
  CHECK(r2_formula(9, Reading::Expanded) == 432 * w6);
  CHECK(r2_formula(9, Reading::Representative) == 276 * w6);

  CHECK_THROWS_AS(r2_formula(0, Reading::Expanded), std::invalid_argument);
}

}  // TEST_SUITE
