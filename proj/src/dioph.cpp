#include "vhlab/dioph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "vhlab/arith.hpp"

namespace vhlab::dioph {

namespace {

std::int64_t isqrt64(std::int64_t n) {
  if (n < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

std::vector<SolutionQuad> enumerate_Sn(std::int64_t n, bool brute) {
  if (n < 1) throw std::invalid_argument("enumerate_Sn: n must be >= 1");
  std::vector<SolutionQuad> out;
  if (brute) {
    for (std::int64_t a = 1; a <= n - 3; ++a)
      for (std::int64_t b = 1; a + b <= n - 2; ++b)
        for (std::int64_t c = 1; a + b + c <= n - 1; ++c) {
          std::int64_t d = n - a - b - c;
          if (a * b == c * d) out.push_back({a, b, c, d});
        }
    std::sort(out.begin(), out.end());
    return out;
  }
  // for each (a,b): c+d = n-a-b and cd = ab, so c,d are the roots of
  // X^2 - (n-a-b) X + ab
  for (std::int64_t a = 1; a <= n - 3; ++a) {
    for (std::int64_t b = 1; a + b <= n - 2; ++b) {
      std::int64_t s = n - a - b;
      std::int64_t disc = s * s - 4 * a * b;
      if (disc < 0) continue;
      std::int64_t r = isqrt64(disc);
      if (r * r != disc) continue;
      if ((s - r) % 2 != 0) continue;
      std::int64_t c = (s - r) / 2, d = (s + r) / 2;
      if (c < 1) continue;
      out.push_back({a, b, c, d});
      if (r != 0) out.push_back({a, b, d, c});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<std::array<int, 4>>& d8_permutations() {
  // close {sigma = (swap positions 2,3), tau = (swap pairs)} under composition
  static const std::vector<std::array<int, 4>> perms = [] {
    const std::array<int, 4> id{0, 1, 2, 3};
    const std::array<int, 4> sigma{0, 1, 3, 2};   // (a,b,c,d) -> (a,b,d,c)
    const std::array<int, 4> tau{2, 3, 0, 1};     // (a,b,c,d) -> (c,d,a,b)
    auto compose = [](const std::array<int, 4>& f, const std::array<int, 4>& g) {
      std::array<int, 4> h{};
      for (int i = 0; i < 4; ++i) h[i] = f[g[i]];
      return h;
    };
    std::set<std::array<int, 4>> seen{id};
    std::vector<std::array<int, 4>> frontier{id};
    while (!frontier.empty()) {
      std::vector<std::array<int, 4>> next;
      for (const auto& p : frontier)
        for (const auto& ggen : {sigma, tau}) {
          auto q = compose(p, ggen);
          if (seen.insert(q).second) next.push_back(q);
        }
      frontier = std::move(next);
    }
    return std::vector<std::array<int, 4>>(seen.begin(), seen.end());
  }();
  return perms;
}

namespace {
SolutionQuad apply_perm(const std::array<int, 4>& perm, const SolutionQuad& q) {
  std::array<std::int64_t, 4> v{q.a, q.b, q.c, q.d};
  return {v[perm[0]], v[perm[1]], v[perm[2]], v[perm[3]]};
}
}  // namespace

OrbitStats orbit_decompose(std::int64_t n) {
  auto sols = enumerate_Sn(n);
  OrbitStats stats;
  stats.total_elements = static_cast<std::int64_t>(sols.size());
  std::set<SolutionQuad> remaining(sols.begin(), sols.end());
  const auto& perms = d8_permutations();
  while (!remaining.empty()) {
    SolutionQuad seed = *remaining.begin();
    std::set<SolutionQuad> orbit;
    for (const auto& p : perms) orbit.insert(apply_perm(p, seed));
    Orbit o;
    o.rep = *orbit.begin();
    o.size = static_cast<int>(orbit.size());
    bool isAbab = false, isAbcc = false;
    for (const auto& q : orbit) {
      if (q.a == q.c && q.b == q.d && q.a != q.b) isAbab = true;
      if (q.c == q.d && q.a != q.b) isAbcc = true;
    }
    if (o.size == 1) {
      o.kind = OrbitKind::Fixed;
      ++stats.fixed;
    } else if (isAbab) {
      o.kind = OrbitKind::ABAB;
      ++stats.abab;
    } else if (isAbcc) {
      o.kind = OrbitKind::ABCC;
      ++stats.abcc;
    } else {
      o.kind = OrbitKind::Free;
      ++stats.free_orbits;
    }
    stats.orbits.push_back(o);
    for (const auto& q : orbit) remaining.erase(q);
  }
  std::sort(stats.orbits.begin(), stats.orbits.end(),
            [](const Orbit& l, const Orbit& r) { return l.rep < r.rep; });
  return stats;
}

std::int64_t count_abcc(std::int64_t n, AbccMethod method) {
  if (n < 1) throw std::invalid_argument("count_abcc: n must be >= 1");
  switch (method) {
    case AbccMethod::Brute: {
      // (a,b,c): a < b, ab = c^2, a + b + 2c = n; per c a quadratic in a,b
      std::int64_t count = 0;
      for (std::int64_t c = 1; 2 * c <= n - 2; ++c) {
        std::int64_t s = n - 2 * c;
        std::int64_t disc = s * s - 4 * c * c;
        if (disc <= 0) continue;  // a = b excluded (a < b needs disc > 0)
        std::int64_t r = isqrt64(disc);
        if (r * r != disc) continue;
        if ((s - r) % 2 != 0) continue;
        if ((s - r) / 2 >= 1) ++count;
      }
      return count;
    }
    case AbccMethod::Totient: {
      // (1/2) sum over z >= 3, z^2 | n of phi(z)
      std::int64_t half_sum = 0;
      static thread_local std::vector<std::uint32_t> phi;
      std::int64_t zmax = isqrt64(n);
      if (static_cast<std::int64_t>(phi.size()) <= zmax)
        phi = arith::phi_sieve(static_cast<std::uint32_t>(std::max<std::int64_t>(zmax, 64)));
      for (std::int64_t z = 3; z * z <= n; ++z)
        if (n % (z * z) == 0) half_sum += phi[z];
      if (half_sum % 2 != 0)
        throw std::logic_error("count_abcc: totient sum not even");
      return half_sum / 2;
    }
    case AbccMethod::ClosedForm: {
      std::int64_t m = static_cast<std::int64_t>(
          arith::max_square_divisor_u64(static_cast<std::uint64_t>(n)));
      std::int64_t v = m - 1 - (n % 4 == 0 ? 1 : 0);
      if (v % 2 != 0) throw std::logic_error("count_abcc: closed form not even");
      return v / 2;
    }
  }
  throw std::logic_error("count_abcc: bad method");
}

mpz_class r2_formula(std::int64_t ell, Reading reading) {
  if (ell < 1) throw std::invalid_argument("r2_formula: ell must be >= 1");
  mpz_class bracket = 0;
  if (reading == Reading::Expanded) {
    for (const auto& q : enumerate_Sn(ell)) bracket += 4 * (2 * (q.a + q.c) + 3);
  } else {
    for (const auto& o : orbit_decompose(ell).orbits)
      bracket += 4 * (2 * (o.rep.a + o.rep.c) + 3);
  }
  for (std::int64_t k = 1; k < ell; ++k) {
    auto sols = enumerate_Sn(k);
    bracket += 4 * 6 * static_cast<std::int64_t>(sols.size());
  }
  mpz_class weight;
  mpz_ui_pow_ui(weight.get_mpz_t(), 8, 6);
  return weight * bracket;
}

}  // namespace vhlab::dioph
