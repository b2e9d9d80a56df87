#include "vhlab/walk.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <thread>
#include <unordered_map>

namespace vhlab::walk {

// ----------------------------------------------------------------- rings ---

RingSpec RingSpec::exact() { return {Kind::Exact, 0}; }

RingSpec RingSpec::mod2k(int k) {
  if (k < 1 || k > 32)
    throw std::invalid_argument("ring: modulus 2^K needs 1 <= K <= 32");
  return {Kind::Mod2K, k};
}

RingSpec RingSpec::real() { return {Kind::Real, 0}; }

RingSpec RingSpec::parse(const std::string& s) {
  if (s == "exact") return exact();
  if (s == "real") return real();
  if (s.rfind("mod", 0) == 0) {
    int k = 0;
    try {
      k = std::stoi(s.substr(3));
    } catch (...) {
      throw std::invalid_argument("ring: cannot parse '" + s + "'");
    }
    return mod2k(k);  // "mod24" = residues mod 2^24
  }
  throw std::invalid_argument("ring: cannot parse '" + s + "'");
}

std::string RingSpec::to_string() const {
  switch (kind) {
    case Kind::Exact: return "exact";
    case Kind::Mod2K: return "mod2^" + std::to_string(k);
    case Kind::Real:  return "real";
  }
  return "?";
}

GeneratorSet GeneratorSet::vh_default() { return {}; }

GeneratorSet GeneratorSet::h3_lazy() {
  GeneratorSet g;
  g.group = Group::H3Lazy;
  g.weight_x = g.weight_xinv = g.weight_y = g.weight_yinv = g.weight_e = 1;
  g.weight_t = 0;
  return g;
}

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

mpz_class mpz_from_u128(u128 v) {
  mpz_class hi(static_cast<unsigned long>(v >> 64));
  mpz_class lo(static_cast<unsigned long>(v));
  return (hi << 64) + lo;
}

int resolve_threads(const EngineOptions& opts) {
  if (opts.threads > 0) return opts.threads;
  if (const char* env = std::getenv("VHLAB_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 1;
}

// ring policies -------------------------------------------------------------

struct ModRing {
  using Cell = u32;
  u32 mask;
  Cell weight(std::int64_t w, std::int64_t) const {
    return static_cast<u32>(w) & mask;
  }
  Cell mul(Cell c, Cell w) const {
    return static_cast<u32>((static_cast<u64>(c) * w) & mask);
  }
  void add(Cell& dst, Cell v) const { dst = (dst + v) & mask; }
};

struct ExactRing {
  using Cell = u128;
  Cell weight(std::int64_t w, std::int64_t) const { return static_cast<u128>(w); }
  Cell mul(Cell c, Cell w) const { return c * w; }
  void add(Cell& dst, Cell v) const { dst += v; }
};

struct RealRing {
  using Cell = double;
  Cell weight(std::int64_t w, std::int64_t total) const {
    return static_cast<double>(w) / static_cast<double>(total);
  }
  Cell mul(Cell c, Cell w) const { return c * w; }
  void add(Cell& dst, Cell v) const { dst += v; }
};

// geometry -------------------------------------------------------------------

struct Geometry {
  int ell = 0;
  bool prune = true;
  int Amax = 0, Cmax = 0;
  int Na = 0, Nb = 0, Nc = 0;

  static int fwd_c(int k) { return (k * k) / 4; }
  static int bwd_c(int R, int A) { return R * A + (R * R) / 2; }

  explicit Geometry(int ell_, bool prune_) : ell(ell_), prune(prune_) {
    Amax = prune ? ell / 2 : ell;
    if (prune) {
      int best = 0;
      for (int k = 0; k <= ell; ++k) {
        int A = std::min(k, ell - k);
        best = std::max(best, std::min(fwd_c(k), bwd_c(ell - k, A)));
      }
      Cmax = best;
    } else {
      Cmax = fwd_c(ell);
    }
    Na = 2 * Amax + 1;
    Nb = Na;
    Nc = 2 * Cmax + 1;
  }

  int ab_cap(int k) const { return prune ? std::min(k, ell - k) : std::min(k, Amax); }
  int c_cap(int k, int absa) const {
    int cap = std::min(fwd_c(k), Cmax);
    if (prune) cap = std::min(cap, bwd_c(ell - k, absa));
    return cap;
  }
  std::size_t plane() const {
    return static_cast<std::size_t>(Na) * Nb * Nc;
  }
  std::size_t pos(int a, int b, int c) const {
    return (static_cast<std::size_t>(a + Amax) * Nb + (b + Amax)) * Nc +
           (c + Cmax);
  }
};

// runs fn(unit) for unit in [0, n) across workers; deterministic by disjoint
// ownership (each unit writes only its own rows)
template <class Fn>
void parallel_units(std::size_t n, int threads, Fn&& fn) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t u = 0; u < n; ++u) fn(u);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t u = next.fetch_add(1);
      if (u >= n) break;
      fn(u);
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

// --------------------------------------------------------- vh plain walk ---
// slices: eps in {0,1}

template <class Ring>
class VhPlainDense {
 public:
  using Cell = typename Ring::Cell;
  VhPlainDense(const Ring& ring, const Geometry& g, const GeneratorSet& gens)
      : ring_(ring), g_(g) {
    std::int64_t total = gens.weight_x + gens.weight_xinv + gens.weight_t;
    wx_ = ring_.weight(gens.weight_x, total);
    wxi_ = ring_.weight(gens.weight_xinv, total);
    wt_ = ring_.weight(gens.weight_t, total);
    cur_.assign(2 * g_.plane(), Cell{});
    nxt_.assign(2 * g_.plane(), Cell{});
    cur_[idx(0, 0, 0, 0)] = ring_.weight(1, 1);
  }

  Cell closed() const { return cur_[idx(0, 0, 0, 0)]; }

  void step(int k, int threads) {
    std::fill(nxt_.begin(), nxt_.end(), Cell{});
    int abk = g_.ab_cap(k);
    std::vector<std::pair<int, int>> units;  // (eps, a)
    for (int eps = 0; eps < 2; ++eps)
      for (int a = -abk; a <= abk; ++a) units.emplace_back(eps, a);
    parallel_units(units.size(), threads, [&](std::size_t u) {
      auto [eps, a] = units[u];
      gather_row(k, eps, a);
    });
    cur_.swap(nxt_);
  }

 private:
  std::size_t idx(int eps, int a, int b, int c) const {
    return static_cast<std::size_t>(eps) * g_.plane() + g_.pos(a, b, c);
  }

  void gather_row(int k, int eps, int a) {
    int abk = g_.ab_cap(k);
    int absa = a < 0 ? -a : a;
    for (int b = -(abk - absa); b <= abk - absa; ++b) {
      if (((a + b + k + eps) & 1) != 0) continue;  // parity of x-letter count
      int ccap = g_.c_cap(k, absa);
      for (int c = -ccap; c <= ccap; ++c) {
        Cell acc{};
        // appending x: eps0 from (a-1,b,c); eps1 from (a,b-1,c-a)
        if (eps == 0) {
          if (a - 1 >= -g_.Amax)
            ring_.add(acc, ring_.mul(cur_[idx(0, a - 1, b, c)], wx_));
          if (a + 1 <= g_.Amax)
            ring_.add(acc, ring_.mul(cur_[idx(0, a + 1, b, c)], wxi_));
        } else {
          if (b - 1 >= -g_.Amax && c - a >= -g_.Cmax && c - a <= g_.Cmax)
            ring_.add(acc, ring_.mul(cur_[idx(1, a, b - 1, c - a)], wx_));
          if (b + 1 <= g_.Amax && c + a >= -g_.Cmax && c + a <= g_.Cmax)
            ring_.add(acc, ring_.mul(cur_[idx(1, a, b + 1, c + a)], wxi_));
        }
        // appending t: eps flips, position unchanged
        ring_.add(acc, ring_.mul(cur_[idx(eps ^ 1, a, b, c)], wt_));
        nxt_[idx(eps, a, b, c)] = acc;
      }
    }
  }

  Ring ring_;
  Geometry g_;
  Cell wx_, wxi_, wt_;
  std::vector<Cell> cur_, nxt_;
};

// ------------------------------------------------------- vh reduced walk ---
// slices: (prev in {X=0, Xinv=1, T=2}) x (t in 0..8) x (tt) x (eps)

constexpr int kPrevX = 0, kPrevXinv = 1, kPrevT = 2;

struct ReducedClosed {
  // closed-cell values per (prev, t, tt); eps = 0
  // classification happens outside the ring
  struct Entry {
    int prev, t, tt;
  };
};

template <class Ring>
class VhReducedDense {
 public:
  using Cell = typename Ring::Cell;
  static constexpr int kNT = 9;

  VhReducedDense(const Ring& ring, const Geometry& g, const GeneratorSet& gens)
      : ring_(ring), g_(g) {
    std::int64_t total = gens.weight_x + gens.weight_xinv + gens.weight_t;
    wx_ = ring_.weight(gens.weight_x, total);
    wxi_ = ring_.weight(gens.weight_xinv, total);
    wt_ = ring_.weight(gens.weight_t, total);
    cur_.assign(nslice() * g_.plane(), Cell{});
    nxt_.assign(nslice() * g_.plane(), Cell{});
  }

  static int slice(int prev, int t, int tt, int eps) {
    return ((prev * kNT + t) * 2 + tt) * 2 + eps;
  }
  static int nslice() { return 3 * kNT * 2 * 2; }

  void seed() {
    // length-1 words
    cur_[idx(slice(kPrevX, 0, 0, 0), 1, 0, 0)] = wx_;
    cur_[idx(slice(kPrevXinv, 0, 0, 0), -1, 0, 0)] = wxi_;
    cur_[idx(slice(kPrevT, 1, 0, 1), 0, 0, 0)] = wt_;
  }

  void step(int k, int threads) {
    std::fill(nxt_.begin(), nxt_.end(), Cell{});
    int abk = g_.ab_cap(k);
    struct Unit {
      int prev, t, tt, eps, a;
    };
    std::vector<Unit> units;
    for (int prev = 0; prev < 3; ++prev)
      for (int t = 0; t < kNT; ++t) {
        if (t > std::min(k, 8)) continue;
        if (prev == kPrevT && t == 0) continue;
        if (prev != kPrevT && t > k - 1) continue;
        for (int tt = 0; tt < 2; ++tt) {
          if (tt == 1 && t < 2) continue;
          for (int eps = 0; eps < 2; ++eps) {
            if (t < 8 && eps != (t & 1)) continue;
            for (int a = -abk; a <= abk; ++a)
              units.push_back({prev, t, tt, eps, a});
          }
        }
      }
    parallel_units(units.size(), threads, [&](std::size_t u) {
      const Unit& un = units[u];
      gather_row(k, un.prev, un.t, un.tt, un.eps, un.a);
    });
    cur_.swap(nxt_);
  }

  // classification of the closed cells after the current step
  void read_closed(Cell& r, Cell& r1, Cell& r2, Cell& r3) const {
    r = r1 = r2 = r3 = Cell{};
    for (int prev = 0; prev < 3; ++prev)
      for (int t = 0; t < kNT; ++t)
        for (int tt = 0; tt < 2; ++tt) {
          Cell v = cur_[idx(slice(prev, t, tt, 0), 0, 0, 0)];
          ring_.add(r, v);
          if (t >= 8)
            ring_.add(r3, v);
          else if (t == 6 && tt == 0)
            ring_.add(r2, v);
          else
            ring_.add(r1, v);
        }
  }

 private:
  std::size_t idx(int s, int a, int b, int c) const {
    return static_cast<std::size_t>(s) * g_.plane() + g_.pos(a, b, c);
  }

  Cell src(int s, int a, int b, int c) const {
    if (a < -g_.Amax || a > g_.Amax || b < -g_.Amax || b > g_.Amax ||
        c < -g_.Cmax || c > g_.Cmax)
      return Cell{};
    return cur_[idx(s, a, b, c)];
  }

  void gather_row(int k, int prev, int t, int tt, int eps, int a) {
    int abk = g_.ab_cap(k);
    int absa = a < 0 ? -a : a;
    for (int b = -(abk - absa); b <= abk - absa; ++b) {
      if (((a + b + k + eps) & 1) != 0) continue;
      int ccap = g_.c_cap(k, absa);
      for (int c = -ccap; c <= ccap; ++c) {
        Cell acc{};
        if (prev == kPrevX) {
          // sources: prev in {X, T}, same (t, tt, eps)
          int sa = a, sb = b, sc = c;
          if (eps == 0) sa = a - 1; else { sb = b - 1; sc = c - a; }
          ring_.add(acc, ring_.mul(src(slice(kPrevX, t, tt, eps), sa, sb, sc), wx_));
          ring_.add(acc, ring_.mul(src(slice(kPrevT, t, tt, eps), sa, sb, sc), wx_));
        } else if (prev == kPrevXinv) {
          int sa = a, sb = b, sc = c;
          if (eps == 0) sa = a + 1; else { sb = b + 1; sc = c + a; }
          ring_.add(acc, ring_.mul(src(slice(kPrevXinv, t, tt, eps), sa, sb, sc), wxi_));
          ring_.add(acc, ring_.mul(src(slice(kPrevT, t, tt, eps), sa, sb, sc), wxi_));
        } else {  // prev == kPrevT
          int epsp = eps ^ 1;
          Cell sum{};
          int tsrc_lo = (t == 8) ? 7 : t - 1;
          int tsrc_hi = (t == 8) ? 8 : t - 1;
          for (int ts = tsrc_lo; ts <= tsrc_hi; ++ts) {
            if (ts < 0) continue;
            if (tt == 0) {
              ring_.add(sum, src(slice(kPrevX, ts, 0, epsp), a, b, c));
              ring_.add(sum, src(slice(kPrevXinv, ts, 0, epsp), a, b, c));
            } else {
              ring_.add(sum, src(slice(kPrevX, ts, 1, epsp), a, b, c));
              ring_.add(sum, src(slice(kPrevXinv, ts, 1, epsp), a, b, c));
              ring_.add(sum, src(slice(kPrevT, ts, 0, epsp), a, b, c));
              ring_.add(sum, src(slice(kPrevT, ts, 1, epsp), a, b, c));
            }
          }
          acc = ring_.mul(sum, wt_);
        }
        nxt_[idx(slice(prev, t, tt, eps), a, b, c)] = acc;
      }
    }
  }

  Ring ring_;
  Geometry g_;
  Cell wx_, wxi_, wt_;
  std::vector<Cell> cur_, nxt_;
};

// ------------------------------------------------------------- h3 lazy ---

template <class Ring>
class H3Dense {
 public:
  using Cell = typename Ring::Cell;
  H3Dense(const Ring& ring, const Geometry& g, const GeneratorSet& gens)
      : ring_(ring), g_(g) {
    std::int64_t total = gens.weight_x + gens.weight_xinv + gens.weight_y +
                         gens.weight_yinv + gens.weight_e;
    wx_ = ring_.weight(gens.weight_x, total);
    wxi_ = ring_.weight(gens.weight_xinv, total);
    wy_ = ring_.weight(gens.weight_y, total);
    wyi_ = ring_.weight(gens.weight_yinv, total);
    we_ = ring_.weight(gens.weight_e, total);
    cur_.assign(g_.plane(), Cell{});
    nxt_.assign(g_.plane(), Cell{});
    cur_[g_.pos(0, 0, 0)] = ring_.weight(1, 1);
  }

  Cell closed() const { return cur_[g_.pos(0, 0, 0)]; }

  void step(int k, int threads) {
    std::fill(nxt_.begin(), nxt_.end(), Cell{});
    int abk = g_.ab_cap(k);
    std::vector<int> units;
    for (int a = -abk; a <= abk; ++a) units.push_back(a);
    parallel_units(units.size(), threads, [&](std::size_t u) {
      gather_row(k, units[u]);
    });
    cur_.swap(nxt_);
  }

 private:
  Cell src(int a, int b, int c) const {
    if (a < -g_.Amax || a > g_.Amax || b < -g_.Amax || b > g_.Amax ||
        c < -g_.Cmax || c > g_.Cmax)
      return Cell{};
    return cur_[g_.pos(a, b, c)];
  }

  void gather_row(int k, int a) {
    int abk = g_.ab_cap(k);
    int absa = a < 0 ? -a : a;
    for (int b = -(abk - absa); b <= abk - absa; ++b) {
      int ccap = g_.c_cap(k, absa);
      for (int c = -ccap; c <= ccap; ++c) {
        Cell acc{};
        ring_.add(acc, ring_.mul(src(a - 1, b, c), wx_));
        ring_.add(acc, ring_.mul(src(a + 1, b, c), wxi_));
        ring_.add(acc, ring_.mul(src(a, b - 1, c - a), wy_));
        ring_.add(acc, ring_.mul(src(a, b + 1, c + a), wyi_));
        ring_.add(acc, ring_.mul(src(a, b, c), we_));
        nxt_[g_.pos(a, b, c)] = acc;
      }
    }
  }

  Ring ring_;
  Geometry g_;
  Cell wx_, wxi_, wy_, wyi_, we_;
  std::vector<Cell> cur_, nxt_;
};

// ----------------------------------------------------------- sparse path ---
// scatter over a hash map; exact and mod-2^K rings only (their additions
// commute exactly, so map iteration order cannot change any result)

template <class Ring>
class SparseEngine {
 public:
  using Cell = typename Ring::Cell;
  using Map = std::unordered_map<u64, Cell>;

  SparseEngine(const Ring& ring, const Geometry& g, const GeneratorSet& gens,
               bool reduced)
      : ring_(ring), g_(g), gens_(gens), reduced_(reduced) {
    std::int64_t total = gens.group == Group::VH
                             ? gens.weight_x + gens.weight_xinv + gens.weight_t
                             : gens.weight_x + gens.weight_xinv + gens.weight_y +
                                   gens.weight_yinv + gens.weight_e;
    wx_ = ring_.weight(gens.weight_x, total);
    wxi_ = ring_.weight(gens.weight_xinv, total);
    wt_ = ring_.weight(gens.weight_t, total);
    wy_ = ring_.weight(gens.weight_y, total);
    wyi_ = ring_.weight(gens.weight_yinv, total);
    we_ = ring_.weight(gens.weight_e, total);
    // state key: (((slice * Na + ia) * Nb + ib) * Nc + ic)
    if (gens.group == Group::VH && !reduced)
      cur_[key(0, 0, 0, 0)] = ring_.weight(1, 1);
    else if (gens.group == Group::H3Lazy)
      cur_[key(0, 0, 0, 0)] = ring_.weight(1, 1);
    // reduced: seeded at step 1 by step()
  }

  u64 key(int s, int a, int b, int c) const {
    return ((static_cast<u64>(s) * g_.Na + (a + g_.Amax)) * g_.Nb +
            (b + g_.Amax)) *
               g_.Nc +
           (c + g_.Cmax);
  }

  void bump(Map& m, u64 k, Cell v) const {
    auto [it, fresh] = m.emplace(k, v);
    if (!fresh) ring_.add(it->second, v);
  }

  void step(int k) {
    Map nxt;
    nxt.reserve(cur_.size() * 3 + 8);
    if (reduced_ && k == 1) {
      bump(nxt, key(VhReducedDense<Ring>::slice(kPrevX, 0, 0, 0), 1, 0, 0), wx_);
      bump(nxt, key(VhReducedDense<Ring>::slice(kPrevXinv, 0, 0, 0), -1, 0, 0), wxi_);
      bump(nxt, key(VhReducedDense<Ring>::slice(kPrevT, 1, 0, 1), 0, 0, 0), wt_);
      cur_ = std::move(nxt);
      return;
    }
    for (const auto& [kk, val] : cur_) {
      u64 rest = kk;
      int ic = static_cast<int>(rest % g_.Nc) - g_.Cmax;
      rest /= g_.Nc;
      int ib = static_cast<int>(rest % g_.Nb) - g_.Amax;
      rest /= g_.Nb;
      int ia = static_cast<int>(rest % g_.Na) - g_.Amax;
      int s = static_cast<int>(rest / g_.Na);
      if (gens_.group == Group::H3Lazy) {
        scatter_h3(nxt, k, ia, ib, ic, val);
      } else if (!reduced_) {
        scatter_plain(nxt, k, s, ia, ib, ic, val);
      } else {
        scatter_reduced(nxt, k, s, ia, ib, ic, val);
      }
    }
    cur_ = std::move(nxt);
  }

  bool in_bounds(int k, int a, int b, int c) const {
    int absa = a < 0 ? -a : a, absb = b < 0 ? -b : b, absc = c < 0 ? -c : c;
    if (absa + absb > g_.ab_cap(k)) return false;
    if (absc > g_.c_cap(k, absa)) return false;
    return true;
  }

  void scatter_h3(Map& nxt, int k, int a, int b, int c, Cell v) const {
    auto put = [&](int ta, int tb, int tc, Cell w) {
      if (in_bounds(k, ta, tb, tc)) bump(nxt, key(0, ta, tb, tc), ring_.mul(v, w));
    };
    put(a + 1, b, c, wx_);
    put(a - 1, b, c, wxi_);
    put(a, b + 1, c + a, wy_);
    put(a, b - 1, c - a, wyi_);
    put(a, b, c, we_);
  }

  void scatter_plain(Map& nxt, int k, int eps, int a, int b, int c, Cell v) const {
    auto put = [&](int s, int ta, int tb, int tc, Cell w) {
      if (in_bounds(k, ta, tb, tc)) bump(nxt, key(s, ta, tb, tc), ring_.mul(v, w));
    };
    if (eps == 0) {
      put(0, a + 1, b, c, wx_);
      put(0, a - 1, b, c, wxi_);
    } else {
      put(1, a, b + 1, c + a, wx_);
      put(1, a, b - 1, c - a, wxi_);
    }
    put(eps ^ 1, a, b, c, wt_);
  }

  void scatter_reduced(Map& nxt, int k, int s, int a, int b, int c, Cell v) const {
    int eps = s & 1, tt = (s >> 1) & 1;
    int t = (s >> 2) % VhReducedDense<Ring>::kNT;
    int prev = (s >> 2) / VhReducedDense<Ring>::kNT;
    auto put = [&](int tprev, int tnum, int ttt, int teps, int ta, int tb, int tc,
                   Cell w) {
      if (in_bounds(k, ta, tb, tc))
        bump(nxt, key(VhReducedDense<Ring>::slice(tprev, tnum, ttt, teps), ta, tb, tc),
             ring_.mul(v, w));
    };
    if (prev != kPrevXinv) {  // may append x
      if (eps == 0)
        put(kPrevX, t, tt, eps, a + 1, b, c, wx_);
      else
        put(kPrevX, t, tt, eps, a, b + 1, c + a, wx_);
    }
    if (prev != kPrevX) {  // may append x^-1
      if (eps == 0)
        put(kPrevXinv, t, tt, eps, a - 1, b, c, wxi_);
      else
        put(kPrevXinv, t, tt, eps, a, b - 1, c - a, wxi_);
    }
    put(kPrevT, std::min(t + 1, 8), tt | (prev == kPrevT ? 1 : 0), eps ^ 1, a, b,
        c, wt_);
  }

  Cell lookup(int s, int a, int b, int c) const {
    auto it = cur_.find(key(s, a, b, c));
    return it == cur_.end() ? Cell{} : it->second;
  }

  Cell closed_plain() const { return lookup(0, 0, 0, 0); }

  void read_closed_reduced(Cell& r, Cell& r1, Cell& r2, Cell& r3) const {
    r = r1 = r2 = r3 = Cell{};
    for (int prev = 0; prev < 3; ++prev)
      for (int t = 0; t < VhReducedDense<Ring>::kNT; ++t)
        for (int tt = 0; tt < 2; ++tt) {
          Cell v = lookup(VhReducedDense<Ring>::slice(prev, t, tt, 0), 0, 0, 0);
          ring_.add(r, v);
          if (t >= 8)
            ring_.add(r3, v);
          else if (t == 6 && tt == 0)
            ring_.add(r2, v);
          else
            ring_.add(r1, v);
        }
  }

  Ring ring_;
  Geometry g_;
  GeneratorSet gens_;
  bool reduced_;
  Cell wx_, wxi_, wt_, wy_, wyi_, we_;
  Map cur_;
};

// ------------------------------------------------------------ dispatch -----

std::int64_t weight_total(const GeneratorSet& gens) {
  return gens.group == Group::VH
             ? gens.weight_x + gens.weight_xinv + gens.weight_t
             : gens.weight_x + gens.weight_xinv + gens.weight_y +
                   gens.weight_yinv + gens.weight_e;
}

void check_exact_capacity(const GeneratorSet& gens, int max_len) {
  // cell values are bounded by (sum of weights)^len; intermediate gather sums
  // stay below (sum)^{len+1}; require that to fit unsigned 128-bit
  double bits = (max_len + 1) * std::log2(static_cast<double>(weight_total(gens)));
  if (bits >= 127.0)
    throw CapacityError(
        "exact ring: length " + std::to_string(max_len) +
        " exceeds the 128-bit cell bound (weight sum " +
        std::to_string(weight_total(gens)) + "); use a modular ring");
}

std::size_t dense_bytes(const Geometry& g, int nslice, std::size_t cell) {
  return 2 * g.plane() * static_cast<std::size_t>(nslice) * cell;
}

template <class Ring>
CountTable run_closed(const Ring& ring, const RingSpec& spec,
                      const GeneratorSet& gens, int max_len,
                      const EngineOptions& opts) {
  Geometry g(max_len, opts.prune);
  int threads = resolve_threads(opts);
  CountTable out;
  out.ring = spec;
  bool real = spec.kind == RingSpec::Kind::Real;
  int nslice = gens.group == Group::VH ? 2 : 1;
  bool sparse = opts.force_sparse ||
                dense_bytes(g, nslice, sizeof(typename Ring::Cell)) > opts.memory_budget;
  auto push = [&](typename Ring::Cell v) {
    if (real)
      out.reals.push_back(static_cast<double>(v));
    else if (spec.kind == RingSpec::Kind::Exact)
      out.counts.push_back(mpz_from_u128(static_cast<u128>(v)));
    else
      out.counts.push_back(static_cast<unsigned long>(static_cast<u64>(v)));
  };
  if (sparse) {
    if (real)
      throw CapacityError(
          "real ring requires dense tables within the memory budget "
          "(" + std::to_string(dense_bytes(g, nslice, sizeof(typename Ring::Cell))) +
          " bytes needed)");
    SparseEngine<Ring> eng(ring, g, gens, /*reduced=*/false);
    push(eng.closed_plain());
    for (int k = 1; k <= max_len; ++k) {
      eng.step(k);
      push(eng.closed_plain());
    }
    return out;
  }
  if (gens.group == Group::VH) {
    VhPlainDense<Ring> eng(ring, g, gens);
    push(eng.closed());
    for (int k = 1; k <= max_len; ++k) {
      eng.step(k, threads);
      push(eng.closed());
    }
  } else {
    H3Dense<Ring> eng(ring, g, gens);
    push(eng.closed());
    for (int k = 1; k <= max_len; ++k) {
      eng.step(k, threads);
      push(eng.closed());
    }
  }
  return out;
}

template <class Ring>
ReducedTables run_reduced(const Ring& ring, const RingSpec& spec, int max_len,
                          const EngineOptions& opts) {
  GeneratorSet gens = GeneratorSet::vh_default();
  Geometry g(max_len, opts.prune);
  int threads = resolve_threads(opts);
  ReducedTables out;
  out.r.ring = out.r1.ring = out.r2.ring = out.r3.ring = spec;
  bool exact = spec.kind == RingSpec::Kind::Exact;
  auto push = [&](CountTable& tab, typename Ring::Cell v) {
    if (exact)
      tab.counts.push_back(mpz_from_u128(static_cast<u128>(v)));
    else
      tab.counts.push_back(static_cast<unsigned long>(static_cast<u64>(v)));
  };
  // length 0: the empty word is reduced with no t's
  push(out.r, ring.weight(1, 1));
  push(out.r1, ring.weight(1, 1));
  push(out.r2, typename Ring::Cell{});
  push(out.r3, typename Ring::Cell{});
  bool sparse = opts.force_sparse ||
                dense_bytes(g, VhReducedDense<Ring>::nslice(),
                            sizeof(typename Ring::Cell)) > opts.memory_budget;
  if (sparse) {
    SparseEngine<Ring> eng(ring, g, gens, /*reduced=*/true);
    for (int k = 1; k <= max_len; ++k) {
      eng.step(k);
      typename Ring::Cell r, r1, r2, r3;
      eng.read_closed_reduced(r, r1, r2, r3);
      push(out.r, r);
      push(out.r1, r1);
      push(out.r2, r2);
      push(out.r3, r3);
    }
    return out;
  }
  VhReducedDense<Ring> eng(ring, g, gens);
  for (int k = 1; k <= max_len; ++k) {
    if (k == 1)
      eng.seed();
    else
      eng.step(k, threads);
    typename Ring::Cell r, r1, r2, r3;
    eng.read_closed(r, r1, r2, r3);
    push(out.r, r);
    push(out.r1, r1);
    push(out.r2, r2);
    push(out.r3, r3);
  }
  return out;
}

}  // namespace

CountTable count_closed(const GeneratorSet& gens, int max_len,
                        const RingSpec& ring, const EngineOptions& opts) {
  if (max_len < 0) throw std::invalid_argument("count_closed: negative length");
  switch (ring.kind) {
    case RingSpec::Kind::Exact:
      check_exact_capacity(gens, max_len);
      return run_closed(ExactRing{}, ring, gens, max_len, opts);
    case RingSpec::Kind::Mod2K: {
      ModRing r{ring.k == 32 ? 0xffffffffu : ((1u << ring.k) - 1)};
      return run_closed(r, ring, gens, max_len, opts);
    }
    case RingSpec::Kind::Real:
      return run_closed(RealRing{}, ring, gens, max_len, opts);
  }
  throw std::logic_error("count_closed: bad ring");
}

ReducedTables count_reduced_split(int max_len, const RingSpec& ring,
                                  const EngineOptions& opts) {
  if (max_len < 0)
    throw std::invalid_argument("count_reduced_split: negative length");
  if (ring.kind == RingSpec::Kind::Real)
    throw std::invalid_argument("count_reduced_split: real ring not supported");
  if (ring.kind == RingSpec::Kind::Exact) {
    check_exact_capacity(GeneratorSet::vh_default(), max_len);
    return run_reduced(ExactRing{}, ring, max_len, opts);
  }
  ModRing r{ring.k == 32 ? 0xffffffffu : ((1u << ring.k) - 1)};
  return run_reduced(r, ring, max_len, opts);
}

// ------------------------------------------------------------ brute force ---

BruteTables brute_force_closed(const GeneratorSet& gens, int max_len) {
  if (max_len < 0 || max_len > 12)
    throw std::invalid_argument("brute_force_closed: max_len must be in [0,12]");
  using heis::Letter;
  std::vector<Letter> alphabet =
      gens.group == Group::VH
          ? std::vector<Letter>{Letter::X, Letter::Xinv, Letter::T}
          : std::vector<Letter>{Letter::X, Letter::Xinv, Letter::Y, Letter::Yinv,
                                Letter::E};
  auto letter_weight = [&](Letter l) -> long {
    switch (l) {
      case Letter::X: return gens.weight_x;
      case Letter::Xinv: return gens.weight_xinv;
      case Letter::Y: return gens.weight_y;
      case Letter::Yinv: return gens.weight_yinv;
      case Letter::T: return gens.weight_t;
      case Letter::E: return gens.weight_e;
    }
    return 0;
  };
  BruteTables out;
  RingSpec ex = RingSpec::exact();
  for (CountTable* t : {&out.c, &out.r, &out.r1, &out.r2, &out.r3}) {
    t->ring = ex;
    t->counts.assign(max_len + 1, mpz_class(0));
  }
  struct Frame {
    heis::VHElement g;
    Letter last = Letter::E;
    int tcount = 0;
    bool has_tt = false;
    bool reduced = true;
    mpz_class weight = 1;
  };
  // depth-first over all words; each node at depth k is a word of length k
  std::vector<Frame> stack(max_len + 1);
  stack[0] = Frame{};
  out.c.counts[0] = 1;
  out.r.counts[0] = 1;
  out.r1.counts[0] = 1;
  std::vector<int> choice(max_len + 1, -1);
  int depth = 0;
  while (depth >= 0) {
    if (depth == max_len || ++choice[depth] >= static_cast<int>(alphabet.size())) {
      choice[depth] = -1;
      --depth;
      continue;
    }
    Letter l = alphabet[choice[depth]];
    const Frame& f = stack[depth];
    Frame next;
    next.g = heis::vh_mul(f.g, heis::vh_generator(l));
    next.last = l;
    next.tcount = f.tcount + (l == Letter::T ? 1 : 0);
    next.has_tt = f.has_tt || (l == Letter::T && f.last == Letter::T && depth > 0);
    bool bump = (l == Letter::X && f.last == Letter::Xinv) ||
                (l == Letter::Xinv && f.last == Letter::X) ||
                (l == Letter::Y && f.last == Letter::Yinv) ||
                (l == Letter::Yinv && f.last == Letter::Y);
    next.reduced = f.reduced && !(depth > 0 && bump);
    next.weight = f.weight * letter_weight(l);
    int k = depth + 1;
    if (next.g == heis::vh_identity()) {
      out.c.counts[k] += next.weight;
      if (gens.group == Group::VH && next.reduced) {
        out.r.counts[k] += next.weight;
        if (next.tcount >= 8)
          out.r3.counts[k] += next.weight;
        else if (next.tcount == 6 && !next.has_tt)
          out.r2.counts[k] += next.weight;
        else
          out.r1.counts[k] += next.weight;
      }
    }
    stack[k] = std::move(next);
    ++depth;
  }
  return out;
}

// ------------------------------------------------------------- h3 ratio ----

CountTable h3_lazy_prob_table(int max_len, const EngineOptions& opts) {
  return count_closed(GeneratorSet::h3_lazy(), max_len, RingSpec::real(), opts);
}

double h3_lazy_ratio(int ell, const EngineOptions& opts) {
  if (ell < 1) throw std::invalid_argument("h3_lazy_ratio: ell must be >= 1");
  CountTable t = h3_lazy_prob_table(ell, opts);
  return static_cast<double>(ell) * static_cast<double>(ell) * t.reals[ell];
}

}  // namespace vhlab::walk
