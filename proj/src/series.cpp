#include "vhlab/series.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace vhlab::series {

TruncatedSeries TruncatedSeries::from_ints(const std::vector<mpz_class>& v) {
  TruncatedSeries s;
  s.coeff.reserve(v.size());
  for (const auto& x : v) s.coeff.emplace_back(x);
  return s;
}

TruncatedSeries ts_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r;
  std::size_t n = std::min(a.coeff.size(), b.coeff.size());
  r.coeff.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.coeff[i] = a.coeff[i] + b.coeff[i];
  return r;
}

TruncatedSeries ts_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r;
  std::size_t n = std::min(a.coeff.size(), b.coeff.size());
  r.coeff.assign(n, mpq_class(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeff[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j)
      r.coeff[i + j] += a.coeff[i] * b.coeff[j];
  }
  return r;
}

TruncatedSeries ts_compose(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (b.coeff.empty() || b.coeff[0] != 0)
    throw std::invalid_argument("ts_compose: inner series must have zero constant term");
  std::size_t n = std::min(a.coeff.size(), b.coeff.size());
  TruncatedSeries acc;  // Horner from the top coefficient down
  acc.coeff.assign(n, mpq_class(0));
  TruncatedSeries bt = b;
  bt.coeff.resize(n);
  for (std::size_t i = a.coeff.size(); i-- > 0;) {
    acc = ts_mul(acc, bt);
    if (acc.coeff.size() < n) acc.coeff.resize(n);
    if (i < n) acc.coeff[0] += a.coeff[i];
  }
  acc.coeff.resize(n);
  return acc;
}

TruncatedSeries ts_reciprocal(const TruncatedSeries& a, int order) {
  if (order < 0) throw std::invalid_argument("ts_reciprocal: negative order");
  if (a.coeff.empty() || a.coeff[0] == 0)
    throw std::invalid_argument("ts_reciprocal: constant term must be nonzero");
  TruncatedSeries r;
  r.coeff.assign(order, mpq_class(0));
  if (order == 0) return r;
  mpq_class inv0 = 1 / a.coeff[0];
  r.coeff[0] = inv0;
  for (int k = 1; k < order; ++k) {
    mpq_class s = 0;
    for (int i = 1; i <= k; ++i) {
      mpq_class ai = i < static_cast<int>(a.coeff.size()) ? a.coeff[i] : mpq_class(0);
      s += ai * r.coeff[k - i];
    }
    r.coeff[k] = -inv0 * s;
  }
  return r;
}

TruncatedSeries even_part(const TruncatedSeries& a) {
  TruncatedSeries r;
  for (std::size_t i = 0; i < a.coeff.size(); i += 2) r.coeff.push_back(a.coeff[i]);
  return r;
}

TruncatedSeries odd_part(const TruncatedSeries& a) {
  TruncatedSeries r;
  for (std::size_t i = 1; i < a.coeff.size(); i += 2) r.coeff.push_back(a.coeff[i]);
  return r;
}

mpz_class Poly::eval(const mpz_class& n) const {
  mpz_class acc = 0;
  for (std::size_t j = c.size(); j-- > 0;) acc = acc * n + c[j];
  return acc;
}

bool Poly::is_zero() const {
  for (const auto& x : c)
    if (x != 0) return false;
  return true;
}

int Poly::degree() const {
  for (std::size_t j = c.size(); j-- > 0;)
    if (c[j] != 0) return static_cast<int>(j);
  return -1;
}

int Recurrence::degree() const {
  int d = -1;
  for (const auto& poly : p) d = std::max(d, poly.degree());
  return d;
}

std::string Recurrence::to_json() const {
  nlohmann::json j;
  j["order"] = order();
  j["degree"] = degree();
  auto& arr = j["p"] = nlohmann::json::array();
  for (const auto& poly : p) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& coeff : poly.c) row.push_back(coeff.get_str());
    arr.push_back(row);
  }
  return j.dump();
}

Recurrence Recurrence::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  const auto& arr = j.is_array() ? j : j.at("p");
  Recurrence rec;
  for (const auto& row : arr) {
    Poly poly;
    for (const auto& v : row) {
      if (v.is_string())
        poly.c.emplace_back(v.get<std::string>());
      else
        poly.c.emplace_back(static_cast<long>(v.get<long long>()));
    }
    rec.p.push_back(std::move(poly));
  }
  if (rec.p.empty()) throw std::invalid_argument("recurrence: empty");
  return rec;
}

std::optional<long> check_recurrence(const Recurrence& rec,
                                     const std::vector<mpz_class>& seq) {
  int k = rec.order();
  if (k < 0 || rec.p[0].is_zero())
    throw std::invalid_argument("check_recurrence: p0 must be nonzero");
  for (long n = k; n < static_cast<long>(seq.size()); ++n) {
    mpz_class s = 0;
    for (int i = 0; i <= k; ++i) s += rec.p[i].eval(n) * seq[n - i];
    if (s != 0) return n;
  }
  return std::nullopt;
}

namespace {

// exact nullspace basis of the E x U matrix (row-major), reduced
// deterministically; returns basis vectors of the solution space
std::vector<std::vector<mpq_class>> nullspace(std::vector<std::vector<mpq_class>> m,
                                              std::size_t cols) {
  std::size_t rows = m.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    mpq_class inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      mpq_class factor = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<mpq_class>> basis;
  for (std::size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<mpq_class> v(cols, mpq_class(0));
    v[fc] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][fc];
    basis.push_back(std::move(v));
  }
  return basis;
}

Recurrence build_normalized(const std::vector<mpq_class>& sol,
                            const std::vector<int>& shifts, int degree) {
  // clear denominators, divide by content, make p0's leading coefficient > 0
  mpz_class lcm = 1;
  for (const auto& q : sol) {
    mpz_class den = q.get_den();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<mpz_class> ints;
  ints.reserve(sol.size());
  mpz_class content = 0;
  for (const auto& q : sol) {
    mpz_class v = q.get_num() * (lcm / q.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  if (content != 0)
    for (auto& v : ints) v /= content;
  int max_shift = shifts.back();
  Recurrence rec;
  rec.p.assign(max_shift + 1, Poly{std::vector<mpz_class>(degree + 1, mpz_class(0))});
  std::size_t idx = 0;
  for (int shift : shifts)
    for (int j = 0; j <= degree; ++j) rec.p[shift].c[j] = ints[idx++];
  // sign: leading coefficient of p0 positive
  int lead = rec.p[0].degree();
  if (lead >= 0 && rec.p[0].c[lead] < 0)
    for (auto& poly : rec.p)
      for (auto& coeff : poly.c) coeff = -coeff;
  return rec;
}

}  // namespace

std::optional<Recurrence> guess_recurrence(const std::vector<mpz_class>& seq,
                                           int max_order, int max_degree,
                                           bool even_shifts_only) {
  if (max_order < 0 || max_degree < 0)
    throw std::invalid_argument("guess_recurrence: negative bounds");
  long len = static_cast<long>(seq.size());
  long max_unknowns = static_cast<long>(max_order + 1) * (max_degree + 1);
  if (len - max_order < max_unknowns + 5)
    throw std::invalid_argument(
        "guess_recurrence: not enough terms for the requested bounds "
        "(need >= 5 surplus equations)");
  int order_step = even_shifts_only ? 2 : 1;
  for (int k = 0; k <= max_order; k += order_step) {
    for (int d = 0; d <= max_degree; ++d) {
      std::vector<int> shifts;
      for (int i = 0; i <= k; i += even_shifts_only ? 2 : 1) shifts.push_back(i);
      std::size_t cols = shifts.size() * static_cast<std::size_t>(d + 1);
      std::vector<std::vector<mpq_class>> mat;
      mat.reserve(len - k);
      for (long n = k; n < len; ++n) {
        std::vector<mpq_class> row;
        row.reserve(cols);
        mpz_class nz(n);
        for (int shift : shifts) {
          mpz_class npow = 1;
          for (int j = 0; j <= d; ++j) {
            row.emplace_back(npow * seq[n - shift]);
            npow *= nz;
          }
        }
        mat.push_back(std::move(row));
      }
      auto basis = nullspace(std::move(mat), cols);
      for (const auto& sol : basis) {
        bool p0_nonzero = false;
        for (int j = 0; j <= d; ++j)
          if (sol[j] != 0) p0_nonzero = true;
        if (!p0_nonzero) continue;
        Recurrence rec = build_normalized(sol, shifts, d);
        if (!check_recurrence(rec, seq).has_value()) return rec;
      }
    }
  }
  return std::nullopt;
}

Recurrence extract_even(const Recurrence& rec, bool odd_variant) {
  int k = rec.order();
  for (int i = 1; i <= k; i += 2)
    if (!rec.p[i].is_zero())
      throw std::invalid_argument("extract_even: recurrence has odd shifts");
  Recurrence out;
  for (int i = 0; i <= k; i += 2) {
    // q(n) = p(2n + beta): expand sum_j c_j (2n + beta)^j
    const Poly& p = rec.p[i];
    int deg = std::max(p.degree(), 0);
    Poly q{std::vector<mpz_class>(deg + 1, mpz_class(0))};
    long beta = odd_variant ? 1 : 0;
    // binomial expansion, exact
    for (int j = 0; j <= p.degree(); ++j) {
      if (p.c[j] == 0) continue;
      // (2n + beta)^j = sum_t C(j,t) (2n)^t beta^(j-t)
      for (int t = 0; t <= j; ++t) {
        mpz_class pow2, betapow, bc;
        mpz_ui_pow_ui(pow2.get_mpz_t(), 2, t);
        mpz_ui_pow_ui(betapow.get_mpz_t(), static_cast<unsigned long>(beta),
                      static_cast<unsigned long>(j - t));
        mpz_bin_uiui(bc.get_mpz_t(), j, t);
        q.c[t] += p.c[j] * bc * pow2 * betapow;
      }
    }
    out.p.push_back(std::move(q));
  }
  return out;
}

CogrowthReport cogrowth_check(const std::vector<mpz_class>& r_prefix,
                              const std::vector<mpz_class>& gamma_prefix,
                              int n) {
  if (n < 0) throw std::invalid_argument("cogrowth_check: negative order");
  std::size_t need = static_cast<std::size_t>(n) + 1;
  if (r_prefix.size() < need || gamma_prefix.size() < need)
    throw std::invalid_argument("cogrowth_check: prefixes shorter than order+1");
  int m = n + 1;
  TruncatedSeries R = TruncatedSeries::from_ints(r_prefix);
  R.coeff.resize(m);
  TruncatedSeries G = TruncatedSeries::from_ints(gamma_prefix);
  G.coeff.resize(m);
  TruncatedSeries one_minus_z2, one_plus_z2;
  one_minus_z2.coeff.assign(m, mpq_class(0));
  one_plus_z2.coeff.assign(m, mpq_class(0));
  one_minus_z2.coeff[0] = 1;
  one_plus_z2.coeff[0] = 1;
  if (m > 2) {
    one_minus_z2.coeff[2] = -1;
    one_plus_z2.coeff[2] = 1;
  }
  TruncatedSeries lhs = ts_mul(R, ts_reciprocal(one_minus_z2, m));
  TruncatedSeries w = ts_reciprocal(one_plus_z2, m);  // 1/(1+z^2)
  // w := z/(1+z^2)
  w.coeff.insert(w.coeff.begin(), mpq_class(0));
  w.coeff.resize(m);
  TruncatedSeries rhs = ts_mul(ts_compose(G, w), ts_reciprocal(one_plus_z2, m));
  CogrowthReport rep;
  for (int i = 0; i <= n; ++i) {
    if (lhs.coeff[i] != rhs.coeff[i]) {
      rep.pass = false;
      rep.first_mismatch = i;
      rep.lhs = lhs.coeff[i];
      rep.rhs = rhs.coeff[i];
      return rep;
    }
  }
  rep.pass = true;
  return rep;
}

}  // namespace vhlab::series
