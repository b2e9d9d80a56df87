#pragma once
// =============================================================================
// Exact truncated power series and P-recursive (holonomic) bookkeeping.
//
// A sequence (a_n) is P-recursive when p_0(n) a_n + ... + p_k(n) a_{n-k} = 0
// for polynomials p_i with p_0 != 0; its generating function is D-finite.
// Tools here: exact series arithmetic (add, mul, compose, reciprocal) over
// mpq, recurrence checking, recurrence guessing by exact nullspace of the
// shifted linear system (no floating point anywhere), even/odd coefficient
// extraction, and the even-index recurrence transform: when p_i = 0 for all
// odd i, b_n = a_{2n} satisfies q_i(n) = p_{2i}(2n) (odd variant: p_{2i}(2n+1)
// for b_n = a_{2n+1}).
//
// cogrowth_check compares the two sides of the weighted cogrowth identity
//     R(z) / (1 - z^2)  =?=  Gamma(z / (1 + z^2)) / (1 + z^2)
// coefficientwise from supplied prefixes of R and Gamma and reports the first
// mismatching order, if any.
// =============================================================================
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace vhlab::series {

struct TruncatedSeries {
  std::vector<mpq_class> coeff;  // coeff[i] multiplies z^i
  int order() const { return static_cast<int>(coeff.size()); }
  static TruncatedSeries from_ints(const std::vector<mpz_class>& v);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;
};

// all binary ops truncate to the shorter operand's order
TruncatedSeries ts_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ts_mul(const TruncatedSeries& a, const TruncatedSeries& b);
// requires b.coeff[0] == 0
TruncatedSeries ts_compose(const TruncatedSeries& a, const TruncatedSeries& b);
// requires a.coeff[0] != 0
TruncatedSeries ts_reciprocal(const TruncatedSeries& a, int order);

TruncatedSeries even_part(const TruncatedSeries& a);  // coeffs of z^{2n}
TruncatedSeries odd_part(const TruncatedSeries& a);   // coeffs of z^{2n+1}

struct Poly {
  std::vector<mpz_class> c;  // c[j] multiplies n^j
  mpz_class eval(const mpz_class& n) const;
  bool is_zero() const;
  int degree() const;  // -1 for zero
  friend bool operator==(const Poly&, const Poly&) = default;
};

struct Recurrence {
  std::vector<Poly> p;  // p[0]..p[k]; p[0] != 0 for a valid recurrence
  int order() const { return static_cast<int>(p.size()) - 1; }
  int degree() const;
  std::string to_json() const;
  static Recurrence from_json(const std::string& text);
};

// nullopt = recurrence holds on all n in [order, len); otherwise first bad n
std::optional<long> check_recurrence(const Recurrence& rec,
                                     const std::vector<mpz_class>& seq);

// Minimal (order, degree) lexicographic exact fit; requires the system for
// (max_order, max_degree) to be overdetermined by >= 5 equations.  The result
// has integer coefficients, content 1, positive leading coefficient of p_0,
// and is re-verified on every supplied term.  even_shifts_only restricts the
// ansatz to p_i = 0 for odd i.
std::optional<Recurrence> guess_recurrence(const std::vector<mpz_class>& seq,
                                           int max_order, int max_degree,
                                           bool even_shifts_only = false);

// requires p_i = 0 for odd i; returns q_i(n) = p_{2i}(2n)   (b_n = a_{2n})
// odd_variant: q_i(n) = p_{2i}(2n+1)                        (b_n = a_{2n+1})
Recurrence extract_even(const Recurrence& rec, bool odd_variant = false);

struct CogrowthReport {
  bool pass = false;
  long first_mismatch = -1;  // order of first mismatch when !pass
  mpq_class lhs, rhs;        // values at the mismatching order
};

// compares both sides through order N (inclusive); prefixes must have >= N+1
// entries
CogrowthReport cogrowth_check(const std::vector<mpz_class>& r_prefix,
                              const std::vector<mpz_class>& gamma_prefix,
                              int n);

}  // namespace vhlab::series
