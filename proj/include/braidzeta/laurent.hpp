#ifndef BRAIDZETA_LAURENT_HPP
#define BRAIDZETA_LAURENT_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "braidzeta/errors.hpp"

namespace braidzeta {

using Int = mpz_class;

/// Laurent polynomial in one variable over arbitrary-precision integers.
/// Canonical form: no stored zero coefficients. The variable is usually q;
/// the same type hosts the half-integer embedding t = q^{1/2} via
/// substitute_power(2).
class LaurentPoly {
public:
  using TermMap = std::map<std::int64_t, Int>;

  LaurentPoly() = default;
  LaurentPoly(long c) { add_term(0, Int(c)); }            // NOLINT: implicit on purpose
  explicit LaurentPoly(Int c) { add_term(0, std::move(c)); }

  static LaurentPoly monomial(Int coef, std::int64_t exp) {
    LaurentPoly p;
    p.add_term(exp, std::move(coef));
    return p;
  }
  /// q^exp
  static LaurentPoly q(std::int64_t exp = 1) { return monomial(Int(1), exp); }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  std::int64_t min_exp() const { return terms_.begin()->first; }   // pre: nonzero
  std::int64_t max_exp() const { return terms_.rbegin()->first; }  // pre: nonzero

  Int coeff(std::int64_t exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
  }

  void add_term(std::int64_t exp, Int coef) {
    if (coef == 0) return;
    auto [it, inserted] = terms_.emplace(exp, coef);
    if (!inserted) {
      it->second += coef;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
  }
  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

  /// bar involution: q -> q^{-1}
  LaurentPoly bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
  }

  /// multiply by q^k
  LaurentPoly shifted(std::int64_t k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
  }

  /// substitute q -> q^k (k nonzero); used for the t-embedding q = t^2
  LaurentPoly substitute_power(std::int64_t k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.add_term(e * k, c);
    return r;
  }

  /// evaluate at q = 1
  Int at_one() const {
    Int s(0);
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }
  /// constant polynomial with value at q=1 (collapses all exponents)
  LaurentPoly specialize_q_one() const { return LaurentPoly(at_one()); }

  /// true iff a single term with coefficient ±1
  bool is_unit() const {
    if (terms_.size() != 1) return false;
    const Int& c = terms_.begin()->second;
    return c == 1 || c == -1;
  }
  LaurentPoly unit_inverse() const {
    if (!is_unit()) throw NonUnitConstantTerm("not a unit of Z[q^{±1}]");
    const auto& [e, c] = *terms_.begin();
    return monomial(c, -e);
  }

  LaurentPoly pow(unsigned long k) const {
    LaurentPoly r(1), base = *this;
    while (k) {
      if (k & 1) r *= base;
      base *= base;
      k >>= 1;
    }
    return r;
  }

  std::complex<double> eval(std::complex<double> x) const {
    std::complex<double> s{0.0, 0.0};
    for (const auto& [e, c] : terms_) {
      std::complex<double> p = std::pow(x, static_cast<double>(e));
      s += c.get_d() * p;
    }
    return s;
  }

  /// Exact division in Z[q^{±1}]. Throws NonExactDivision if b does not
  /// divide a.
  static LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw NonExactDivision("division by zero Laurent polynomial");
    if (a.is_zero()) return LaurentPoly();
    // shift both to ordinary polynomials, long-divide over Z
    const std::int64_t la = a.min_exp(), lb = b.min_exp();
    std::vector<Int> A(static_cast<size_t>(a.max_exp() - la) + 1, Int(0));
    std::vector<Int> B(static_cast<size_t>(b.max_exp() - lb) + 1, Int(0));
    for (const auto& [e, c] : a.terms_) A[static_cast<size_t>(e - la)] = c;
    for (const auto& [e, c] : b.terms_) B[static_cast<size_t>(e - lb)] = c;
    if (A.size() < B.size()) throw NonExactDivision("degree of divisor exceeds dividend");
    std::vector<Int> Q(A.size() - B.size() + 1, Int(0));
    for (size_t i = Q.size(); i-- > 0;) {
      Int& lead = A[i + B.size() - 1];
      if (lead == 0) continue;
      Int qc, rem;
      mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), lead.get_mpz_t(),
                  B.back().get_mpz_t());
      if (rem != 0) throw NonExactDivision("leading coefficient not divisible");
      Q[i] = qc;
      for (size_t j = 0; j < B.size(); ++j) A[i + j] -= qc * B[j];
    }
    for (const auto& c : A)
      if (c != 0) throw NonExactDivision("nonzero remainder");
    LaurentPoly r;
    for (size_t i = 0; i < Q.size(); ++i)
      r.add_term(static_cast<std::int64_t>(i) + la - lb, Q[i]);
    return r;
  }

private:
  TermMap terms_;
};

inline LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  return LaurentPoly::divide_exact(a, b);
}

/// q-integer [n]_q = 1 + q + ... + q^{n-1}
inline LaurentPoly q_integer(long n) {
  if (n <= 0) throw Error("q_integer requires n >= 1");
  LaurentPoly r;
  for (long e = 0; e < n; ++e) r.add_term(e, Int(1));
  return r;
}

} // namespace braidzeta

#endif
