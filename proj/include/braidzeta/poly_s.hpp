#ifndef BRAIDZETA_POLY_S_HPP
#define BRAIDZETA_POLY_S_HPP

#include <vector>

#include "braidzeta/laurent.hpp"

namespace braidzeta {

/// Polynomial in s with LaurentPoly coefficients, dense ascending storage.
/// Trailing zero coefficients are trimmed, so the leading coefficient of a
/// nonzero polynomial is nonzero.
class PolyS {
public:
  PolyS() = default;
  PolyS(LaurentPoly c) { coeffs_.push_back(std::move(c)); trim(); }  // NOLINT
  PolyS(long c) : PolyS(LaurentPoly(c)) {}                           // NOLINT
  explicit PolyS(std::vector<LaurentPoly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static PolyS s(std::int64_t k = 1) {
    std::vector<LaurentPoly> c(static_cast<size_t>(k) + 1);
    c.back() = LaurentPoly(1);
    return PolyS(std::move(c));
  }
  /// 1 - c*s^k
  static PolyS one_minus(LaurentPoly c, std::int64_t k = 1) {
    std::vector<LaurentPoly> v(static_cast<size_t>(k) + 1);
    v.front() = LaurentPoly(1);
    v.back() = -c;
    return PolyS(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// degree of the zero polynomial is -1
  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }
  LaurentPoly coeff(size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : LaurentPoly();
  }

  friend PolyS operator+(const PolyS& a, const PolyS& b) {
    std::vector<LaurentPoly> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return PolyS(std::move(c));
  }
  friend PolyS operator-(const PolyS& a, const PolyS& b) {
    std::vector<LaurentPoly> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return PolyS(std::move(c));
  }
  PolyS operator-() const {
    PolyS r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend PolyS operator*(const PolyS& a, const PolyS& b) {
    if (a.is_zero() || b.is_zero()) return PolyS();
    std::vector<LaurentPoly> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j)
        c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return PolyS(std::move(c));
  }
  PolyS& operator+=(const PolyS& o) { return *this = *this + o; }
  PolyS& operator-=(const PolyS& o) { return *this = *this - o; }
  PolyS& operator*=(const PolyS& o) { return *this = *this * o; }

  friend bool operator==(const PolyS& a, const PolyS& b) {
    return a.coeffs_ == b.coeffs_;
  }

  PolyS pow(unsigned long k) const {
    PolyS r(1), base = *this;
    while (k) {
      if (k & 1) r *= base;
      base *= base;
      k >>= 1;
    }
    return r;
  }

  /// evaluate at s = c, exactly in Z[q^{±1}]
  LaurentPoly eval(const LaurentPoly& c) const {
    LaurentPoly r;
    for (size_t i = coeffs_.size(); i-- > 0;) r = r * c + coeffs_[i];
    return r;
  }
  LaurentPoly eval_at_one() const {
    LaurentPoly r;
    for (const auto& c : coeffs_) r += c;
    return r;
  }

  /// d/ds
  PolyS derivative() const {
    if (coeffs_.size() <= 1) return PolyS();
    std::vector<LaurentPoly> c(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i)
      c[i - 1] = coeffs_[i] * LaurentPoly(static_cast<long>(i));
    return PolyS(std::move(c));
  }

  /// s -> c*s
  PolyS substitute_scaled(const LaurentPoly& c) const {
    std::vector<LaurentPoly> out(coeffs_.size());
    LaurentPoly p(1);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
      out[i] = coeffs_[i] * p;
      p *= c;
    }
    return PolyS(std::move(out));
  }

  /// coefficient sequence reversed: s^deg * p(1/s)
  PolyS reversed() const {
    std::vector<LaurentPoly> c(coeffs_.rbegin(), coeffs_.rend());
    return PolyS(std::move(c));
  }

  PolyS times_s_power(std::int64_t k) const {
    if (is_zero()) return PolyS();
    std::vector<LaurentPoly> c(coeffs_.size() + static_cast<size_t>(k));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i + static_cast<size_t>(k)] = coeffs_[i];
    return PolyS(std::move(c));
  }

  /// apply fn to every Laurent coefficient (e.g. q -> 1 specialization)
  template <typename Fn>
  PolyS map_coeffs(Fn&& fn) const {
    std::vector<LaurentPoly> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = fn(coeffs_[i]);
    return PolyS(std::move(c));
  }

  /// Exact division in Λ[s]: throws NonExactDivision on nonzero remainder
  /// (including a non-exact leading-coefficient division).
  static PolyS divide_exact(const PolyS& a, const PolyS& b) {
    if (b.is_zero()) throw NonExactDivision("division by zero polynomial");
    if (a.is_zero()) return PolyS();
    if (a.coeffs_.size() < b.coeffs_.size())
      throw NonExactDivision("degree of divisor exceeds dividend");
    std::vector<LaurentPoly> rem = a.coeffs_;
    std::vector<LaurentPoly> quot(a.coeffs_.size() - b.coeffs_.size() + 1);
    for (size_t i = quot.size(); i-- > 0;) {
      LaurentPoly& lead = rem[i + b.coeffs_.size() - 1];
      if (lead.is_zero()) continue;
      LaurentPoly qc = exact_div(lead, b.coeffs_.back());
      quot[i] = qc;
      for (size_t j = 0; j < b.coeffs_.size(); ++j)
        rem[i + j] -= qc * b.coeffs_[j];
    }
    for (const auto& c : rem)
      if (!c.is_zero()) throw NonExactDivision("nonzero remainder in Λ[s]");
    return PolyS(std::move(quot));
  }

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
  std::vector<LaurentPoly> coeffs_;
};

inline PolyS exact_div(const PolyS& a, const PolyS& b) {
  return PolyS::divide_exact(a, b);
}

} // namespace braidzeta

#endif
