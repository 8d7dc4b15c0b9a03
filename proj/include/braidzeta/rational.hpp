#ifndef BRAIDZETA_RATIONAL_HPP
#define BRAIDZETA_RATIONAL_HPP

#include <vector>

#include "braidzeta/poly_s.hpp"

namespace braidzeta {

/// Quotient of two Laurent polynomials. Equality is cross-multiplication;
/// no canonical form is maintained.
struct RationalQ {
  LaurentPoly num;
  LaurentPoly den;

  RationalQ() : num(0), den(1) {}
  RationalQ(LaurentPoly n, LaurentPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw Error("RationalQ with zero denominator");
  }
  RationalQ(long n) : num(n), den(1) {}  // NOLINT

  friend bool operator==(const RationalQ& a, const RationalQ& b) {
    return a.num * b.den == b.num * a.den;
  }
  friend RationalQ operator*(const RationalQ& a, const RationalQ& b) {
    return {a.num * b.num, a.den * b.den};
  }
  friend RationalQ operator/(const RationalQ& a, const RationalQ& b) {
    if (b.num.is_zero()) throw Error("division by zero RationalQ");
    return {a.num * b.den, a.den * b.num};
  }
  RationalQ inverse() const { return RationalQ(den, num); }

  /// exact quotient as a LaurentPoly (throws NonExactDivision otherwise)
  LaurentPoly to_laurent() const { return exact_div(num, den); }
};

/// Quotient of two polynomials in s over Λ. Equality is defined by
/// cross-multiplication.
struct RationalFn {
  PolyS num;
  PolyS den;

  RationalFn() : num(1), den(1) {}
  RationalFn(PolyS n, PolyS d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw Error("RationalFn with zero denominator");
  }

  static RationalFn one() { return RationalFn(); }

  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num * b.den == b.num * a.den;
  }
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    return {a.num * b.num, a.den * b.den};
  }
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    if (b.num.is_zero()) throw Error("division by zero RationalFn");
    return {a.num * b.den, a.den * b.num};
  }

  /// multiply by base^exp, exp of either sign
  void multiply_power(const PolyS& base, long exp) {
    if (exp >= 0)
      num *= base.pow(static_cast<unsigned long>(exp));
    else
      den *= base.pow(static_cast<unsigned long>(-exp));
  }

  /// s -> c*s in num and den
  RationalFn substitute_s(const LaurentPoly& c) const {
    return {num.substitute_scaled(c), den.substitute_scaled(c)};
  }

  /// exact evaluation at s = c as a RationalQ
  RationalQ eval(const LaurentPoly& c) const {
    return {num.eval(c), den.eval(c)};
  }

  /// coefficient-wise q -> 1 specialization
  RationalFn specialize_q_one() const {
    auto f = [](const LaurentPoly& p) { return p.specialize_q_one(); };
    return {num.map_coeffs(f), den.map_coeffs(f)};
  }
};

/// First order+1 power-series coefficients of f at s=0, exact over Λ.
/// Requires den(0) to be a unit ±q^k.
inline std::vector<LaurentPoly> series_expand(const RationalFn& f, size_t order) {
  LaurentPoly d0 = f.den.coeff(0);
  if (!d0.is_unit())
    throw NonUnitConstantTerm("denominator constant term is not ±q^k");
  LaurentPoly d0inv = d0.unit_inverse();
  std::vector<LaurentPoly> a(order + 1);
  for (size_t i = 0; i <= order; ++i) {
    LaurentPoly acc = f.num.coeff(i);
    for (size_t j = 1; j <= i; ++j) acc -= f.den.coeff(j) * a[i - j];
    a[i] = acc * d0inv;
  }
  return a;
}

/// s -> (-s)^{-n} f(1/s), cleared to a polynomial quotient.
inline RationalFn reciprocal_transform(const RationalFn& f, long n) {
  const std::int64_t dn = f.num.degree(), dd = f.den.degree();
  PolyS num = f.num.reversed();
  PolyS den = f.den.reversed();
  // (-1)^{-n} = (-1)^n
  if (n % 2 != 0) num = -num;
  const std::int64_t e = dd - dn - n;
  if (e >= 0)
    num = num.times_s_power(e);
  else
    den = den.times_s_power(-e);
  return {num, den};
}

} // namespace braidzeta

#endif
