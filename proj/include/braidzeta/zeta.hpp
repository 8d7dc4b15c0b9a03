#ifndef BRAIDZETA_ZETA_HPP
#define BRAIDZETA_ZETA_HPP

#include <atomic>

#include "braidzeta/burau.hpp"

namespace braidzeta {

/// zeta(s, sigma; beta_{n,q}) = 1 / det(I - beta(sigma) s), or the
/// permutation analogue.
struct ZetaFunction {
  RationalFn value;
  int strands = 1;
  BraidWord word;
};

inline ZetaFunction zeta_braid(const BraidWord& w,
                               const std::atomic<bool>* cancel = nullptr) {
  PolyS den = char_det(burau_matrix(w).matrix, cancel);
  return {RationalFn(PolyS(1), std::move(den)), w.strands, w};
}

/// Euler product over primitive cycles: prod 1/(1 - s^{l(P)}).
inline ZetaFunction zeta_perm(const Permutation& p) {
  PolyS den(1);
  for (const auto& cyc : cycle_decomposition(p))
    den *= PolyS::one_minus(LaurentPoly(1), static_cast<std::int64_t>(cyc.size()));
  return {RationalFn(PolyS(1), std::move(den)), p.size(), BraidWord{p.size(), {}}};
}

/// Residue at s=1: factors (1-s) powers out of num and den algebraically
/// (unreduced representations may share them) and requires the net pole to
/// be simple, then evaluates -N(1)/D(1).
inline RationalQ residue_at_one(const RationalFn& f) {
  const PolyS one_minus_s = PolyS::one_minus(LaurentPoly(1));
  PolyS num = f.num, den = f.den;
  long order = 0;
  while (!num.is_zero() && num.eval_at_one().is_zero()) {
    num = exact_div(num, one_minus_s);
    --order;
  }
  while (den.eval_at_one().is_zero()) {
    den = exact_div(den, one_minus_s);
    ++order;
  }
  if (order < 1) throw NoPoleAtOne("function has no pole at s=1");
  if (order > 1) throw PoleNotSimple("pole at s=1 is not simple");
  return {-num.eval_at_one(), den.eval_at_one()};
}

inline RationalQ residue_at_one(const ZetaFunction& z) {
  return residue_at_one(z.value);
}

/// Alexander polynomial with the unit normalization made explicit:
/// poly = sign · q^{-shift} · raw, with poly(q=1) = 1 and lowest exponent 0.
struct AlexanderPoly {
  LaurentPoly poly;          // normalized
  LaurentPoly raw;           // det(I - beta^r(w)) / [n]_q, unnormalized
  std::int64_t unit_shift = 0;  // raw = sign * q^{unit_shift} * poly
  int unit_sign = 1;
};

/// NotAKnot message carrying the cycle structure of the projection.
inline NotAKnot not_a_knot_error(const BraidWord& w) {
  std::string cycles;
  for (const auto& cyc : cycle_decomposition(project_to_permutation(w))) {
    cycles += cycles.empty() ? "" : " ";
    cycles += std::to_string(cyc.size());
  }
  return NotAKnot("closure has more than one component (cycle lengths: " +
                  cycles + ")");
}

inline AlexanderPoly alexander_poly(const BraidWord& w) {
  if (!is_knot(w)) throw not_a_knot_error(w);
  const LaurentMatrix red = reduced_burau_matrix(w).matrix;
  const size_t d = red.rows();
  LaurentMatrix m(d, d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j)
      m(i, j) = (i == j ? LaurentPoly(1) : LaurentPoly()) - red(i, j);
  LaurentPoly det = det_fraction_free(std::move(m));
  LaurentPoly raw = exact_div(det, q_integer(w.strands));
  AlexanderPoly a;
  a.raw = raw;
  a.unit_shift = raw.min_exp();
  LaurentPoly shifted = raw.shifted(-a.unit_shift);
  Int v1 = shifted.at_one();
  if (v1 == 1) {
    a.unit_sign = 1;
    a.poly = shifted;
  } else if (v1 == -1) {
    a.unit_sign = -1;
    a.poly = -shifted;
  } else {
    throw Error("Alexander normalization failed: value at q=1 is not ±1");
  }
  return a;
}

/// Theorem-level identity: zeta(s, w) = sgn_q(w^{-1}) (-s)^{-n} zeta(1/s, w^{-1}).
inline bool functional_equation_check(const BraidWord& w) {
  const ZetaFunction lhs = zeta_braid(w);
  const BraidWord wi = inverse_word(w);
  RationalFn rhs = reciprocal_transform(zeta_braid(wi).value, w.strands);
  rhs.num *= PolyS(sgn_q(wi));
  return lhs.value == rhs;
}

/// Coefficient-by-coefficient check of the generating-function expression:
/// for 1 <= m <= order, the m-th series coefficient of s·(d/ds) log zeta
/// equals tr(beta(w)^m), exactly in Λ. Order 1 is the log-derivative-at-zero
/// statement.
inline bool trace_series_check(const BraidWord& w, size_t order) {
  if (order < 1) throw Error("trace_series_check requires order >= 1");
  const ZetaFunction z = zeta_braid(w);
  // zeta = num/den; s·(log zeta)' = s·num'/num - s·den'/den. For zeta num = 1.
  RationalFn logderiv(-z.value.den.derivative().times_s_power(1), z.value.den);
  const std::vector<LaurentPoly> coeffs = series_expand(logderiv, order);
  const LaurentMatrix b = burau_matrix(w).matrix;
  LaurentMatrix power = LaurentMatrix::identity(b.rows());
  for (size_t m = 1; m <= order; ++m) {
    power = power * b;
    if (!(coeffs[m] == power.trace())) return false;
  }
  return true;
}

/// Diagram check: zeta at q=1 equals the permutation zeta of the projection.
inline bool q_one_specialization_check(const BraidWord& w) {
  const RationalFn lhs = zeta_braid(w).value.specialize_q_one();
  const RationalFn rhs = zeta_perm(project_to_permutation(w)).value;
  return lhs == rhs;
}

} // namespace braidzeta

#endif
