#ifndef BRAIDZETA_TORUS_HPP
#define BRAIDZETA_TORUS_HPP

#include <numeric>
#include <vector>

#include "braidzeta/zeta.hpp"

namespace braidzeta {

/// Coprime pair (n, m) indexing the torus-type braid sigma_{n,m} and the
/// torus knot T(n, m).
struct TorusSpec {
  long n;
  long m;

  TorusSpec(long n_, long m_, bool enforce = true) : n(n_), m(m_) {
    if (n < 2) throw Error("torus spec requires n >= 2");
    if (enforce && std::gcd(n, std::abs(m)) != 1)
      throw NotCoprime("gcd(n, m) != 1");
  }
};

/// zeta(s, sigma_{n,m}) = (1 - q^m s) / ((1-s)(1 - q^{nm} s^n))
inline RationalFn torus_zeta_closed(const TorusSpec& t) {
  PolyS num = PolyS::one_minus(LaurentPoly::q(t.m));
  PolyS den = PolyS::one_minus(LaurentPoly(1)) *
              PolyS::one_minus(LaurentPoly::q(t.n * t.m), t.n);
  return {std::move(num), std::move(den)};
}

/// Delta_{T(n,m)} = (1-q)(1-q^{nm}) / ((1-q^n)(1-q^m)); reduces exactly to a
/// Laurent polynomial.
inline RationalQ torus_alexander(const TorusSpec& t) {
  if (t.m == 0) throw Error("torus Alexander polynomial requires m != 0");
  LaurentPoly num = (LaurentPoly(1) - LaurentPoly::q(1)) *
                    (LaurentPoly(1) - LaurentPoly::q(t.n * t.m));
  LaurentPoly den = (LaurentPoly(1) - LaurentPoly::q(t.n)) *
                    (LaurentPoly(1) - LaurentPoly::q(t.m));
  return {std::move(num), std::move(den)};
}

/// Shift identities: the rational identity
/// (1-s) zeta(s, sigma_{n,m+m'}) = (1-q^{m'}s) zeta(q^{m'}s, sigma_{n,m}),
/// and for mshift != 0 the Alexander extraction
/// Delta_{T(n,m+m')} = zeta(q^{m'}, sigma_{n,m})^{-1} / ([n]_q (1-q^{m'})).
inline bool shift_identity_check(const TorusSpec& t, long mshift) {
  const TorusSpec shifted(t.n, t.m + mshift);
  const LaurentPoly qm = LaurentPoly::q(mshift);

  RationalFn lhs = torus_zeta_closed(shifted);
  lhs.num *= PolyS::one_minus(LaurentPoly(1));
  RationalFn rhs = torus_zeta_closed(t).substitute_s(qm);
  rhs.num *= PolyS::one_minus(qm);
  if (!(lhs == rhs)) return false;

  if (mshift != 0) {
    RationalQ zeta_val = torus_zeta_closed(t).eval(qm);
    RationalQ claimed{zeta_val.den,
                      zeta_val.num * q_integer(t.n) * (LaurentPoly(1) - qm)};
    if (!(claimed == torus_alexander(shifted))) return false;
  }
  return true;
}

/// tr beta(sigma_{n,m}) = 1 - q^m
inline bool torus_trace_check(const TorusSpec& t) {
  const LaurentPoly tr = burau_matrix(torus_braid(static_cast<int>(t.n), t.m)).matrix.trace();
  return tr == LaurentPoly(1) - LaurentPoly::q(t.m);
}

/// Z_q(s; w_1, ..., w_r) = 1 / det(I - (beta(w_1) ⊗ ... ⊗ beta(w_r)) s)
inline RationalFn tensor_zq(const std::vector<BraidWord>& words,
                            size_t dimension_cap = 64,
                            const std::atomic<bool>* cancel = nullptr) {
  if (words.empty()) throw Error("tensor_zq requires at least one braid");
  size_t dim = 1;
  for (const auto& w : words) {
    dim *= static_cast<size_t>(w.strands);
    if (dim > dimension_cap)
      throw DimensionCap("tensor dimension exceeds cap of " +
                         std::to_string(dimension_cap));
  }
  LaurentMatrix k = burau_matrix(words[0]).matrix;
  for (size_t i = 1; i < words.size(); ++i)
    k = kronecker(k, burau_matrix(words[i]).matrix);
  return {PolyS(1), char_det(k, cancel)};
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

/// a_{r,l} = C(r,l) (-1)^l
inline long subset_coeff_a(long r, long l) {
  Int a = binomial(static_cast<unsigned long>(r), static_cast<unsigned long>(l));
  if (l % 2 != 0) a = -a;
  return static_cast<long>(a.get_si());
}

/// b_{r,l,n} = C(r,l) ((n-1)^l - (-1)^l) / n, always an integer
inline long subset_coeff_b(long r, long l, long n) {
  Int p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n - 1),
                static_cast<unsigned long>(l));
  p -= (l % 2 == 0 ? 1 : -1);
  Int b = binomial(static_cast<unsigned long>(r), static_cast<unsigned long>(l)) * p;
  Int quot, rem;
  mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), b.get_mpz_t(), Int(n).get_mpz_t());
  if (rem != 0) throw Error("b_{r,l,n} is not an integer");
  return static_cast<long>(quot.get_si());
}

namespace detail {

inline void require_tensor_power_hypothesis(const TorusSpec& t, long r) {
  Int fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(r));
  fact *= std::abs(t.m);
  Int g;
  mpz_gcd(g.get_mpz_t(), Int(t.n).get_mpz_t(), fact.get_mpz_t());
  if (g != 1) throw NotCoprime("gcd(n, r!·m) != 1");
}

/// proof-side flat product: prod_{l=0..r} (1-q^{lm}s)^{-a} (1-q^{lmn}s^n)^{-b}
inline RationalFn tensor_power_flat(const TorusSpec& t, long r) {
  RationalFn f;
  for (long l = 0; l <= r; ++l) {
    const long a = subset_coeff_a(r, l);
    const long b = subset_coeff_b(r, l, t.n);
    f.multiply_power(PolyS::one_minus(LaurentPoly::q(l * t.m)), -a);
    f.multiply_power(PolyS::one_minus(LaurentPoly::q(l * t.m * t.n), t.n), -b);
  }
  return f;
}

} // namespace detail

/// zeta(s, sigma_{n,m}; beta^{⊗r}) assembled as K_{n,m,r} · prod_l zeta^{b};
/// the proof's flat product form is computed independently and must agree.
inline RationalFn tensor_power_closed(const TorusSpec& t, long r) {
  if (r < 1) throw Error("tensor power requires r >= 1");
  detail::require_tensor_power_hypothesis(t, r);
  RationalFn f;
  for (long l = 1; l <= r; ++l) {
    const long a = subset_coeff_a(r, l);
    const long b = subset_coeff_b(r, l, t.n);
    // K factor ((1-s)/(1-q^{lm}s))^{a+b}
    f.multiply_power(PolyS::one_minus(LaurentPoly(1)), a + b);
    f.multiply_power(PolyS::one_minus(LaurentPoly::q(l * t.m)), -(a + b));
    // zeta(s, sigma_{n,lm})^{b}; gcd(n, lm) = 1 under the hypothesis
    const RationalFn z = torus_zeta_closed(TorusSpec(t.n, l * t.m));
    f.multiply_power(z.num, b);
    f.multiply_power(z.den, -b);
  }
  if (!(f == detail::tensor_power_flat(t, r)))
    throw Error("tensor power assemblies disagree (internal inconsistency)");
  return f;
}

/// Res_{s=1} zeta(s, sigma_{n,m}; beta^{⊗r}) =
/// -1 / ([n]_q^{n^{r-1}} prod_l (1-q^{lm})^{a+b} Delta_{T(n,lm)}^{b})
inline RationalQ tensor_power_residue(const TorusSpec& t, long r) {
  if (r < 1) throw Error("tensor power requires r >= 1");
  detail::require_tensor_power_hypothesis(t, r);
  LaurentPoly num(-1), den(1);
  Int nexp;
  mpz_ui_pow_ui(nexp.get_mpz_t(), static_cast<unsigned long>(t.n),
                static_cast<unsigned long>(r - 1));
  den *= q_integer(t.n).pow(nexp.get_ui());
  for (long l = 1; l <= r; ++l) {
    const long e = subset_coeff_a(r, l) + subset_coeff_b(r, l, t.n);
    const long b = subset_coeff_b(r, l, t.n);
    const LaurentPoly factor = LaurentPoly(1) - LaurentPoly::q(l * t.m);
    if (e >= 0)
      den *= factor.pow(static_cast<unsigned long>(e));
    else
      num *= factor.pow(static_cast<unsigned long>(-e));
    den *= torus_alexander(TorusSpec(t.n, l * t.m))
               .to_laurent()
               .pow(static_cast<unsigned long>(b));
  }
  return {std::move(num), std::move(den)};
}

/// Lemma-level subset identities, verified by explicit enumeration over all
/// subsets of {1,...,r}:
///   sum_{I ⊆ J ⊆ Ω} (-1)^{#J} = (-1)^{#I} [I = Ω], and
///   sum_{∅ ≠ I ⊆ J ⊆ Ω} (-1)^{#J - #I} = 1.
inline bool subset_sum_check(long r) {
  if (r < 1 || r > 12) throw Error("subset_sum_check requires 1 <= r <= 12");
  const unsigned full = (1u << r) - 1u;
  for (unsigned i = 0; i <= full; ++i) {
    long sum = 0;
    for (unsigned j = 0; j <= full; ++j) {
      if ((i & j) != i) continue;  // need I ⊆ J
      sum += __builtin_popcount(j) % 2 == 0 ? 1 : -1;
    }
    const long expected =
        (i == full) ? (__builtin_popcount(i) % 2 == 0 ? 1 : -1) : 0;
    if (sum != expected) return false;
  }
  long total = 0;
  for (unsigned i = 1; i <= full; ++i)
    for (unsigned j = i; j <= full; ++j) {
      if ((i & j) != i) continue;
      total += (__builtin_popcount(j) - __builtin_popcount(i)) % 2 == 0 ? 1 : -1;
    }
  return total == 1;
}

/// Family of torus specs (n_i, m_i) with pairwise coprime n_i and
/// gcd([n(I)], |m(I)|) = 1 for every subset I.
struct TensorFamily {
  std::vector<TorusSpec> specs;

  explicit TensorFamily(std::vector<TorusSpec> s, bool enforce = true)
      : specs(std::move(s)) {
    if (specs.empty()) throw FamilyInvariantViolated("family must be nonempty");
    if (enforce && !invariants_hold())
      throw FamilyInvariantViolated(
          "need pairwise coprime n_i and gcd([n(I)], |m(I)|) = 1 for all I");
  }

  size_t size() const { return specs.size(); }

  bool invariants_hold() const {
    for (size_t i = 0; i < specs.size(); ++i)
      for (size_t j = i + 1; j < specs.size(); ++j)
        if (std::gcd(specs[i].n, specs[j].n) != 1) return false;
    const unsigned full = (1u << specs.size()) - 1u;
    for (unsigned mask = 1; mask <= full; ++mask)
      if (std::gcd(n_product(mask), std::abs(m_sum(mask))) != 1) return false;
    return true;
  }

  /// [n(I)] over the bitmask subset
  long n_product(unsigned mask) const {
    long p = 1;
    for (size_t i = 0; i < specs.size(); ++i)
      if (mask & (1u << i)) p *= specs[i].n;
    return p;
  }
  /// |m(I)| over the bitmask subset
  long m_sum(unsigned mask) const {
    long s = 0;
    for (size_t i = 0; i < specs.size(); ++i)
      if (mask & (1u << i)) s += specs[i].m;
    return s;
  }
};

enum class SubsetAuxKind { T1, T2 };

/// T^{(1)}_I(q^j) = prod_{i in I} (1 - q^{m_i j} + n_i q^{m_i j}),
/// T^{(2)}_I(q^j) = prod_{i in I} (1 - q^{m_i j})
inline LaurentPoly subset_aux(const TensorFamily& f, unsigned mask,
                              SubsetAuxKind kind, long j) {
  LaurentPoly p(1);
  for (size_t i = 0; i < f.size(); ++i) {
    if (!(mask & (1u << i))) continue;
    const LaurentPoly qm = LaurentPoly::q(f.specs[i].m * j);
    LaurentPoly factor = LaurentPoly(1) - qm;
    if (kind == SubsetAuxKind::T1)
      factor += LaurentPoly(static_cast<long>(f.specs[i].n)) * qm;
    p *= factor;
  }
  return p;
}

namespace detail {

inline int subset_pair_sign(unsigned i, unsigned j) {
  return (__builtin_popcount(j) - __builtin_popcount(i)) % 2 == 0 ? 1 : -1;
}

/// proof-side flat product over all I ⊆ J ⊆ Ω, including I = ∅:
/// prod (1 - q^{|m(J)|·[n(I)]} s^{[n(I)]})^{-(-1)^{#J-#I}}
inline RationalFn multi_torus_flat(const TensorFamily& f) {
  const unsigned full = (1u << f.size()) - 1u;
  RationalFn out;
  for (unsigned i = 0; i <= full; ++i)
    for (unsigned j = i; j <= full; ++j) {
      if ((i & j) != i) continue;
      const long np = f.n_product(i);
      const long ms = f.m_sum(j);
      out.multiply_power(PolyS::one_minus(LaurentPoly::q(ms * np), np),
                         -subset_pair_sign(i, j));
    }
  return out;
}

} // namespace detail

/// Z_q(s; sigma_{n_1,m_1}, ..., sigma_{n_r,m_r}) assembled as the nested
/// product prod_{∅≠I⊆J} zeta(s, sigma_{[n(I)],|m(J)|})^{(-1)^{#J-#I}};
/// the proof's flat product form is computed independently and must agree.
inline RationalFn multi_torus_closed(const TensorFamily& f) {
  const unsigned full = (1u << f.size()) - 1u;
  RationalFn out;
  for (unsigned i = 1; i <= full; ++i)
    for (unsigned j = i; j <= full; ++j) {
      if ((i & j) != i) continue;
      // gcd([n(I)], |m(J)|) = 1 follows from [n(I)] | [n(J)] and the family
      // invariant at J
      const RationalFn z =
          torus_zeta_closed(TorusSpec(f.n_product(i), f.m_sum(j)));
      const int sign = detail::subset_pair_sign(i, j);
      out.multiply_power(z.num, sign);
      out.multiply_power(z.den, -sign);
    }
  if (!(out == detail::multi_torus_flat(f)))
    throw Error("multi-torus assemblies disagree (internal inconsistency)");
  return out;
}

/// Res_{s=1} Z_q = -1/[n_1...n_r]_q · prod_{∅≠I⊆J} Delta^{(-1)^{#J-#I+1}}
inline RationalQ multi_torus_residue(const TensorFamily& f) {
  const unsigned full = (1u << f.size()) - 1u;
  LaurentPoly num(-1), den(q_integer(f.n_product(full)));
  for (unsigned i = 1; i <= full; ++i)
    for (unsigned j = i; j <= full; ++j) {
      if ((i & j) != i) continue;
      const LaurentPoly delta =
          torus_alexander(TorusSpec(f.n_product(i), f.m_sum(j))).to_laurent();
      // exponent (-1)^{#J-#I+1}: sign -1 means one factor in the denominator
      if (detail::subset_pair_sign(i, j) > 0)
        den *= delta;
      else
        num *= delta;
    }
  return {std::move(num), std::move(den)};
}

} // namespace braidzeta

#endif
