#ifndef BRAIDZETA_BURAU_HPP
#define BRAIDZETA_BURAU_HPP

#include "braidzeta/braid.hpp"
#include "braidzeta/matrix.hpp"

namespace braidzeta {

/// Image of a braid word under the (un)reduced Burau representation.
struct BurauImage {
  LaurentMatrix matrix;
  int strands = 1;
  bool reduced = false;
};

namespace detail {

/// n x n block for sigma_i^{±1}; inverse letters use the exact inverse
/// block, whose entries live in Λ.
inline LaurentMatrix burau_generator(int n, int g) {
  LaurentMatrix m = LaurentMatrix::identity(static_cast<size_t>(n));
  const size_t i = static_cast<size_t>(std::abs(g)) - 1;
  const LaurentPoly q = LaurentPoly::q();
  if (g > 0) {
    m(i, i) = LaurentPoly(1) - q;
    m(i, i + 1) = LaurentPoly(1);
    m(i + 1, i) = q;
    m(i + 1, i + 1) = LaurentPoly();
  } else {
    const LaurentPoly qinv = LaurentPoly::q(-1);
    m(i, i) = LaurentPoly();
    m(i, i + 1) = qinv;
    m(i + 1, i) = LaurentPoly(1);
    m(i + 1, i + 1) = LaurentPoly(1) - qinv;
  }
  return m;
}

/// (n-1) x (n-1) reduced block for sigma_i^{±1}, three cases
/// i = 1, middle, i = n-1.
inline LaurentMatrix reduced_burau_generator(int n, int g) {
  LaurentMatrix m = LaurentMatrix::identity(static_cast<size_t>(n - 1));
  const int i = std::abs(g);
  const LaurentPoly q = LaurentPoly::q();
  const LaurentPoly qinv = LaurentPoly::q(-1);
  if (g > 0) {
    if (i == 1) {
      m(0, 0) = -q;
      if (n > 2) m(0, 1) = LaurentPoly(1);
    } else if (i == n - 1) {
      m(i - 1, i - 2) = q;
      m(i - 1, i - 1) = -q;
    } else {
      m(i - 1, i - 2) = q;
      m(i - 1, i - 1) = -q;
      m(i - 1, i) = LaurentPoly(1);
    }
  } else {
    if (i == 1) {
      m(0, 0) = -qinv;
      if (n > 2) m(0, 1) = qinv;
    } else if (i == n - 1) {
      m(i - 1, i - 2) = LaurentPoly(1);
      m(i - 1, i - 1) = -qinv;
    } else {
      m(i - 1, i - 2) = LaurentPoly(1);
      m(i - 1, i - 1) = -qinv;
      m(i - 1, i) = qinv;
    }
  }
  return m;
}

} // namespace detail

inline BurauImage burau_matrix(const BraidWord& w) {
  LaurentMatrix m = LaurentMatrix::identity(static_cast<size_t>(w.strands));
  for (int g : w.letters) m = m * detail::burau_generator(w.strands, g);
  return {std::move(m), w.strands, false};
}

inline BurauImage reduced_burau_matrix(const BraidWord& w) {
  if (w.strands < 2) throw Error("reduced Burau requires n >= 2");
  LaurentMatrix m = LaurentMatrix::identity(static_cast<size_t>(w.strands - 1));
  for (int g : w.letters) m = m * detail::reduced_burau_generator(w.strands, g);
  return {std::move(m), w.strands, true};
}

/// det(beta(w)) = (-q)^{exponent_sum(w)}
inline LaurentPoly sgn_q(const BraidWord& w) {
  const long e = exponent_sum(w);
  return LaurentPoly::monomial(Int(e % 2 == 0 ? 1 : -1), e);
}

/// 0/1 permutation matrix, entries as LaurentPoly: row i carries 1 at
/// column p(i), so the matrix of u*v is the product in word order.
inline LaurentMatrix permutation_rep_matrix(const Permutation& p) {
  const size_t n = static_cast<size_t>(p.size());
  LaurentMatrix m(n, n);
  for (size_t i = 0; i < n; ++i)
    m(i, static_cast<size_t>(p.apply(static_cast<int>(i) + 1)) - 1) = LaurentPoly(1);
  return m;
}

/// Conjugator X with X^{-1} beta(w) X = 1 ⊕ beta^r(w): first column
/// (1, q, ..., q^{n-1}), remaining columns the unit bidiagonal
/// X[j-1][j] = -1, X[j][j] = 1.
inline LaurentMatrix decomposition_conjugator(int n) {
  LaurentMatrix x(static_cast<size_t>(n), static_cast<size_t>(n));
  for (size_t i = 0; i < static_cast<size_t>(n); ++i)
    x(i, 0) = LaurentPoly::q(static_cast<std::int64_t>(i));
  for (size_t j = 1; j < static_cast<size_t>(n); ++j) {
    x(j, j) = LaurentPoly(1);
    x(j - 1, j) = LaurentPoly(-1);
  }
  return x;
}

/// Verifies beta(w) · X = X · (1 ⊕ beta^r(w)) exactly; equivalent to the
/// conjugation identity since X is invertible.
inline bool decomposition_check(const BraidWord& w) {
  if (w.strands < 2) throw Error("decomposition requires n >= 2");
  const size_t n = static_cast<size_t>(w.strands);
  const LaurentMatrix x = decomposition_conjugator(w.strands);
  const LaurentMatrix full = burau_matrix(w).matrix;
  const LaurentMatrix red = reduced_burau_matrix(w).matrix;
  LaurentMatrix block(n, n);
  block(0, 0) = LaurentPoly(1);
  for (size_t i = 0; i + 1 < n; ++i)
    for (size_t j = 0; j + 1 < n; ++j) block(i + 1, j + 1) = red(i, j);
  return full * x == x * block;
}

/// Squier form Ω_n^r over Z[t^{±1}], t = q^{1/2}: diagonal t + t^{-1},
/// superdiagonal -t^{-1}, subdiagonal -t.
inline LaurentMatrix squier_omega(int n) {
  if (n < 2) throw Error("Squier form requires n >= 2");
  const size_t d = static_cast<size_t>(n - 1);
  LaurentMatrix omega(d, d);
  const LaurentPoly diag = LaurentPoly::q(1) + LaurentPoly::q(-1);
  for (size_t i = 0; i < d; ++i) {
    omega(i, i) = diag;
    if (i + 1 < d) omega(i, i + 1) = -LaurentPoly::q(-1);
    if (i > 0) omega(i, i - 1) = -LaurentPoly::q(1);
  }
  return omega;
}

/// Exact Squier unitarity over Z[q^{±1/2}]: with q = t^2, verifies
/// beta^r(w)* · Ω · beta^r(w) = Ω, where * is transpose composed with the
/// bar involution t -> t^{-1}. Column-vector convention puts the starred
/// factor on the left.
inline bool squier_check(const BraidWord& w) {
  const LaurentMatrix omega = squier_omega(w.strands);
  const LaurentMatrix red_t =
      reduced_burau_matrix(w).matrix.map([](const LaurentPoly& p) {
        return p.substitute_power(2);  // q = t^2
      });
  const LaurentMatrix star =
      red_t.transpose().map([](const LaurentPoly& p) { return p.bar(); });
  return star * omega * red_t == omega;
}

} // namespace braidzeta

#endif
