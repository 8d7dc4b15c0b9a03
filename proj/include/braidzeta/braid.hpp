#ifndef BRAIDZETA_BRAID_HPP
#define BRAIDZETA_BRAID_HPP

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "braidzeta/errors.hpp"

namespace braidzeta {

/// Braid word: strand count n plus signed one-based generator indices.
/// g = i means sigma_i, g = -i means sigma_i^{-1}. Words only; no
/// braid-relation rewriting.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int n, std::vector<int> w) : strands(n), letters(std::move(w)) {
    if (strands < 1) throw StrandMismatch("strand count must be >= 1");
    for (int g : letters)
      if (g == 0 || std::abs(g) >= strands)
        throw StrandMismatch("generator index out of range for " +
                             std::to_string(strands) + " strands");
  }

  friend bool operator==(const BraidWord& a, const BraidWord& b) {
    return a.strands == b.strands && a.letters == b.letters;
  }

  friend BraidWord operator*(const BraidWord& a, const BraidWord& b) {
    if (a.strands != b.strands) throw StrandMismatch("strand counts differ");
    std::vector<int> w = a.letters;
    w.insert(w.end(), b.letters.begin(), b.letters.end());
    return {a.strands, std::move(w)};
  }
};

inline BraidWord inverse_word(const BraidWord& w) {
  std::vector<int> inv(w.letters.rbegin(), w.letters.rend());
  for (int& g : inv) g = -g;
  return {w.strands, std::move(inv)};
}

inline long exponent_sum(const BraidWord& w) {
  long e = 0;
  for (int g : w.letters) e += g > 0 ? 1 : -1;
  return e;
}

/// One-based permutation on {1,...,n}, stored as the image sequence.
struct Permutation {
  std::vector<int> images;

  explicit Permutation(int n) : images(n) {
    std::iota(images.begin(), images.end(), 1);
  }
  explicit Permutation(std::vector<int> im) : images(std::move(im)) {
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
      if (v < 1 || v > static_cast<int>(images.size()) || seen[v - 1])
        throw Error("not a permutation");
      seen[v - 1] = true;
    }
  }

  int size() const { return static_cast<int>(images.size()); }
  int apply(int x) const { return images[x - 1]; }

  Permutation inverse() const {
    std::vector<int> inv(images.size());
    for (int x = 1; x <= size(); ++x) inv[images[x - 1] - 1] = x;
    return Permutation(std::move(inv));
  }

  void swap_values(int i, int j) { std::swap(images[i - 1], images[j - 1]); }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images == b.images;
  }
};

/// strand tracking: p(x) is where the strand starting at position x ends,
/// so p(uv)(x) = p(v)(p(u)(x))
inline Permutation project_to_permutation(const BraidWord& w) {
  Permutation p(w.strands);
  for (int g : w.letters) {
    const int i = std::abs(g);
    // p := (i, i+1) ∘ p: swap the values i and i+1 wherever they occur
    for (int& v : p.images) {
      if (v == i)
        v = i + 1;
      else if (v == i + 1)
        v = i;
    }
  }
  return p;
}

inline std::vector<std::vector<int>> cycle_decomposition(const Permutation& p) {
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(p.size(), false);
  for (int start = 1; start <= p.size(); ++start) {
    if (seen[start - 1]) continue;
    std::vector<int> cyc;
    int x = start;
    do {
      seen[x - 1] = true;
      cyc.push_back(x);
      x = p.apply(x);
    } while (x != start);
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

inline bool is_knot(const BraidWord& w) {
  return cycle_decomposition(project_to_permutation(w)).size() == 1;
}

/// sigma_{n,m} = (sigma_1 ... sigma_{n-1})^m; negative m uses the inverse word
inline BraidWord torus_braid(int n, long m, bool require_knot = false) {
  if (n < 2) throw Error("torus braid requires n >= 2");
  if (require_knot && std::gcd(static_cast<long>(n), std::abs(m)) != 1)
    throw NotCoprime("gcd(n, m) != 1: closure is not a knot");
  std::vector<int> letters;
  if (m >= 0) {
    for (long r = 0; r < m; ++r)
      for (int i = 1; i < n; ++i) letters.push_back(i);
  } else {
    for (long r = 0; r < -m; ++r)
      for (int i = n - 1; i >= 1; --i) letters.push_back(-i);
  }
  return {n, std::move(letters)};
}

/// Grammar: signed integers separated by whitespace or commas. Without an
/// explicit strand count, n = max|letter| + 1 (minimum 2); empty text
/// requires an explicit count.
inline BraidWord parse_braid_word(const std::string& text, int strands = 0) {
  std::string norm = text;
  std::replace(norm.begin(), norm.end(), ',', ' ');
  std::istringstream in(norm);
  std::vector<int> letters;
  std::string tok;
  while (in >> tok) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad token '" + tok + "' in braid word");
    }
    if (pos != tok.size()) throw ParseError("bad token '" + tok + "' in braid word");
    if (v == 0) throw ParseError("generator index 0 is not allowed");
    letters.push_back(v);
  }
  if (strands == 0) {
    if (letters.empty())
      throw EmptyAmbiguous("empty word without an explicit strand count");
    int mx = 0;
    for (int g : letters) mx = std::max(mx, std::abs(g));
    strands = std::max(mx + 1, 2);
  }
  return {strands, std::move(letters)};
}

inline std::string format_braid_word(const BraidWord& w) {
  std::string out;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w.letters[i]);
  }
  return out;
}

} // namespace braidzeta

#endif
