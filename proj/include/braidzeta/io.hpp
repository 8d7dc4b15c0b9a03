#ifndef BRAIDZETA_IO_HPP
#define BRAIDZETA_IO_HPP

#include <string>

#include <json.hpp>

#include "braidzeta/rational.hpp"

namespace braidzeta {

// ---------------------------------------------------------------------------
// text rendering: ascending exponents, explicit '*', q^-1 for negative powers
// ---------------------------------------------------------------------------

namespace render {

inline std::string power(const std::string& var, std::int64_t e, bool latex) {
  if (e == 0) return "1";
  if (e == 1) return var;
  if (latex) return var + "^{" + std::to_string(e) + "}";
  return var + "^" + std::to_string(e);
}

inline std::string term(const Int& coef, std::int64_t e, bool latex,
                        const std::string& var = "q") {
  std::string c = coef.get_str();
  if (e == 0) return c;
  std::string p = power(var, e, latex);
  if (coef == 1) return p;
  if (coef == -1) return "-" + p;
  return latex ? c + " " + p : c + "*" + p;
}

inline std::string join_terms(const std::vector<std::string>& terms) {
  std::string out;
  for (const auto& t : terms) {
    if (out.empty()) {
      out = t;
    } else if (!t.empty() && t[0] == '-') {
      out += "-" + t.substr(1);
    } else {
      out += "+" + t;
    }
  }
  return out.empty() ? "0" : out;
}

} // namespace render

inline std::string to_string(const LaurentPoly& p, bool latex = false) {
  if (p.is_zero()) return "0";
  std::vector<std::string> terms;
  for (const auto& [e, c] : p.terms()) terms.push_back(render::term(c, e, latex));
  return render::join_terms(terms);
}

inline std::string to_string(const PolyS& p, bool latex = false) {
  if (p.is_zero()) return "0";
  std::vector<std::string> terms;
  for (std::int64_t d = 0; d <= p.degree(); ++d) {
    const LaurentPoly c = p.coeff(static_cast<size_t>(d));
    if (c.is_zero()) continue;
    if (d == 0) {
      terms.push_back(to_string(c, latex));
      continue;
    }
    std::string spow = render::power("s", d, latex);
    if (c.terms().size() == 1) {
      const auto& [e, coef] = *c.terms().begin();
      std::string qpart = render::term(coef, e, latex);
      if (qpart == "1")
        terms.push_back(spow);
      else if (qpart == "-1")
        terms.push_back("-" + spow);
      else
        terms.push_back(latex ? qpart + " " + spow : qpart + "*" + spow);
    } else {
      std::string inner = "(" + to_string(c, latex) + ")";
      terms.push_back(latex ? inner + " " + spow : inner + "*" + spow);
    }
  }
  return render::join_terms(terms);
}

/// Render num/den; factors of (1-s) in the denominator are pulled out when
/// present, matching the displayed fraction shapes.
inline std::string to_string(const RationalFn& f, bool latex = false) {
  PolyS rest = f.den;
  const PolyS one_minus_s = PolyS::one_minus(LaurentPoly(1));
  long k = 0;
  while (rest.degree() > 0 && rest.eval_at_one().is_zero()) {
    rest = exact_div(rest, one_minus_s);
    ++k;
  }
  std::string den_str;
  bool needs_outer_parens = false;
  if (k > 0) {
    std::string lead = "(1-s)";
    if (k > 1)
      lead += latex ? "^{" + std::to_string(k) + "}" : "^" + std::to_string(k);
    if (rest.degree() == 0 && rest.coeff(0) == LaurentPoly(1)) {
      den_str = lead;
    } else {
      den_str = latex ? lead + " (" + to_string(rest, latex) + ")"
                      : lead + "*(" + to_string(rest, latex) + ")";
      needs_outer_parens = true;
    }
  } else {
    den_str = "(" + to_string(f.den, latex) + ")";
  }
  std::string num_str = to_string(f.num, latex);
  if (latex) return "\\frac{" + num_str + "}{" + den_str + "}";
  if (needs_outer_parens) den_str = "(" + den_str + ")";
  if (num_str.find_first_of("+-", 1) != std::string::npos)
    num_str = "(" + num_str + ")";
  return num_str + " / " + den_str;
}

inline std::string to_string(const RationalQ& f, bool latex = false) {
  std::string num_str = to_string(f.num, latex);
  const std::string den_str = to_string(f.den, latex);
  if (latex) return "\\frac{" + num_str + "}{" + den_str + "}";
  if (num_str.find_first_of("+-", 1) != std::string::npos)
    num_str = "(" + num_str + ")";
  return num_str + " / (" + den_str + ")";
}

// ---------------------------------------------------------------------------
// JSON serialization: LaurentPoly as [[exp, "coef"], ...] sorted by exponent;
// PolyS as [[deg, laurent], ...]
// ---------------------------------------------------------------------------

inline nlohmann::json to_json(const LaurentPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [e, c] : p.terms())
    arr.push_back(nlohmann::json::array({e, c.get_str()}));
  return arr;
}

inline nlohmann::json to_json(const PolyS& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::int64_t d = 0; d <= p.degree(); ++d) {
    const LaurentPoly c = p.coeff(static_cast<size_t>(d));
    if (!c.is_zero()) arr.push_back(nlohmann::json::array({d, to_json(c)}));
  }
  return arr;
}

inline LaurentPoly laurent_from_json(const nlohmann::json& arr) {
  LaurentPoly p;
  for (const auto& pair : arr)
    p.add_term(pair.at(0).get<std::int64_t>(),
               Int(pair.at(1).get<std::string>()));
  return p;
}

inline PolyS polys_from_json(const nlohmann::json& arr) {
  std::vector<LaurentPoly> coeffs;
  for (const auto& pair : arr) {
    const size_t d = pair.at(0).get<size_t>();
    if (coeffs.size() <= d) coeffs.resize(d + 1);
    coeffs[d] = laurent_from_json(pair.at(1));
  }
  return PolyS(std::move(coeffs));
}

inline nlohmann::json to_json(const RationalFn& f) {
  return {{"num", to_json(f.num)}, {"den", to_json(f.den)}};
}

inline nlohmann::json to_json(const RationalQ& f) {
  return {{"num", to_json(f.num)}, {"den", to_json(f.den)}};
}

} // namespace braidzeta

#endif
