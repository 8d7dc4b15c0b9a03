#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "braidzeta/io.hpp"
#include "braidzeta/numeric.hpp"
#include "braidzeta/torus.hpp"

using namespace braidzeta;

namespace {

enum ExitCode {
  kOk = 0,
  kVerificationFailure = 1,
  kParseError = 2,
  kComputationError = 3,
  kNotAKnot = 4,
  kHypothesisViolation = 5,
};

struct Options {
  std::string format = "text";
  int strands = 0;
  double tol = 1e-8;
  size_t cap = 64;
  bool force = false;
  size_t order = 12;
  unsigned seed = 20240611;
  bool check = false;
};

void emit(const std::string& kind, const RationalFn& f, const Options& opt,
          nlohmann::json meta = nlohmann::json::object()) {
  if (opt.format == "json") {
    nlohmann::json j = to_json(f);
    j["kind"] = kind;
    j["meta"] = std::move(meta);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << to_string(f, opt.format == "latex") << "\n";
  }
}

void emit(const std::string& kind, const RationalQ& f, const Options& opt,
          nlohmann::json meta = nlohmann::json::object()) {
  if (opt.format == "json") {
    nlohmann::json j = to_json(f);
    j["kind"] = kind;
    j["meta"] = std::move(meta);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << to_string(f, opt.format == "latex") << "\n";
  }
}

void emit_poly(const std::string& kind, const LaurentPoly& p, const Options& opt,
               nlohmann::json meta = nlohmann::json::object()) {
  if (opt.format == "json") {
    nlohmann::json j;
    j["kind"] = kind;
    j["num"] = to_json(PolyS(p));
    j["den"] = to_json(PolyS(1));
    j["meta"] = std::move(meta);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << to_string(p, opt.format == "latex") << "\n";
  }
}

std::vector<TorusSpec> parse_tensor_specs(const std::string& text, bool enforce) {
  std::istringstream in(text);
  std::vector<TorusSpec> specs;
  std::string tok;
  while (in >> tok) {
    const size_t comma = tok.find(',');
    if (comma == std::string::npos)
      throw ParseError("tensor spec '" + tok + "' is not of the form n,m");
    try {
      size_t p1 = 0, p2 = 0;
      const long n = std::stol(tok.substr(0, comma), &p1);
      const long m = std::stol(tok.substr(comma + 1), &p2);
      if (p1 != comma || p2 != tok.size() - comma - 1)
        throw ParseError("tensor spec '" + tok + "' is not of the form n,m");
      specs.emplace_back(n, m, enforce);
    } catch (const std::invalid_argument&) {
      throw ParseError("tensor spec '" + tok + "' is not of the form n,m");
    } catch (const std::out_of_range&) {
      throw ParseError("tensor spec '" + tok + "' is out of range");
    }
  }
  if (specs.empty()) throw ParseError("empty tensor spec list");
  return specs;
}

BraidWord random_word(std::mt19937& rng, int n, int len) {
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<int> letters;
  for (int i = 0; i < len; ++i) letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return {n, std::move(letters)};
}

int report_suite(const std::string& name, int pass, int total,
                 const std::string& first_failure) {
  std::cout << name << ": " << pass << "/" << total << " pass\n";
  if (pass != total) {
    std::cerr << "first counterexample: " << first_failure << "\n";
    return kVerificationFailure;
  }
  return kOk;
}

int run_verify(const std::string& suite, const Options& opt, int max_len,
               int samples, double theta, long r) {
  std::mt19937 rng(opt.seed);
  const int n_max = opt.strands > 0 ? opt.strands : 5;
  int pass = 0, total = 0;
  std::string first_failure;
  auto record = [&](bool ok, const std::string& what) {
    ++total;
    if (ok)
      ++pass;
    else if (first_failure.empty())
      first_failure = what;
  };

  if (suite == "funceq" || suite == "qone" || suite == "series" ||
      suite == "squier") {
    for (int t = 0; t < samples; ++t) {
      const int n = 2 + t % (n_max - 1);
      BraidWord w = random_word(rng, n, 1 + t % max_len);
      bool ok = false;
      if (suite == "funceq")
        ok = functional_equation_check(w);
      else if (suite == "qone")
        ok = q_one_specialization_check(w);
      else if (suite == "series")
        ok = trace_series_check(w, opt.order);
      else
        ok = squier_check(w);
      record(ok, "word '" + format_braid_word(w) + "' on " +
                     std::to_string(n) + " strands");
    }
  } else if (suite == "rh") {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int t = 0; t < samples; ++t) {
      const int n = 2 + t % (n_max - 1);
      BraidWord w = random_word(rng, n, 1 + t % max_len);
      const double th = theta != 0.0 ? theta : unit(rng) * (2.0 * M_PI / n) * 0.999;
      SpectrumReport rep = rh_check(w, UnitCirclePoint{th}, opt.tol);
      record(!rep.in_window || rep.rh_satisfied,
             "word '" + format_braid_word(w) + "' theta=" + std::to_string(th));
    }
  } else if (suite == "thm31") {
    for (long n = 2; n <= 6; ++n)
      for (long m = -7; m <= 7; ++m) {
        if (std::gcd(n, std::abs(m)) != 1) continue;
        const bool ok = torus_zeta_closed(TorusSpec(n, m)) ==
                        zeta_braid(torus_braid(static_cast<int>(n), m)).value;
        record(ok, "(n,m)=(" + std::to_string(n) + "," + std::to_string(m) + ")");
      }
  } else if (suite == "thm32") {
    for (auto [n, m, rr] :
         {std::tuple<long, long, long>{3, 1, 2}, {5, 1, 2}, {5, 2, 2}, {7, 1, 3}}) {
      bool ok = true;
      try {
        const RationalFn closed = tensor_power_closed(TorusSpec(n, m), rr);
        ok = tensor_power_residue(TorusSpec(n, m), rr) == residue_at_one(closed);
        const size_t dim = static_cast<size_t>(std::pow(n, rr));
        if (ok && dim <= opt.cap) {
          std::vector<BraidWord> copies(
              static_cast<size_t>(rr), torus_braid(static_cast<int>(n), m));
          ok = closed == tensor_zq(copies, opt.cap);
        }
      } catch (const Error&) {
        ok = false;
      }
      record(ok, "(n,m,r)=(" + std::to_string(n) + "," + std::to_string(m) +
                     "," + std::to_string(rr) + ")");
    }
  } else if (suite == "thm33") {
    TensorFamily f({TorusSpec(2, 1), TorusSpec(3, 4)});
    bool ok = false;
    try {
      const RationalFn closed = multi_torus_closed(f);
      ok = closed == tensor_zq({torus_braid(2, 1), torus_braid(3, 4)}, opt.cap) &&
           multi_torus_residue(f) == residue_at_one(closed);
    } catch (const Error&) {
    }
    record(ok, "family (2,1),(3,4)");
  } else if (suite == "lemma31") {
    for (long rr = 1; rr <= (r > 0 ? r : 8); ++rr)
      record(subset_sum_check(rr), "r=" + std::to_string(rr));
  } else {
    throw ParseError("unknown verify suite '" + suite + "'");
  }
  return report_suite(suite, pass, total, first_failure);
}

int dispatch(int argc, char** argv) {
  CLI::App app{"braid zeta functions via the Burau representation"};
  app.require_subcommand(1);
  Options opt;

  std::string word_text;
  long torus_n = 0, torus_m = 0;
  std::string mode, tensor_specs, suite;
  int max_len = 12, samples = 50;
  double theta = 0.0;
  long r_param = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    cmd->add_option("--tol", opt.tol, "numeric tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--cap", opt.cap, "tensor dimension cap")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--force", opt.force, "compute despite violated hypotheses");
    cmd->add_option("--order", opt.order, "series order");
    cmd->add_option("--seed", opt.seed, "seed for randomized corpora");
    cmd->add_flag("--check", opt.check, "compare independent computations");
  };

  CLI::App* zeta = app.add_subcommand("zeta", "zeta function of a braid word");
  zeta->add_option("word", word_text, "braid word");
  zeta->add_option("--strands", opt.strands, "strand count");
  add_common(zeta);

  CLI::App* alexander =
      app.add_subcommand("alexander", "Alexander polynomial of a knot closure");
  alexander->add_option("word", word_text, "braid word");
  alexander->add_option("--strands", opt.strands, "strand count");
  add_common(alexander);

  CLI::App* residue = app.add_subcommand("residue", "residue of zeta at s=1");
  residue->add_option("word", word_text, "braid word");
  residue->add_option("--strands", opt.strands, "strand count");
  add_common(residue);

  CLI::App* torus = app.add_subcommand("torus", "closed forms for torus braids");
  torus->add_option("n", torus_n, "strand count")->required();
  torus->add_option("m", torus_m, "twist count")->required();
  torus->add_option("mode", mode, "zeta | alexander | residue")
      ->required()
      ->check(CLI::IsMember({"zeta", "alexander", "residue"}));
  add_common(torus);

  CLI::App* tensor =
      app.add_subcommand("tensor", "tensor-product zeta of torus braids");
  tensor->add_option("specs", tensor_specs, "space-separated n,m pairs")->required();
  tensor->add_option("mode", mode, "zq | closed | residue")
      ->required()
      ->check(CLI::IsMember({"zq", "closed", "residue"}));
  add_common(tensor);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"funceq", "qone", "series", "squier", "rh", "thm31",
                             "thm32", "thm33", "lemma31"}));
  verify->add_option("--strands", opt.strands, "max strand count");
  verify->add_option("--max-len", max_len, "max word length")
      ->check(CLI::PositiveNumber);
  verify->add_option("--samples", samples, "corpus size")->check(CLI::PositiveNumber);
  verify->add_option("--theta", theta, "fixed unit-circle argument");
  verify->add_option("--r", r_param, "subset enumeration bound");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParseError;
  }

  if (zeta->parsed()) {
    BraidWord w = parse_braid_word(word_text, opt.strands);
    ZetaFunction z = zeta_braid(w);
    emit("zeta", z.value, opt,
         {{"strands", w.strands}, {"word", format_braid_word(w)}});
    return kOk;
  }

  if (alexander->parsed()) {
    BraidWord w = parse_braid_word(word_text, opt.strands);
    AlexanderPoly a = alexander_poly(w);
    emit_poly("alexander", a.poly, opt,
              {{"strands", w.strands},
               {"word", format_braid_word(w)},
               {"unit_shift", a.unit_shift},
               {"unit_sign", a.unit_sign}});
    return kOk;
  }

  if (residue->parsed()) {
    BraidWord w = parse_braid_word(word_text, opt.strands);
    if (!is_knot(w)) throw not_a_knot_error(w);
    emit("residue", residue_at_one(zeta_braid(w)), opt,
         {{"strands", w.strands}, {"word", format_braid_word(w)}});
    return kOk;
  }

  if (torus->parsed()) {
    TorusSpec spec(torus_n, torus_m, !opt.force);
    bool holds = true;
    if (mode == "zeta") {
      const RationalFn closed = torus_zeta_closed(spec);
      if (opt.check || opt.force)
        holds = closed == zeta_braid(torus_braid(static_cast<int>(spec.n), spec.m)).value;
      emit("torus_zeta", closed, opt, {{"n", spec.n}, {"m", spec.m}});
    } else if (mode == "alexander") {
      const RationalQ closed = torus_alexander(spec);
      if (opt.check || opt.force) {
        AlexanderPoly direct =
            alexander_poly(torus_braid(static_cast<int>(spec.n), spec.m, true));
        LaurentPoly c = closed.to_laurent();
        c = c.shifted(-c.min_exp());
        if (c.at_one() == -1) c = -c;
        holds = c == direct.poly;
      }
      emit_poly("torus_alexander", closed.to_laurent(), opt,
                {{"n", spec.n}, {"m", spec.m}});
    } else {
      const RationalQ res = residue_at_one(torus_zeta_closed(spec));
      if (opt.check || opt.force)
        holds = res == residue_at_one(
                           zeta_braid(torus_braid(static_cast<int>(spec.n), spec.m)));
      emit("torus_residue", res, opt, {{"n", spec.n}, {"m", spec.m}});
    }
    if (opt.check || opt.force) {
      std::cout << (holds ? "IDENTITY HOLDS" : "IDENTITY FAILS") << "\n";
      if (!holds) return kVerificationFailure;
    }
    return kOk;
  }

  if (tensor->parsed()) {
    std::vector<TorusSpec> specs = parse_tensor_specs(tensor_specs, !opt.force);
    std::vector<BraidWord> words;
    for (const auto& s : specs)
      words.push_back(torus_braid(static_cast<int>(s.n), s.m));
    bool holds = true;
    if (mode == "zq") {
      // the family hypotheses only gate the closed form, not Z_q itself
      emit("tensor_zq", tensor_zq(words, opt.cap), opt,
           {{"specs", tensor_specs}});
    } else if (mode == "closed") {
      const TensorFamily family(std::move(specs), !opt.force);
      const RationalFn closed = multi_torus_closed(family);
      if (opt.check) holds = closed == tensor_zq(words, opt.cap);
      emit("tensor_closed", closed, opt, {{"specs", tensor_specs}});
    } else {
      const TensorFamily family(std::move(specs), !opt.force);
      const RationalQ res = multi_torus_residue(family);
      if (opt.check) holds = res == residue_at_one(tensor_zq(words, opt.cap));
      emit("tensor_residue", res, opt, {{"specs", tensor_specs}});
    }
    if (opt.check) {
      std::cout << (holds ? "IDENTITY HOLDS" : "IDENTITY FAILS") << "\n";
      if (!holds) return kVerificationFailure;
    }
    return kOk;
  }

  return run_verify(suite, opt, max_len, samples, theta, r_param);
}

} // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const StrandMismatch& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const EmptyAmbiguous& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const NotAKnot& e) {
    std::cerr << "not a knot: " << e.what() << "\n";
    return kNotAKnot;
  } catch (const NotCoprime& e) {
    std::cerr << "hypothesis violation: " << e.what() << "\n";
    return kHypothesisViolation;
  } catch (const FamilyInvariantViolated& e) {
    std::cerr << "hypothesis violation: " << e.what() << "\n";
    return kHypothesisViolation;
  } catch (const Error& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return kComputationError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kComputationError;
  }
}
