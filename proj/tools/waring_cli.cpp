// waring: command-line front end for the invariant, certifier and
// finite-ring computations.
//
// Exit codes: 0 success, 1 usage or parse error, 2 the input is provably not
// a signed sum of 2^n-th powers, 3 internal cross-check failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "waring/certifier.hpp"
#include "waring/finite_rings.hpp"
#include "waring/invariant.hpp"
#include "waring/lemma_check.hpp"
#include "waring/parallel.hpp"
#include "waring/parser.hpp"
#include "waring/report_json.hpp"

namespace {

using namespace waring;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitObstruction = 2;
constexpr int kExitCrossCheck = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CrossCheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string expr;
  std::string powersum_path;
  unsigned n = 2;
  std::vector<unsigned> n_list{2, 3};
  std::size_t m = 0;
  std::size_t i = 1, j = 2;
  std::string q_spec;
  std::uint64_t k = 2;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::size_t max_vars = 4;
  std::uint64_t max_degree = 3;
  std::int64_t coeff_bound = 5;
  std::string format = "text";
};

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

PowerSum load_powersum(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open power sum file " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("power sum file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_unsigned() || !doc.contains("terms") ||
      !doc["terms"].is_array())
    throw UsageError("power sum file needs {\"n\": <int >= 2>, \"terms\": [...]}");
  PowerSum s{PowerExponent(doc["n"].get<unsigned>())};
  for (const auto& t : doc["terms"]) {
    if (!t.is_object() || !t.contains("sign") || !t.contains("base") || !t["sign"].is_string() ||
        !t["base"].is_string())
      throw UsageError("each power sum term needs string fields \"sign\" and \"base\"");
    const auto sign = t["sign"].get<std::string>();
    if (sign != "+" && sign != "-") throw UsageError("power sum sign must be \"+\" or \"-\"");
    s.push(sign == "+" ? 1 : -1, parse_poly(t["base"].get<std::string>()));
  }
  return s;
}

std::size_t resolve_m(const Options& o, std::size_t used) {
  if (o.m == 0) return std::max<std::size_t>(used, 1);
  if (o.m < used) throw UsageError("--m " + std::to_string(o.m) + " is smaller than the variables used (" +
                                   std::to_string(used) + ")");
  return o.m;
}

std::size_t used_vars(const Polynomial& g) {
  std::size_t used = 1;
  for (const auto& t : g.terms()) used = std::max(used, t.monomial.max_variable());
  return used;
}

void emit_pattern(const PatternMatrix& a, const std::string& format) {
  if (format == "json") print_json(to_json(a));
  else std::cout << a.render_text();
}

void emit_bound(const CertifiedBound& b) { print_json(to_json(b)); }

// Pattern of the target, either read off an expression or computed from a
// power sum file along two independent routes.
PatternMatrix target_pattern(const Options& o, PowerExponent& n_out) {
  if (!o.powersum_path.empty()) {
    const PowerSum s = load_powersum(o.powersum_path);
    n_out = s.exponent();
    const std::size_t m = resolve_m(o, s.num_vars());
    const PatternMatrix read_off = phi_of_expansion(s, ExpansionPath::kPairwiseTruncated, m);
    if (read_off != phi_of_powersum(s, m))
      throw CrossCheckFailure("coefficient read-off and closed form disagree on the power sum");
    return read_off;
  }
  if (o.expr.empty()) throw UsageError("give an expression or --powersum <path>");
  const Polynomial g = parse_poly(o.expr);
  n_out = PowerExponent(o.n);
  return phi(g, n_out, resolve_m(o, used_vars(g)));
}

int cmd_parse(const Options& o) {
  const Polynomial f = parse_poly(o.expr, o.m ? std::optional<std::size_t>(o.m) : std::nullopt);
  if (o.format == "json") print_json({{"polynomial", f.to_string()}, {"num_vars", f.num_vars()}});
  else std::cout << f.to_string() << "\n";
  return kExitOk;
}

int cmd_phi(const Options& o) {
  PowerExponent n(o.n);
  emit_pattern(target_pattern(o, n), o.format);
  return kExitOk;
}

int cmd_certify(const Options& o) {
  PowerExponent n(o.n);
  const PatternMatrix a = target_pattern(o, n);
  const CertifiedBound b = certify_pattern(a);
  if (!verify_certificate(a, b)) throw CrossCheckFailure("certificate failed independent verification");
  emit_bound(b);
  return kExitOk;
}

int cmd_counting(const Options& o) {
  if (o.m == 0) throw UsageError("--m is required");
  emit_bound(counting_certificate(o.m));
  return kExitOk;
}

int cmd_power_coeff(const Options& o) {
  const PowerExponent n(o.n);
  const Polynomial f = parse_poly(o.expr, o.m ? std::optional<std::size_t>(o.m) : std::nullopt);
  const Polynomial fm = f.with_num_vars(std::max({f.num_vars(), o.i, o.j}));
  const Integer closed = coeff_xixj_closed(fm, n, o.i, o.j);
  const Integer expanded = pow(fm, n.k()).coeff(Monomial::pair(o.i, 1, o.j, 1));
  const bool agree = closed == expanded;
  if (o.format == "json") {
    print_json({{"n", n.n()},
                {"pair", {o.i, o.j}},
                {"closed_form", closed.get_str()},
                {"expansion", expanded.get_str()},
                {"agree", agree}});
  } else {
    std::cout << "closed form: " << closed.get_str() << "\n"
              << "expansion:   " << expanded.get_str() << "\n"
              << (agree ? "agree" : "MISMATCH") << "\n";
  }
  return agree ? kExitOk : kExitCrossCheck;
}

int cmd_verify_lemma(const Options& o) {
  LemmaCheckConfig cfg;
  cfg.seed = o.seed;
  cfg.trials = o.trials;
  cfg.n_list = o.n_list;
  cfg.max_vars = o.max_vars;
  cfg.max_degree = o.max_degree;
  cfg.coeff_bound = o.coeff_bound;
  cfg.threads = worker_count_from_env();
  for (unsigned n : cfg.n_list) PowerExponent{n};
  if (cfg.max_vars < 2) throw UsageError("--max-vars must be at least 2");
  const LemmaReport report = verify_lemma(cfg);
  if (o.format == "json") {
    print_json(to_json(report));
  } else {
    std::cout << "trials: " << report.trials << "\n"
              << "pair checks: " << report.pair_checks << "\n"
              << "failures: " << report.failures.size() << "\n";
    for (const auto& f : report.failures)
      std::cout << "  trial " << f.trial << " n=" << f.n << " pair (" << f.i << "," << f.j << ") " << f.check
                << ": " << f.detail << "\n    f = " << f.base << "\n";
  }
  return report.failures.empty() ? kExitOk : kExitCrossCheck;
}

std::pair<std::uint64_t, std::uint64_t> parse_q(const std::string& text) {
  const auto colon = text.find(':');
  try {
    std::size_t used = 0;
    if (colon == std::string::npos) {
      const auto q = std::stoull(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {q, q};
    }
    const auto lo = std::stoull(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument(text);
    const auto rest = text.substr(colon + 1);
    const auto hi = std::stoull(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("--q expects Q or LO:HI, got '" + text + "'");
  }
}

int cmd_finite_ring(const Options& o) {
  if (o.q_spec.empty()) throw UsageError("--q is required");
  const auto [lo, hi] = parse_q(o.q_spec);
  const auto reports = sweep(lo, hi, o.k, worker_count_from_env());
  if (o.format == "csv") {
    std::cout << finite_ring_csv_header() << "\n";
    for (const auto& r : reports) std::cout << to_csv_row(r) << "\n";
  } else if (o.format == "json") {
    if (reports.size() == 1) {
      print_json(to_json(reports.front()));
    } else {
      json all = json::array();
      for (const auto& r : reports) all.push_back(to_json(r));
      print_json(all);
    }
  } else {
    for (const auto& r : reports)
      std::cout << "q=" << r.q << " k=" << r.k << " |powers|=" << r.powers.size()
                << " |J|=" << r.subring.size() << " v=" << r.v_value << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signed sums of 2^n-th powers: invariants, certified lower bounds, finite-ring Waring constants"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::string> text_json{"text", "json"};
  auto add_format = [&](CLI::App* sub, const std::vector<std::string>& allowed) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(allowed));
  };
  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", o.n, "Exponent k = 2^n, n >= 2"); };

  auto* parse = app.add_subcommand("parse", "Print the canonical form of a polynomial");
  parse->add_option("expr", o.expr, "Polynomial expression")->required();
  parse->add_option("--m", o.m, "Number of variables");
  add_format(parse, text_json);

  auto* phi_cmd = app.add_subcommand("phi", "Evaluate the mod-2 pattern invariant of a polynomial or power sum");
  phi_cmd->add_option("expr", o.expr, "Polynomial expression");
  phi_cmd->add_option("--powersum", o.powersum_path, "JSON power sum file");
  phi_cmd->add_option("--m", o.m, "Number of variables");
  add_n(phi_cmd);
  add_format(phi_cmd, text_json);

  auto* certify = app.add_subcommand("certify", "Certified lower bound on the number of signed powers");
  certify->add_option("expr", o.expr, "Polynomial expression");
  certify->add_option("--powersum", o.powersum_path, "JSON power sum file");
  certify->add_option("--m", o.m, "Number of variables");
  add_n(certify);
  add_format(certify, {"json"});

  auto* counting = app.add_subcommand("counting", "Worst-case lower bound ceil((m-1)/2) for m variables");
  counting->add_option("--m", o.m, "Number of variables")->required();
  add_format(counting, {"json"});

  auto* coeff = app.add_subcommand("power-coeff", "x_i*x_j coefficient of f^(2^n), closed form vs expansion");
  coeff->add_option("expr", o.expr, "Base polynomial f")->required();
  coeff->add_option("--i", o.i, "First variable index")->required();
  coeff->add_option("--j", o.j, "Second variable index")->required();
  coeff->add_option("--m", o.m, "Number of variables");
  add_n(coeff);
  add_format(coeff, text_json);

  auto* lemma = app.add_subcommand("verify-lemma", "Randomized check of the coefficient congruences");
  lemma->add_option("--seed", o.seed, "Run seed");
  lemma->add_option("--trials", o.trials, "Number of random polynomials")->check(CLI::PositiveNumber);
  lemma->add_option("--n", o.n_list, "Exponents n (comma separated)")->delimiter(',');
  lemma->add_option("--max-vars", o.max_vars, "Largest variable count");
  lemma->add_option("--max-degree", o.max_degree, "Largest total degree of f")->check(CLI::PositiveNumber);
  lemma->add_option("--coeff-bound", o.coeff_bound, "Coefficients drawn from [-B, B]")->check(CLI::PositiveNumber);
  add_format(lemma, text_json);

  auto* ring = app.add_subcommand("finite-ring", "Waring constants v(k, Z/q) by exhaustive search");
  ring->add_option("--q", o.q_spec, "Modulus Q or range LO:HI")->required();
  ring->add_option("--k", o.k, "Exponent k >= 1");
  add_format(ring, {"text", "json", "csv"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*parse) return cmd_parse(o);
    if (*phi_cmd) return cmd_phi(o);
    if (*certify) return cmd_certify(o);
    if (*counting) return cmd_counting(o);
    if (*coeff) return cmd_power_coeff(o);
    if (*lemma) return cmd_verify_lemma(o);
    if (*ring) return cmd_finite_ring(o);
  } catch (const NotInSubringObstruction& e) {
    if (o.format == "json") print_json(to_json(e));
    else std::cout << "not in J: " << e.what() << "\n";
    return kExitObstruction;
  } catch (const CrossCheckFailure& e) {
    std::cerr << "cross-check failure: " << e.what() << "\n";
    return kExitCrossCheck;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
