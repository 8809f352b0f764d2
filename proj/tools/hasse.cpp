// hasse: generation and verification commands.
//
// Exit codes: 0 success, 1 a check failed, 2 usage error, 3 internal
// invariant breach.

#include <CLI11.hpp>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "hasse/fgl.hpp"
#include "hasse/format.hpp"
#include "hasse/hsd.hpp"
#include "hasse/pbasis.hpp"
#include "hasse/verifier.hpp"
#include "hasse/witt.hpp"

using namespace hasse;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

struct Common {
  unsigned p = 2;
  unsigned e = 2;
  bool json_out = false;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--p", c.p, "prime characteristic")->check(CLI::Range(2u, kMaxPrime));
  app->add_option("--e", c.e, "length / dimension")->check(CLI::Range(1u, static_cast<unsigned>(kMaxDim)));
  app->add_flag("--json", c.json_out, "emit JSON");
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int gen_witt_law(const Common& c, bool integral) {
  const Params params(c.p, c.e);
  const auto law = witt_addition_law(params);
  if (c.json_out) {
    json out = json::array();
    for (unsigned k = 0; k < c.e; ++k)
      out.push_back({{"component", k + 1},
                     {"poly", integral ? to_json(law.integral[k], c.e) : to_json(law.reduced[k], c.e)},
                     {"text", integral ? to_text(law.integral[k]) : to_text(law.reduced[k])}});
    emit(out);
    return kOk;
  }
  const char* name = integral ? "S" : "H";
  for (unsigned k = 0; k < c.e; ++k) {
    if (k) std::cout << " ; ";
    std::cout << name << k + 1 << " = " << (integral ? to_text(law.integral[k]) : to_text(law.reduced[k]));
  }
  std::cout << "\n";
  return kOk;
}

// Tables, δ entries and decompositions are always emitted as JSON.
int gen_iterativity(const Common& c, const std::string& law_name, unsigned max_order) {
  const Params params(c.p, c.e);
  const IterativityTable table(make_fgl(parse_law_kind(law_name), params), max_order);
  const auto indices = indices_up_to_total(c.e, max_order);
  json out = json::array();
  for (const auto& i : indices) {
    for (const auto& j : indices) {
      if (i.total() + j.total() > max_order) continue;
      json terms = json::object();
      for (const auto& [l, a] : table.constants(i, j)) terms[l.to_string()] = a;
      out.push_back({{"i", i.to_string()}, {"j", j.to_string()}, {"alpha", terms}});
    }
  }
  emit({{"law", law_name}, {"p", c.p}, {"e", c.e}, {"max_order", max_order}, {"tables", out}});
  return kOk;
}

int gen_delta_table(const Common& c, unsigned max_i, unsigned max_j) {
  const Params params(c.p, c.e);
  const auto table = delta_table(params, max_i, max_j);
  json out = json::array();
  for (const auto& [key, value] : table.entries)
    out.push_back({{"i", key.first.to_string()}, {"j", key.second.to_string()}, {"delta", to_json(value, c.e)},
                   {"text", to_text(value)}});
  emit(out);
  return kOk;
}

int apply_op(const Common& c, const std::string& op, const std::string& poly, const std::string& law_name) {
  const Params params(c.p, c.e);
  const auto d = HSDerivation::for_law(make_fgl(parse_law_kind(law_name), params));
  const auto f = parse_poly(poly, d.field(), c.e);
  const auto expr = OperatorExpr::parse(op, c.e);
  const auto value = operator_eval(d, expr, f);
  if (c.json_out)
    emit({{"op", expr.to_string()}, {"poly", to_text(f)}, {"value", to_json(value, c.e)}, {"text", to_text(value)}});
  else
    std::cout << to_text(value) << "\n";
  return kOk;
}

int decompose(const Common& c, unsigned n, const std::string& x_text) {
  const Params params(c.p, c.e);
  const auto x = parse_ratfun(x_text, PrimeField(c.p), c.e);
  json out = json::object();
  for (const auto& [i, alpha] : p_power_decompose(x, n, params)) out[i.to_string()] = to_json(alpha, c.e);
  emit(out);
  return kOk;
}

int derive_pbasis(const Common& c, const std::string& j_text, unsigned n, const std::string& x_text) {
  const Params params(c.p, c.e);
  const PBasisContext ctx(params);
  const auto x = parse_ratfun(x_text, PrimeField(c.p), c.e);
  const auto j = MultiIndex::parse(j_text);
  if (j.size() != c.e) throw std::invalid_argument("--j must have " + std::to_string(c.e) + " entries");
  const auto value = derivation_via_pbasis(ctx, x, j, n);
  if (c.json_out)
    emit({{"x", to_text(x)}, {"j", j.to_string()}, {"n", n}, {"value", to_json(value, c.e)}});
  else
    std::cout << to_text(value) << "\n";
  return kOk;
}

int verify(const Common& c, const std::string& suite, const VerifyConfig& config, bool timing) {
  const Params params(c.p, c.e);
  const auto reports = run_suite(suite, params, config);
  bool ok = true;
  json out = json::array();
  for (const auto& r : reports) {
    ok = ok && r.ok();
    if (c.json_out) {
      out.push_back(r.to_json(timing));
      continue;
    }
    std::cout << r.id << " p=" << r.p << " e=" << r.e << " " << to_string(r.verdict) << ": " << r.summary;
    if (!r.witness.empty()) std::cout << " " << r.witness.dump();
    if (timing) std::cout << " [" << r.wall_ms << " ms]";
    std::cout << "\n";
  }
  if (c.json_out) emit(out);
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hasse-Schmidt derivation toolkit over F_p"};
  app.require_subcommand(1);
  Common common;

  auto* witt_cmd = app.add_subcommand("gen-witt-law", "print the Witt addition law");
  add_common(witt_cmd, common);
  bool integral = false;
  witt_cmd->add_flag("--integral", integral, "print S over Z instead of H mod p");

  auto* iter_cmd = app.add_subcommand("gen-iterativity", "print iterativity constants");
  add_common(iter_cmd, common);
  std::string law_name = "witt";
  unsigned max_order = 4;
  iter_cmd->add_option("--law", law_name, "ga, gm or witt")->check(CLI::IsMember({"ga", "gm", "witt"}));
  iter_cmd->add_option("--max-order", max_order, "bound on |i| + |j|")->check(CLI::Range(0u, 12u));

  auto* delta_cmd = app.add_subcommand("gen-delta-table", "print δ_j^i = D_j(X^i)");
  add_common(delta_cmd, common);
  unsigned max_i = 1;
  unsigned max_j = 1;
  delta_cmd->add_option("--max-i", max_i, "entries of i range over [0, max-i]")->check(CLI::Range(0u, 8u));
  delta_cmd->add_option("--max-j", max_j, "entries of j range over [0, max-j]")->check(CLI::Range(0u, 8u));

  auto* apply_cmd = app.add_subcommand("apply", "evaluate an operator expression on a polynomial");
  add_common(apply_cmd, common);
  std::string op;
  std::string poly;
  std::string apply_law = "witt";
  apply_cmd->add_option("--op", op, "e.g. \"D(1,0)^2 + 2*D(0,1)\"")->required();
  apply_cmd->add_option("--poly", poly, "e.g. \"X1*X2\"")->required();
  apply_cmd->add_option("--law", apply_law, "derivation ev_F for F = ga, gm or witt")
      ->check(CLI::IsMember({"ga", "gm", "witt"}));

  auto* dec_cmd = app.add_subcommand("decompose", "write x = Σ α_i^(p^n) X^i");
  add_common(dec_cmd, common);
  unsigned dec_n = 1;
  std::string dec_x;
  dec_cmd->add_option("--n", dec_n, "level")->check(CLI::Range(0u, 4u));
  dec_cmd->add_option("--x", dec_x, "rational function, e.g. \"1/(1+X1)\"")->required();

  auto* der_cmd = app.add_subcommand("derive-pbasis", "D_j(x) through the p-basis decomposition");
  add_common(der_cmd, common);
  std::string der_j;
  unsigned der_n = 1;
  std::string der_x;
  der_cmd->add_option("--j", der_j, "multi-index, e.g. \"(1,0)\"")->required();
  der_cmd->add_option("--n", der_n, "level, at least max(j)")->check(CLI::Range(0u, 4u));
  der_cmd->add_option("--x", der_x, "rational function")->required();

  auto* verify_cmd = app.add_subcommand(
      "verify",
      "run verification suites on the canonical model; the field and separable-closure schemes H0 and H7 are "
      "not checkable on a fixed model and are not offered");
  add_common(verify_cmd, common);
  std::string suite = "all";
  VerifyConfig config;
  bool timing = false;
  bool serial = false;
  verify_cmd->add_option("--suite", suite, "suite name")->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--deg-bound", config.degree_bound, "corpus degree bound")->check(CLI::Range(0u, 12u));
  verify_cmd->add_option("--order-bound", config.order_bound, "bound on |i| + |j|")->check(CLI::Range(0u, 12u));
  verify_cmd->add_option("--scheme-bound", config.scheme_bound, "n bound for H1-H4")->check(CLI::Range(0u, 12u));
  verify_cmd->add_option("--n", config.n, "p-basis level")->check(CLI::Range(1u, 4u));
  verify_cmd->add_option("--count", config.rational_count, "random rational functions")->check(CLI::Range(0u, 10000u));
  verify_cmd->add_option("--seed", config.seed, "corpus seed");
  verify_cmd->add_flag("--timing", timing, "include wall time");
  verify_cmd->add_flag("--serial", serial, "use the serial reference path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? kOk : kUsage;
  }
  if (serial) config.exec = Execution::serial;

  try {
    if (*witt_cmd) return gen_witt_law(common, integral);
    if (*iter_cmd) return gen_iterativity(common, law_name, max_order);
    if (*delta_cmd) return gen_delta_table(common, max_i, max_j);
    if (*apply_cmd) return apply_op(common, op, poly, apply_law);
    if (*dec_cmd) return decompose(common, dec_n, dec_x);
    if (*der_cmd) return derive_pbasis(common, der_j, der_n, der_x);
    if (*verify_cmd) return verify(common, suite, config, timing);
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
