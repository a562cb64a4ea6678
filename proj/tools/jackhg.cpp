// Command-line front end: compute Jack polynomials, binomial coefficients,
// operator images, hypergeometric series, and run the verification suite.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jackhg/jack.hpp"
#include "jackhg/operators.hpp"
#include "jackhg/params.hpp"
#include "jackhg/series.hpp"
#include "jackhg/solver.hpp"
#include "jackhg/suite.hpp"
#include "json.hpp"

namespace {

using jackhg::BadInput;
using jackhg::BiPoly;
using jackhg::DegenerateParameter;
using jackhg::InternalError;
using jackhg::JackForm;
using jackhg::JackTable;
using jackhg::ParamSet;
using jackhg::Partition;
using jackhg::Rational;
using jackhg::Residual;
using jackhg::SymPoly;
using nlohmann::json;

// Exit contract: 0 verified/success, 1 usage or parameter error,
// 2 verification failure.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFail = 2;

Partition parse_partition(const std::string& text) {
  if (text.empty() || text == "0") return Partition();
  std::vector<int> parts;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',') {
      try {
        size_t used = 0;
        int v = std::stoi(cur, &used);
        if (used != cur.size() || v < 0) throw std::invalid_argument(cur);
        if (v > 0) parts.push_back(v);
      } catch (const std::exception&) {
        throw BadInput("malformed partition part: '" + cur + "'");
      }
      cur.clear();
    } else {
      cur += ch;
    }
  }
  for (size_t i = 1; i < parts.size(); ++i)
    if (parts[i - 1] < parts[i])
      throw BadInput("partition parts must be weakly decreasing: " + text);
  return Partition(parts);
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  if (text.empty()) return out;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',') {
      out.push_back(jackhg::rat_parse(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return out;
}

json partition_json(const Partition& lambda) {
  json arr = json::array();
  for (int p : lambda.parts()) arr.push_back(p);
  return arr;
}

json rational_list_json(const std::vector<Rational>& vals) {
  json arr = json::array();
  for (const auto& v : vals) arr.push_back(jackhg::rat_str(v));
  return arr;
}

json sympoly_json(const SymPoly& f) {
  json terms = json::array();
  for (const auto& [lam, coef] : f.terms())
    terms.push_back({{"part", partition_json(lam)},
                     {"coef", jackhg::rat_str(coef)}});
  return json{{"n", f.n()}, {"terms", terms}};
}

json coeff_table_json(const std::map<Partition, Rational>& coeffs) {
  json arr = json::array();
  for (const auto& [lam, coef] : coeffs)
    arr.push_back({{"part", partition_json(lam)},
                   {"coef", jackhg::rat_str(coef)}});
  return arr;
}

json bipoly_json(const BiPoly& f) {
  json arr = json::array();
  for (const auto& [key, coef] : f)
    arr.push_back({{"xpart", partition_json(key.first)},
                   {"ypart", partition_json(key.second)},
                   {"coef", jackhg::rat_str(coef)}});
  return arr;
}

json params_json(const ParamSet& ps) {
  return json{{"a", rational_list_json(ps.a)},
              {"b", rational_list_json(ps.b)},
              {"n", ps.n},
              {"alpha", jackhg::rat_str(ps.alpha)}};
}

json residual_json(const Residual& r, std::string* max_residual) {
  json slices = json::array();
  for (const auto& [key, slice] : r.slices) {
    json entry;
    entry["slice"] = key.second < 0 ? json::array({key.first})
                                    : json::array({key.first, key.second});
    entry["complete"] = slice.complete;
    entry["residual"] =
        slice.complete ? (slice.zero ? "0" : slice.detail) : "truncated";
    slices.push_back(entry);
    if (slice.complete && !slice.zero && *max_residual == "0")
      *max_residual = slice.detail;
  }
  return slices;
}

void emit(const json& report, const std::string& out_path) {
  std::string text = report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw BadInput("cannot open output file: " + out_path);
    os << text;
  }
}

// Scale factor turning the J expansion into the requested form: the form
// polynomial has coefficient convert_form(1, lambda, form, J) on J_lambda.
SymPoly form_polynomial(JackTable& table, const Partition& lambda,
                        JackForm form) {
  Rational beta = Rational(2) / table.alpha();
  Rational scale = jackhg::convert_form(Rational(1), lambda, form, JackForm::J,
                                        table.n(), table.alpha(), beta);
  return table.jack(lambda).scaled(scale);
}

json jack_basis_json(JackTable& table, const SymPoly& f, JackForm form) {
  Rational beta = Rational(2) / table.alpha();
  json arr = json::array();
  for (const auto& [lam, coef] : table.to_jack_basis(f)) {
    Rational c = jackhg::convert_form(coef, lam, JackForm::J, form, table.n(),
                                      table.alpha(), beta);
    arr.push_back(
        {{"part", partition_json(lam)}, {"coef", jackhg::rat_str(c)}});
  }
  return arr;
}

// ---------------------------------------------------------------------------

struct CommonOut {
  std::string out_path;
};

int cmd_jack_expand(const std::string& lambda_s, int n,
                    const std::string& alpha_s, const std::string& form_s,
                    const std::string& out_path) {
  Partition lambda = parse_partition(lambda_s);
  Rational alpha = jackhg::rat_parse(alpha_s);
  JackForm form = jackhg::jack_form_parse(form_s);
  JackTable table(n, alpha);
  SymPoly f = form_polynomial(table, lambda, form);
  json report{{"schema", 1},
              {"command", "jack expand"},
              {"config",
               {{"lambda", partition_json(lambda)},
                {"n", n},
                {"alpha", jackhg::rat_str(alpha)},
                {"form", jackhg::jack_form_name(form)}}},
              {"polynomial", sympoly_json(f)}};
  emit(report, out_path);
  return kExitOk;
}

int cmd_binom(const std::string& lambda_s, const std::string& mu_s,
              const std::string& alpha_s, int n,
              const std::string& out_path) {
  Partition lambda = parse_partition(lambda_s);
  Partition mu = parse_partition(mu_s);
  Rational alpha = jackhg::rat_parse(alpha_s);
  if (n == 0) n = std::max(1, lambda.length());
  if (n < lambda.length())
    throw BadInput("n must be at least the length of lambda");
  json report{{"schema", 1},
              {"command", "binom"},
              {"config",
               {{"lambda", partition_json(lambda)},
                {"mu", partition_json(mu)},
                {"alpha", jackhg::rat_str(alpha)},
                {"n", n}}}};
  report["binom"] = jackhg::rat_str(jackhg::binom_general(lambda, mu, alpha));
  bool adjacent = lambda.covers(mu);
  report["adjacent"] = adjacent;
  if (adjacent) {
    report["binom_up"] = jackhg::rat_str(jackhg::binom_up(lambda, mu, alpha));
    report["binom_down"] =
        jackhg::rat_str(jackhg::binom_down_formula(lambda, mu, alpha, n));
  }
  emit(report, out_path);
  return kExitOk;
}

int cmd_op_apply(const std::string& op_s, const std::string& lambda_s, int n,
                 const std::string& alpha_s, const std::string& form_s,
                 const std::string& out_path) {
  Partition lambda = parse_partition(lambda_s);
  Rational alpha = jackhg::rat_parse(alpha_s);
  JackForm form = jackhg::jack_form_parse(form_s);
  jackhg::OpExpr op = jackhg::OpExpr::parse(op_s);
  JackTable table(n, alpha);
  SymPoly f = form_polynomial(table, lambda, form);
  SymPoly image = op.apply(f, alpha);
  json report{{"schema", 1},
              {"command", "op apply"},
              {"config",
               {{"op", op_s},
                {"to_jack", partition_json(lambda)},
                {"n", n},
                {"alpha", jackhg::rat_str(alpha)},
                {"form", jackhg::jack_form_name(form)}}},
              {"image_m", sympoly_json(image)},
              {"image_jack", jack_basis_json(table, image, form)}};
  emit(report, out_path);
  return kExitOk;
}

int cmd_series_build(int p, int q, const std::string& a_s,
                     const std::string& b_s, int n, const std::string& alpha_s,
                     int maxdeg, bool two_alphabet, bool expand,
                     const std::string& out_path) {
  ParamSet ps;
  ps.a = parse_rational_list(a_s);
  ps.b = parse_rational_list(b_s);
  ps.n = n;
  ps.alpha = jackhg::rat_parse(alpha_s);
  if (p >= 0 && p != static_cast<int>(ps.a.size()))
    throw BadInput("--p disagrees with the length of --a");
  if (q >= 0 && q != static_cast<int>(ps.b.size()))
    throw BadInput("--q disagrees with the length of --b");
  json report{{"schema", 1},
              {"command", "series build"},
              {"config",
               {{"p", static_cast<int>(ps.a.size())},
                {"q", static_cast<int>(ps.b.size())},
                {"a", rational_list_json(ps.a)},
                {"b", rational_list_json(ps.b)},
                {"n", n},
                {"alpha", jackhg::rat_str(ps.alpha)},
                {"maxdeg", maxdeg},
                {"two_alphabet", two_alphabet}}}};
  if (two_alphabet) {
    jackhg::DiagSeries s = jackhg::build_pFq_diag(ps, maxdeg);
    report["coefficients"] = coeff_table_json(s.coeffs);
    if (expand) {
      JackTable table(n, ps.alpha);
      report["expansion"] = bipoly_json(jackhg::diag_to_bipoly(s, table));
    }
  } else {
    jackhg::JackSeries s = jackhg::build_pFq(ps, maxdeg);
    report["coefficients"] = coeff_table_json(s.coeffs);
    if (expand) {
      JackTable table(n, ps.alpha);
      report["expansion"] = sympoly_json(jackhg::to_sympoly(s, table));
    }
  }
  emit(report, out_path);
  return kExitOk;
}

// Theorem identifiers accepted by solve/verify.
enum class Thm { A, Aprime, B, C, Bhat, Chat };

Thm parse_theorem(const std::string& name, bool allow_aprime) {
  if (name == "A") return Thm::A;
  if (name == "Aprime" && allow_aprime) return Thm::Aprime;
  if (name == "B") return Thm::B;
  if (name == "C") return Thm::C;
  if (name == "Bhat") return Thm::Bhat;
  if (name == "Chat") return Thm::Chat;
  throw BadInput("unknown theorem: " + name);
}

void require_hat_params(const ParamSet& ps) {
  if (ps.a.size() != 2 || ps.b.size() != 1)
    throw BadInput("Bhat/Chat need two upper parameters and one lower");
}

int cmd_solve(const std::string& thm_s, const std::string& a_s,
              const std::string& b_s, int n, const std::string& alpha_s,
              int maxdeg, const std::string& out_path) {
  Thm thm = parse_theorem(thm_s, /*allow_aprime=*/false);
  ParamSet ps;
  ps.a = parse_rational_list(a_s);
  ps.b = parse_rational_list(b_s);
  ps.n = n;
  ps.alpha = jackhg::rat_parse(alpha_s);
  json report{{"schema", 1},
              {"command", "solve"},
              {"config",
               {{"theorem", thm_s},
                {"a", rational_list_json(ps.a)},
                {"b", rational_list_json(ps.b)},
                {"n", n},
                {"alpha", jackhg::rat_str(ps.alpha)},
                {"maxdeg", maxdeg}}}};
  std::map<Partition, Rational> solved, direct;
  switch (thm) {
    case Thm::A:
      solved = jackhg::solve_theorem_A(ps, maxdeg).coeffs;
      direct = jackhg::build_pFq_diag(ps, maxdeg).coeffs;
      break;
    case Thm::B:
      solved = jackhg::solve_theorem_B(ps, maxdeg).coeffs;
      direct = jackhg::build_pFq(ps, maxdeg).coeffs;
      break;
    case Thm::C:
      solved = jackhg::solve_theorem_C(ps, maxdeg).coeffs;
      direct = jackhg::build_pFq(ps, maxdeg).coeffs;
      break;
    case Thm::Bhat:
    case Thm::Chat: {
      require_hat_params(ps);
      const Rational &a = ps.a[0], &b = ps.a[1], &c = ps.b[0];
      solved = (thm == Thm::Bhat
                    ? jackhg::solve_appendix_Bhat(a, b, c, n, ps.alpha, maxdeg)
                    : jackhg::solve_appendix_Chat(a, b, c, n, ps.alpha, maxdeg))
                   .coeffs;
      direct = jackhg::build_2F1hat(a, b, c, n, ps.alpha, maxdeg).coeffs;
      break;
    }
    default:
      throw BadInput("theorem not solvable: " + thm_s);
  }
  bool matches = solved == direct;
  report["coefficients"] = coeff_table_json(solved);
  report["matches_direct"] = matches;
  emit(report, out_path);
  return matches ? kExitOk : kExitVerifyFail;
}

int cmd_verify(const std::string& thm_s, int p, int q, int n, int maxdeg,
               int draws, std::uint64_t seed, const std::string& out_path) {
  Thm thm = parse_theorem(thm_s, /*allow_aprime=*/true);
  if (thm == Thm::Bhat || thm == Thm::Chat) {
    p = 2;
    q = 1;
  }
  std::mt19937_64 rng(seed);
  json report{{"schema", 1},
              {"command", "verify"},
              {"config",
               {{"theorem", thm_s},
                {"p", p},
                {"q", q},
                {"n", n},
                {"maxdeg", maxdeg},
                {"draws", draws},
                {"seed", seed}}}};
  json draw_reports = json::array();
  bool all_ok = true;
  for (int t = 0; t < draws; ++t) {
    ParamSet ps = jackhg::draw_generic_params(rng, p, q, n, maxdeg);
    json dr{{"params", params_json(ps)}};
    std::string max_residual = "0";
    bool solver_matches = true;
    json slices = json::array();
    auto add_residual = [&](const Residual& r, const char* tag) {
      json entry{{"check", tag},
                 {"checked", r.checked()},
                 {"slices", residual_json(r, &max_residual)}};
      slices.push_back(entry);
    };
    switch (thm) {
      case Thm::A:
      case Thm::Aprime: {
        jackhg::DiagSeries built = jackhg::build_pFq_diag(ps, maxdeg);
        solver_matches =
            jackhg::solve_theorem_A(ps, maxdeg).coeffs == built.coeffs;
        JackTable table(n, ps.alpha);
        add_residual(
            jackhg::residual_theorem_A(built, table, thm == Thm::Aprime),
            thm == Thm::Aprime ? "L(y)-R(x)" : "L(x)-R(y)");
        break;
      }
      case Thm::B: {
        jackhg::JackSeries built = jackhg::build_pFq(ps, maxdeg);
        solver_matches =
            jackhg::solve_theorem_B(ps, maxdeg).coeffs == built.coeffs;
        for (int m = 1; m <= n; ++m)
          add_residual(jackhg::residual_theorem_B(built, m),
                       ("L-M at m=" + std::to_string(m)).c_str());
        break;
      }
      case Thm::C: {
        jackhg::JackSeries built = jackhg::build_pFq(ps, maxdeg);
        solver_matches =
            jackhg::solve_theorem_C(ps, maxdeg).coeffs == built.coeffs;
        JackTable table(n, ps.alpha);
        add_residual(jackhg::residual_theorem_C(built, table), "N-R");
        break;
      }
      case Thm::Bhat: {
        const Rational &a = ps.a[0], &b = ps.a[1], &c = ps.b[0];
        jackhg::JackSeries built =
            jackhg::build_2F1hat(a, b, c, n, ps.alpha, maxdeg);
        solver_matches =
            jackhg::solve_appendix_Bhat(a, b, c, n, ps.alpha, maxdeg).coeffs ==
            built.coeffs;
        for (int m = 1; m <= n; ++m)
          add_residual(jackhg::residual_appendix_Bhat(built, c, m),
                       ("Lhat-Mhat at m=" + std::to_string(m)).c_str());
        break;
      }
      case Thm::Chat: {
        const Rational &a = ps.a[0], &b = ps.a[1], &c = ps.b[0];
        jackhg::JackSeries built =
            jackhg::build_2F1hat(a, b, c, n, ps.alpha, maxdeg);
        solver_matches =
            jackhg::solve_appendix_Chat(a, b, c, n, ps.alpha, maxdeg).coeffs ==
            built.coeffs;
        JackTable table(n, ps.alpha);
        add_residual(jackhg::residual_appendix_Chat(built, c, table),
                     "Nhat-Rhat");
        break;
      }
    }
    dr["solver_matches"] = solver_matches;
    dr["residuals"] = slices;
    dr["max_residual"] = max_residual;
    bool ok = solver_matches && max_residual == "0";
    dr["ok"] = ok;
    all_ok = all_ok && ok;
    draw_reports.push_back(dr);
  }
  report["draws_report"] = draw_reports;
  report["ok"] = all_ok;
  emit(report, out_path);
  return all_ok ? kExitOk : kExitVerifyFail;
}

int cmd_suite(const std::string& level, std::uint64_t seed,
              const std::string& out_path) {
  if (level != "smoke" && level != "full")
    throw BadInput("suite level must be 'smoke' or 'full'");
  jackhg::SuiteReport sr = jackhg::run_suite(level == "full", seed);
  json checks = json::array();
  for (const auto& c : sr.checks)
    checks.push_back(
        {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  json report{{"schema", 1},
              {"command", "suite"},
              {"config", {{"level", level}, {"seed", seed}}},
              {"checks", checks},
              {"ok", sr.ok()}};
  emit(report, out_path);
  return sr.ok() ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Jack polynomials and multivariate hypergeometric "
               "series, with operator-identity verification"};
  app.require_subcommand(1);

  int rc = kExitOk;
  std::string out_path;
  app.add_option("--out", out_path, "Write the JSON report to this file");

  // jack expand
  auto* jack_cmd = app.add_subcommand("jack", "Jack polynomial computations");
  jack_cmd->require_subcommand(1);
  {
    auto* c = jack_cmd->add_subcommand("expand", "Expand in the m-basis");
    auto lambda = std::make_shared<std::string>();
    auto alpha = std::make_shared<std::string>("1");
    auto form = std::make_shared<std::string>("J");
    auto n = std::make_shared<int>(0);
    c->add_option("--lambda", *lambda, "Partition, e.g. 2,1")->required();
    c->add_option("--n", *n, "Number of variables")->required();
    c->add_option("--alpha", *alpha, "Jack parameter, e.g. 5/2");
    c->add_option("--form", *form, "J|Jstar|Omega|C");
    c->callback([=, &rc, &out_path] {
      rc = cmd_jack_expand(*lambda, *n, *alpha, *form, out_path);
    });
  }

  // binom
  {
    auto* c = app.add_subcommand("binom", "Generalized binomial coefficient");
    auto lambda = std::make_shared<std::string>();
    auto mu = std::make_shared<std::string>();
    auto alpha = std::make_shared<std::string>("1");
    auto n = std::make_shared<int>(0);
    c->add_option("--lambda", *lambda)->required();
    c->add_option("--mu", *mu)->required();
    c->add_option("--alpha", *alpha, "Jack parameter");
    c->add_option("--n", *n, "Number of variables (defaults to l(lambda))");
    c->callback([=, &rc, &out_path] {
      rc = cmd_binom(*lambda, *mu, *alpha, *n, out_path);
    });
  }

  // op apply
  auto* op_cmd = app.add_subcommand("op", "Operator application");
  op_cmd->require_subcommand(1);
  {
    auto* c = op_cmd->add_subcommand("apply", "Apply an operator expression");
    auto op = std::make_shared<std::string>();
    auto lambda = std::make_shared<std::string>();
    auto alpha = std::make_shared<std::string>("1");
    auto form = std::make_shared<std::string>("J");
    auto n = std::make_shared<int>(0);
    c->add_option("--op", *op, "e.g. \"ad(-box,E1)^2\" or \"[box,e1]\"")
        ->required();
    c->add_option("--to-jack", *lambda, "Partition of the Jack input")
        ->required();
    c->add_option("--n", *n)->required();
    c->add_option("--alpha", *alpha);
    c->add_option("--form", *form, "J|Jstar|Omega|C");
    c->callback([=, &rc, &out_path] {
      rc = cmd_op_apply(*op, *lambda, *n, *alpha, *form, out_path);
    });
  }

  // series build
  auto* series_cmd = app.add_subcommand("series", "Hypergeometric series");
  series_cmd->require_subcommand(1);
  {
    auto* c = series_cmd->add_subcommand("build", "Build pFq coefficients");
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    auto alpha = std::make_shared<std::string>("1");
    auto p = std::make_shared<int>(-1);
    auto q = std::make_shared<int>(-1);
    auto n = std::make_shared<int>(0);
    auto maxdeg = std::make_shared<int>(0);
    auto two = std::make_shared<bool>(false);
    auto expand = std::make_shared<bool>(false);
    c->add_option("--p", *p, "Upper parameter count (checked against --a)");
    c->add_option("--q", *q, "Lower parameter count (checked against --b)");
    c->add_option("--a", *a, "Upper parameters, e.g. 1/2,3");
    c->add_option("--b", *b, "Lower parameters");
    c->add_option("--n", *n)->required();
    c->add_option("--alpha", *alpha);
    c->add_option("--maxdeg", *maxdeg)->required();
    c->add_flag("--two-alphabet", *two, "Two-alphabet (x,y) series");
    c->add_flag("--expand", *expand, "Include the m-basis expansion");
    c->callback([=, &rc, &out_path] {
      rc = cmd_series_build(*p, *q, *a, *b, *n, *alpha, *maxdeg, *two,
                            *expand, out_path);
    });
  }

  // solve
  {
    auto* c = app.add_subcommand(
        "solve", "Determine the coefficients from the operator recursion");
    auto thm = std::make_shared<std::string>();
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    auto alpha = std::make_shared<std::string>("1");
    auto n = std::make_shared<int>(0);
    auto maxdeg = std::make_shared<int>(0);
    c->add_option("--theorem", *thm, "A|B|C|Bhat|Chat")->required();
    c->add_option("--a", *a, "Upper parameters (Bhat/Chat: a,b)");
    c->add_option("--b", *b, "Lower parameters (Bhat/Chat: c)");
    c->add_option("--n", *n)->required();
    c->add_option("--alpha", *alpha);
    c->add_option("--maxdeg", *maxdeg)->required();
    c->callback([=, &rc, &out_path] {
      rc = cmd_solve(*thm, *a, *b, *n, *alpha, *maxdeg, out_path);
    });
  }

  // verify
  {
    auto* c = app.add_subcommand(
        "verify", "Residual verification at random generic parameters");
    auto thm = std::make_shared<std::string>();
    auto p = std::make_shared<int>(0);
    auto q = std::make_shared<int>(0);
    auto n = std::make_shared<int>(0);
    auto maxdeg = std::make_shared<int>(0);
    auto draws = std::make_shared<int>(3);
    auto seed = std::make_shared<std::uint64_t>(12345);
    c->add_option("--theorem", *thm, "A|Aprime|B|C|Bhat|Chat")->required();
    c->add_option("--p", *p, "Upper parameter count");
    c->add_option("--q", *q, "Lower parameter count");
    c->add_option("--n", *n)->required();
    c->add_option("--maxdeg", *maxdeg)->required();
    c->add_option("--draws", *draws, "Parameter draws");
    c->add_option("--seed", *seed, "Seed for the parameter draws");
    c->callback([=, &rc, &out_path] {
      rc = cmd_verify(*thm, *p, *q, *n, *maxdeg, *draws, *seed, out_path);
    });
  }

  // suite
  {
    auto* c = app.add_subcommand("suite", "Run the verification matrix");
    auto level = std::make_shared<std::string>();
    auto seed = std::make_shared<std::uint64_t>(12345);
    c->add_option("level", *level, "smoke|full")->required();
    c->add_option("--seed", *seed, "Seed for the parameter draws");
    c->callback(
        [=, &rc, &out_path] { rc = cmd_suite(*level, *seed, out_path); });
  }

  // Let --out appear after the subcommand name as well as before it.
  std::function<void(CLI::App*)> allow_parent_opts = [&](CLI::App* a) {
    for (CLI::App* s : a->get_subcommands({})) {
      s->fallthrough();
      allow_parent_opts(s);
    }
  };
  allow_parent_opts(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const BadInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DegenerateParameter& e) {
    std::cerr << "degenerate parameters: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InternalError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kExitVerifyFail;
  }
  return rc;
}
