#include "jackhg/solver.hpp"

#include <functional>

namespace jackhg {

namespace {
std::string slice_name(std::pair<int, int> key) {
  if (key.second < 0) return "degree " + std::to_string(key.first);
  return "bidegree (" + std::to_string(key.first) + "," +
         std::to_string(key.second) + ")";
}

Rational alpha_power(const Rational& alpha, int k) {
  Rational pow(1);
  for (int i = 0; i < k; ++i) pow *= alpha;
  return pow;
}
}  // namespace

void Residual::record(std::pair<int, int> key, bool complete,
                      const SymPoly& value) {
  Slice s;
  s.complete = complete;
  s.zero = value.is_zero();
  if (!s.zero) {
    const auto& [lam, c] = *value.terms().begin();
    s.detail = slice_name(key) + ": coefficient " + rat_str(c) + " at m_" +
               lam.str();
  }
  slices[key] = s;
}

void Residual::record(std::pair<int, int> key, bool complete,
                      const BiPoly& value) {
  Slice s;
  s.complete = complete;
  s.zero = value.empty();
  if (!s.zero) {
    const auto& [bk, c] = *value.begin();
    s.detail = slice_name(key) + ": coefficient " + rat_str(c) + " at m_" +
               bk.first.str() + "(x) m_" + bk.second.str() + "(y)";
  }
  slices[key] = s;
}

bool Residual::ok() const {
  for (const auto& [key, s] : slices)
    if (s.complete && !s.zero) return false;
  return true;
}

int Residual::checked() const {
  int c = 0;
  for (const auto& [key, s] : slices)
    if (s.complete) ++c;
  return c;
}

std::string Residual::first_failure() const {
  for (const auto& [key, s] : slices)
    if (s.complete && !s.zero) return s.detail;
  return "";
}

// ---------------------------------------------------------------------------
// Theorem A

DiagSeries solve_theorem_A(const ParamSet& params, int maxdeg) {
  DiagSeries s;
  s.params = params;
  s.maxdeg = maxdeg;
  s.coeffs[Partition()] = 1;
  for (int d = 1; d <= maxdeg; ++d) {
    for (const auto& lam : partitions_of(d, params.n)) {
      bool have = false;
      Rational val(0);
      for (const auto& mu : covered_by(lam)) {
        if (mu.length() > params.n) continue;
        Rational r = rho_skew(lam, mu, params.alpha);
        Rational den(1), num(1);
        for (const auto& bk : params.b) den *= r + bk;
        for (const auto& ak : params.a) num *= r + ak;
        if (is_zero(den))
          throw DegenerateParameter(
              "solve_theorem_A: vanishing b-factor at cover " + lam.str() +
              " over " + mu.str());
        Rational cand = s.coeffs.at(mu) * num / den;
        if (!have) {
          val = cand;
          have = true;
        } else if (cand != val) {
          throw InternalError("solve_theorem_A: inconsistent covers at " +
                              lam.str());
        }
      }
      s.coeffs[lam] = val;
    }
  }
  return s;
}

Residual residual_theorem_A(const DiagSeries& s, JackTable& table,
                            bool mirrored) {
  const ParamSet& ps = s.params;
  std::map<std::pair<int, int>, BiPoly> acc;
  for (const auto& [lam, c] : s.coeffs) {
    int d = lam.size();
    Rational cc = c * alpha_power(ps.alpha, d);
    if (is_zero(cc)) continue;
    SymPoly om = table.omega(lam);
    SymPoly js = table.jstar(lam);
    if (!mirrored) {
      // L^(x) F  at bidegree (d-1, d)
      bipoly_add(acc[{d - 1, d}],
                 tensor(apply_lowering_L(ps.b, ps.alpha, om), js), cc);
      // -R^(y) F  at bidegree (d, d+1)
      bipoly_add(acc[{d, d + 1}],
                 tensor(om, apply_raising_R(ps.a, ps.alpha, js)), -cc);
    } else {
      // L^(y) F  at bidegree (d, d-1)
      bipoly_add(acc[{d, d - 1}],
                 tensor(om, apply_lowering_L(ps.b, ps.alpha, js)), cc);
      // -R^(x) F  at bidegree (d+1, d)
      bipoly_add(acc[{d + 1, d}],
                 tensor(apply_raising_R(ps.a, ps.alpha, om), js), -cc);
    }
  }
  Residual res;
  for (int j = 0; j <= s.maxdeg; ++j) {
    auto key = mirrored ? std::make_pair(j + 1, j) : std::make_pair(j, j + 1);
    bool complete = j + 1 <= s.maxdeg;
    auto it = acc.find(key);
    res.record(key, complete, it == acc.end() ? BiPoly{} : it->second);
  }
  return res;
}

// ---------------------------------------------------------------------------
// Elimination solver shared by Theorem B and Theorem Bhat

namespace {
using Kernel = std::function<Rational(const Partition&, const Partition&)>;

std::map<Partition, Rational> solve_by_elimination(int n, int maxdeg,
                                                   const Rational& alpha,
                                                   const Kernel& Ka,
                                                   const Kernel& Kb,
                                                   const char* who) {
  std::map<Partition, Rational> C;
  C[Partition()] = 1;
  for (int d = 0; d < maxdeg; ++d) {
    for (const auto& mu : reverse_lex_order(d, n)) {
      Rational cmu = C.at(mu);
      auto covers = covers_of(mu, n);
      Rational rhs1 = 0, rhs2 = 0;
      for (const auto& lam : covers) {
        Rational r = rho_skew(lam, mu, alpha);
        Rational ka = Ka(lam, mu);
        rhs1 += cmu * ka;
        rhs2 += cmu * r * ka;
      }
      std::vector<Partition> unknown;
      for (const auto& lam : covers) {
        auto it = C.find(lam);
        if (it == C.end()) {
          unknown.push_back(lam);
          continue;
        }
        Rational r = rho_skew(lam, mu, alpha);
        Rational kb = Kb(lam, mu);
        rhs1 -= it->second * kb;
        rhs2 -= it->second * r * kb;
      }
      std::string ctx = std::string(who) + " at mu = " + mu.str();
      if (unknown.empty()) {
        if (!is_zero(rhs1) || !is_zero(rhs2))
          throw InternalError(ctx + ": over-determined equations fail");
      } else if (unknown.size() == 1) {
        Rational kb = Kb(unknown[0], mu);
        if (is_zero(kb))
          throw DegenerateParameter(ctx + ": K_b vanishes at " +
                                    unknown[0].str());
        Rational v = rhs1 / kb;
        if (rho_skew(unknown[0], mu, alpha) * kb * v != rhs2)
          throw InternalError(ctx + ": rho-weighted equation inconsistent");
        C[unknown[0]] = v;
      } else if (unknown.size() == 2) {
        Rational kb1 = Kb(unknown[0], mu), kb2 = Kb(unknown[1], mu);
        Rational r1 = rho_skew(unknown[0], mu, alpha);
        Rational r2 = rho_skew(unknown[1], mu, alpha);
        if (is_zero(kb1) || is_zero(kb2) || r1 == r2)
          throw DegenerateParameter(ctx + ": singular 2x2 system");
        C[unknown[0]] = (r2 * rhs1 - rhs2) / (kb1 * (r2 - r1));
        C[unknown[1]] = (rhs2 - r1 * rhs1) / (kb2 * (r2 - r1));
      } else {
        throw InternalError(ctx + ": more than two new unknowns");
      }
    }
    for (const auto& lam : partitions_of(d + 1, n))
      if (!C.count(lam))
        throw InternalError(std::string(who) + ": " + lam.str() +
                            " left undetermined");
  }
  return C;
}
}  // namespace

JackSeries solve_theorem_B(const ParamSet& params, int maxdeg) {
  const Rational& alpha = params.alpha;
  auto kernel = [&alpha](const std::vector<Rational>& cs) {
    return [&alpha, cs](const Partition& lam, const Partition& mu) {
      Rational r = rho_skew(lam, mu, alpha);
      Rational acc = binom_up(lam, mu, alpha) * hooks(mu, alpha).j /
                     hooks(lam, alpha).j;
      for (const auto& c : cs) acc *= r + c;
      return acc;
    };
  };
  JackSeries s;
  s.params = params;
  s.maxdeg = maxdeg;
  s.coeffs = solve_by_elimination(params.n, maxdeg, alpha, kernel(params.a),
                                  kernel(params.b), "solve_theorem_B");
  return s;
}

namespace {
/// Differential-vs-transport residual for a lowering-type check: shared by
/// Theorem B and Theorem Bhat. `lower_diff` applies the operator to a
/// polynomial; `lower_coef(lam, mu)` is the coefficient of Jstar_mu in the
/// image of Jstar_lam; `eigen(mu)` is the diagonal operator's eigenvalue.
Residual lowering_residual(const JackSeries& s, int m,
                           const std::function<SymPoly(const SymPoly&)>& lower_diff,
                           const Kernel& lower_coef,
                           const std::function<Rational(const Partition&)>& eigen,
                           const char* who) {
  const ParamSet& ps = s.params;
  if (m < 1 || m > ps.n) throw BadInput(std::string(who) + ": need 1 <= m <= n");
  JackTable table(m, ps.alpha);
  std::map<int, SymPoly> acc;
  auto add = [&](int deg, const SymPoly& f, const Rational& scale) {
    if (is_zero(scale) || f.is_zero()) return;
    auto it = acc.find(deg);
    if (it == acc.end())
      acc.emplace(deg, f.scaled(scale));
    else
      it->second = it->second + f.scaled(scale);
  };
  for (const auto& [lam, c] : s.coeffs) {
    if (lam.length() > m) continue;  // restriction to m variables
    int d = lam.size();
    Rational cc = c * alpha_power(ps.alpha, d);
    SymPoly js = table.jstar(lam);
    SymPoly img = lower_diff(js);
    // cross-mode check: the same image by coefficient transport
    SymPoly transported(m);
    for (const auto& mu : covered_by(lam))
      transported =
          transported + table.jstar(mu).scaled(lower_coef(lam, mu));
    if (!(img == transported))
      throw InternalError(std::string(who) +
                          ": differential and transported images of Jstar_" +
                          lam.str() + " disagree");
    add(d - 1, img, cc);
    add(d, js, -cc * eigen(lam));
  }
  Residual res;
  for (int k = 0; k <= s.maxdeg; ++k) {
    bool complete = k <= s.maxdeg - 1;
    auto it = acc.find(k);
    res.record({k, -1}, complete, it == acc.end() ? SymPoly(m) : it->second);
  }
  return res;
}
}  // namespace

Residual residual_theorem_B(const JackSeries& s, int m) {
  const ParamSet& ps = s.params;
  Rational alpha = ps.alpha;
  std::vector<Rational> a = ps.a, b = ps.b;
  auto lower_diff = [b, alpha](const SymPoly& f) {
    return apply_lowering_L(b, alpha, f);
  };
  auto lower_coef = [b, alpha, m](const Partition& lam, const Partition& mu) {
    Rational r = rho_skew(lam, mu, alpha);
    Rational acc = binom_up(lam, mu, alpha) * (Rational(m) + alpha * r) *
                   hooks(mu, alpha).j / hooks(lam, alpha).j;
    for (const auto& bk : b) acc *= r + bk;
    return acc;
  };
  auto eigen = [a, alpha, m](const Partition& lam) {
    return M_eigenvalue(lam, a, m, alpha);
  };
  return lowering_residual(s, m, lower_diff, lower_coef, eigen,
                           "residual_theorem_B");
}

// ---------------------------------------------------------------------------
// Theorem C and the appendix raising checks

namespace {
std::map<Partition, Rational> solve_by_cover_sums(int n, int maxdeg,
                                                  const Kernel& Ka,
                                                  const Kernel& Kb,
                                                  const char* who) {
  std::map<Partition, Rational> C;
  C[Partition()] = 1;
  for (int d = 1; d <= maxdeg; ++d) {
    for (const auto& lam : partitions_of(d, n)) {
      Rational num(0), den(0);
      for (const auto& mu : covered_by(lam)) {
        if (mu.length() > n) continue;
        num += C.at(mu) * Ka(lam, mu);
        den += Kb(lam, mu);
      }
      if (is_zero(den))
        throw DegenerateParameter(std::string(who) +
                                  ": vanishing cover sum at " + lam.str());
      C[lam] = num / den;
    }
  }
  return C;
}

/// Residual of (diagonal N) - (raising R): shared by Theorem C and Chat.
Residual raising_residual(const JackSeries& s, JackTable& table,
                          const std::function<SymPoly(const SymPoly&)>& raise_diff,
                          const Kernel& raise_coef,
                          const std::function<Rational(const Partition&)>& eigen,
                          const char* who) {
  const ParamSet& ps = s.params;
  std::map<int, SymPoly> acc;
  int n = ps.n;
  auto add = [&](int deg, const SymPoly& f, const Rational& scale) {
    if (is_zero(scale) || f.is_zero()) return;
    auto it = acc.find(deg);
    if (it == acc.end())
      acc.emplace(deg, f.scaled(scale));
    else
      it->second = it->second + f.scaled(scale);
  };
  for (const auto& [mu, c] : s.coeffs) {
    int d = mu.size();
    Rational cc = c * alpha_power(ps.alpha, d);
    SymPoly js = table.jstar(mu);
    SymPoly img = raise_diff(js);
    SymPoly transported(n);
    for (const auto& lam : covers_of(mu, n))
      transported = transported + table.jstar(lam).scaled(raise_coef(lam, mu));
    if (!(img == transported))
      throw InternalError(std::string(who) +
                          ": differential and transported images of Jstar_" +
                          mu.str() + " disagree");
    add(d, js, cc * eigen(mu));
    add(d + 1, img, -cc);
  }
  Residual res;
  for (int k = 0; k <= s.maxdeg + 1; ++k) {
    bool complete = k <= s.maxdeg;
    auto it = acc.find(k);
    res.record({k, -1}, complete, it == acc.end() ? SymPoly(n) : it->second);
  }
  return res;
}
}  // namespace

JackSeries solve_theorem_C(const ParamSet& params, int maxdeg) {
  const Rational& alpha = params.alpha;
  auto kernel = [&alpha](const std::vector<Rational>& cs) {
    return [&alpha, cs](const Partition& lam, const Partition& mu) {
      Rational r = rho_skew(lam, mu, alpha);
      Rational acc = binom_up(lam, mu, alpha);
      for (const auto& c : cs) acc *= r + c;
      return acc;
    };
  };
  JackSeries s;
  s.params = params;
  s.maxdeg = maxdeg;
  s.coeffs = solve_by_cover_sums(params.n, maxdeg, kernel(params.a),
                                 kernel(params.b), "solve_theorem_C");
  return s;
}

Residual residual_theorem_C(const JackSeries& s, JackTable& table) {
  const ParamSet& ps = s.params;
  Rational alpha = ps.alpha;
  std::vector<Rational> a = ps.a, b = ps.b;
  int n = ps.n;
  auto raise_diff = [a, alpha](const SymPoly& f) {
    return apply_raising_R(a, alpha, f);
  };
  auto raise_coef = [a, alpha](const Partition& lam, const Partition& mu) {
    Rational r = rho_skew(lam, mu, alpha);
    Rational acc = alpha * binom_up(lam, mu, alpha);
    for (const auto& ak : a) acc *= r + ak;
    return acc;
  };
  auto eigen = [b, alpha, n](const Partition& lam) {
    return N_eigenvalue(lam, b, n, alpha);
  };
  return raising_residual(s, table, raise_diff, raise_coef, eigen,
                          "residual_theorem_C");
}

// ---------------------------------------------------------------------------
// Appendix: 2F1hat

JackSeries solve_appendix_Chat(const Rational& a, const Rational& b,
                               const Rational& c, int n,
                               const Rational& alpha, int maxdeg) {
  auto Ka = [a, b, alpha](const Partition& lam,
                         const Partition& mu) -> Rational {
    Rational r = rho_skew(lam, mu, alpha);
    return (a + r) * (b + r) * binom_up(lam, mu, alpha);
  };
  auto Kb = [c, alpha](const Partition& lam,
                       const Partition& mu) -> Rational {
    return (c + mu.size()) * binom_up(lam, mu, alpha);
  };
  JackSeries s;
  s.params.a = {a, b};
  s.params.b = {c};
  s.params.n = n;
  s.params.alpha = alpha;
  s.maxdeg = maxdeg;
  s.coeffs = solve_by_cover_sums(n, maxdeg, Ka, Kb, "solve_appendix_Chat");
  return s;
}

JackSeries solve_appendix_Bhat(const Rational& a, const Rational& b,
                               const Rational& c, int n,
                               const Rational& alpha, int maxdeg) {
  auto Ka = [a, b, alpha](const Partition& lam,
                         const Partition& mu) -> Rational {
    Rational r = rho_skew(lam, mu, alpha);
    return (a + r) * (b + r) * binom_up(lam, mu, alpha) *
           hooks(mu, alpha).j / hooks(lam, alpha).j;
  };
  auto Kb = [c, alpha](const Partition& lam,
                       const Partition& mu) -> Rational {
    return (c + lam.size() - 1) * binom_up(lam, mu, alpha) *
           hooks(mu, alpha).j / hooks(lam, alpha).j;
  };
  JackSeries s;
  s.params.a = {a, b};
  s.params.b = {c};
  s.params.n = n;
  s.params.alpha = alpha;
  s.maxdeg = maxdeg;
  s.coeffs =
      solve_by_elimination(n, maxdeg, alpha, Ka, Kb, "solve_appendix_Bhat");
  return s;
}

Residual residual_appendix_Chat(const JackSeries& s, const Rational& c,
                                JackTable& table) {
  const ParamSet& ps = s.params;
  Rational alpha = ps.alpha;
  Rational a = ps.a.at(0), b = ps.a.at(1);
  // Rhat = (ad_box + a)(ad_box + b)(e1)
  std::vector<Rational> ab = {a, b};
  auto raise_diff = [ab, alpha](const SymPoly& f) {
    return apply_raising_R(ab, alpha, f);
  };
  auto raise_coef = [ab, alpha](const Partition& lam,
                                const Partition& mu) -> Rational {
    Rational r = rho_skew(lam, mu, alpha);
    return alpha * (ab[0] + r) * (ab[1] + r) * binom_up(lam, mu, alpha);
  };
  // Nhat = (c-1+E2)E2, applied differentially and compared against the
  // eigenvalue (c+|lambda|-1)|lambda| on every key.
  for (const auto& [lam, coef] : s.coeffs) {
    SymPoly js = table.jstar(lam);
    SymPoly g = apply_E(2, js);
    SymPoly nhat = g.scaled(c - 1) + apply_E(2, g);
    if (!(nhat == js.scaled(appendix_Nhat_eigenvalue(lam, c))))
      throw InternalError("residual_appendix_Chat: Nhat not diagonal on " +
                          lam.str());
  }
  auto eigen = [c](const Partition& lam) {
    return appendix_Nhat_eigenvalue(lam, c);
  };
  return raising_residual(s, table, raise_diff, raise_coef, eigen,
                          "residual_appendix_Chat");
}

Residual residual_appendix_Bhat(const JackSeries& s, const Rational& c,
                                int m) {
  const ParamSet& ps = s.params;
  Rational alpha = ps.alpha;
  Rational a = ps.a.at(0), b = ps.a.at(1);
  auto lower_diff = [c](const SymPoly& f) {
    SymPoly g = apply_E(1, f);
    return g.scaled(c) + apply_E(2, g);
  };
  auto lower_coef = [c, alpha, m](const Partition& lam,
                                 const Partition& mu) -> Rational {
    Rational r = rho_skew(lam, mu, alpha);
    return (c + lam.size() - 1) * binom_up(lam, mu, alpha) *
           (Rational(m) + alpha * r) * hooks(mu, alpha).j /
           hooks(lam, alpha).j;
  };
  std::vector<Rational> ab = {a, b};
  auto eigen = [ab, alpha, m](const Partition& mu) {
    return M_eigenvalue(mu, ab, m, alpha);
  };
  return lowering_residual(s, m, lower_diff, lower_coef, eigen,
                           "residual_appendix_Bhat");
}

// ---------------------------------------------------------------------------
// Stability counterexample

CounterexampleReport stability_counterexample(int maxdeg) {
  const int n = 2;
  // exp(x1+x2) truncated
  std::vector<SymPoly> exp_comp;  // component of degree k
  {
    SymPoly p1 = basis_p(1, n);
    SymPoly cur(n);
    cur.add_term(Partition(), Rational(1));
    Rational fact(1);
    for (int k = 0; k <= maxdeg; ++k) {
      if (k > 0) {
        cur = cur * p1;
        fact *= k;
      }
      exp_comp.push_back(cur.scaled(Rational(1) / fact));
    }
  }
  // h = (x1-x2)^2 = m_(2) - 2 m_(1,1)
  SymPoly h(n);
  h.add_term(Partition({2}), Rational(1));
  h.add_term(Partition({1, 1}), Rational(-2));
  // G = exp(p1) (1 + h), by homogeneous components
  std::vector<SymPoly> g_comp;
  for (int k = 0; k <= maxdeg; ++k) {
    SymPoly comp = exp_comp[k];
    if (k >= 2) comp = comp + (exp_comp[k - 2] * h).component(k);
    g_comp.push_back(comp);
  }

  CounterexampleReport rep;
  // (E1 - 2) G = 0 on complete degrees k <= maxdeg-1
  rep.passes_m2 = true;
  for (int k = 0; k + 1 <= maxdeg; ++k) {
    SymPoly r = apply_E(1, g_comp[k + 1]) - g_comp[k].scaled(Rational(2));
    if (!r.is_zero()) rep.passes_m2 = false;
  }
  // restriction to m = 1: (E1 - 1) G(x1, 0) must fail at degree 1
  {
    SymPoly r = apply_E(1, g_comp[2].restrict_vars(1)) -
                g_comp[1].restrict_vars(1);
    rep.fails_m1 = !r.is_zero();
  }
  // G differs from 0F0 = exp(p1)
  rep.differs_from_0F0 = false;
  for (int k = 0; k <= maxdeg; ++k)
    if (!(g_comp[k] == exp_comp[k])) rep.differs_from_0F0 = true;
  return rep;
}

}  // namespace jackhg
