#include "jackhg/series.hpp"

namespace jackhg {

namespace {
std::map<Partition, Rational> pfq_coeffs(const ParamSet& params, int maxdeg) {
  std::map<Partition, Rational> out;
  for (int d = 0; d <= maxdeg; ++d) {
    for (const auto& lam : partitions_of(d, params.n)) {
      Rational num(1), den(1);
      for (const auto& ak : params.a)
        num *= alpha_pochhammer(ak, lam, params.alpha);
      for (const auto& bk : params.b) {
        Rational f = alpha_pochhammer(bk, lam, params.alpha);
        if (is_zero(f))
          throw DegenerateParameter("pFq pole: (b_k)_lambda = 0 at lambda = " +
                                    lam.str() + ", b_k = " + rat_str(bk));
        den *= f;
      }
      out[lam] = num / den;
    }
  }
  return out;
}
}  // namespace

JackSeries build_pFq(const ParamSet& params, int maxdeg) {
  JackSeries s;
  s.params = params;
  s.maxdeg = maxdeg;
  s.coeffs = pfq_coeffs(params, maxdeg);
  return s;
}

DiagSeries build_pFq_diag(const ParamSet& params, int maxdeg) {
  DiagSeries s;
  s.params = params;
  s.maxdeg = maxdeg;
  s.coeffs = pfq_coeffs(params, maxdeg);
  return s;
}

JackSeries build_2F1hat(const Rational& a, const Rational& b,
                        const Rational& c, int n, const Rational& alpha,
                        int maxdeg) {
  JackSeries s;
  s.params.a = {a, b};
  s.params.b = {c};
  s.params.n = n;
  s.params.alpha = alpha;
  s.maxdeg = maxdeg;
  for (int d = 0; d <= maxdeg; ++d) {
    Rational den = pochhammer(c, d);
    if (is_zero(den))
      throw DegenerateParameter("2F1hat pole: (c)_" + std::to_string(d) +
                                " = 0, c = " + rat_str(c));
    for (const auto& lam : partitions_of(d, n)) {
      s.coeffs[lam] = alpha_pochhammer(a, lam, alpha) *
                      alpha_pochhammer(b, lam, alpha) / den;
    }
  }
  return s;
}

SymPoly to_sympoly(const JackSeries& s, JackTable& table) {
  if (table.n() != s.params.n || table.alpha() != s.params.alpha)
    throw BadInput("to_sympoly: table does not match the series parameters");
  SymPoly acc(table.n());
  for (const auto& [lam, c] : s.coeffs) {
    Rational pow(1);
    for (int i = 0; i < lam.size(); ++i) pow *= s.params.alpha;
    acc = acc + table.jstar(lam).scaled(c * pow);
  }
  return acc;
}

BiPoly tensor(const SymPoly& fx, const SymPoly& fy) {
  BiPoly out;
  for (const auto& [mu, cx] : fx.terms())
    for (const auto& [nu, cy] : fy.terms()) out[{mu, nu}] = cx * cy;
  return out;
}

void bipoly_add(BiPoly& acc, const BiPoly& other, const Rational& scale) {
  if (is_zero(scale)) return;
  for (const auto& [key, c] : other) {
    Rational& slot = acc[key];
    slot += c * scale;
    if (is_zero(slot)) acc.erase(key);
  }
}

BiPoly diag_to_bipoly(const DiagSeries& s, JackTable& table) {
  if (table.n() != s.params.n || table.alpha() != s.params.alpha)
    throw BadInput("diag_to_bipoly: table does not match the series");
  BiPoly acc;
  for (const auto& [lam, c] : s.coeffs) {
    Rational pow(1);
    for (int i = 0; i < lam.size(); ++i) pow *= s.params.alpha;
    bipoly_add(acc, tensor(table.omega(lam), table.jstar(lam)), c * pow);
  }
  return acc;
}

bool is_jack_diagonal(const BiPoly& f, JackTable& table) {
  BiPoly work = f;
  while (!work.empty()) {
    // Peel the y-side Jack expansion: find the key with maximal y-degree,
    // lex-greatest y-partition; only J_nu(y) reaches that monomial.
    Partition best_nu;
    int best_deg = -1;
    for (const auto& [key, c] : work) {
      int d = key.second.size();
      if (d > best_deg || (d == best_deg && best_nu < key.second)) {
        best_deg = d;
        best_nu = key.second;
      }
    }
    const Partition nu = best_nu;
    // A_nu(x) = (coefficient polynomial of m_nu(y)) / c_nu
    SymPoly a_nu(table.n());
    for (const auto& [key, c] : work)
      if (key.second == nu) a_nu.add_term(key.first, c);
    a_nu = a_nu.scaled(Rational(1) / hooks(nu, table.alpha()).c);
    for (const auto& [lam, c] : table.to_jack_basis(a_nu)) {
      if (!(lam == nu) && !is_zero(c)) return false;
    }
    bipoly_add(work, tensor(a_nu, table.jack(nu)), Rational(-1));
  }
  return true;
}

}  // namespace jackhg
