#include "jackhg/jack.hpp"

#include <algorithm>

#include "jackhg/operators.hpp"

namespace jackhg {

JackForm jack_form_parse(const std::string& name) {
  if (name == "J") return JackForm::J;
  if (name == "Jstar") return JackForm::Jstar;
  if (name == "Omega") return JackForm::Omega;
  if (name == "C") return JackForm::C;
  throw BadInput("unknown Jack form: " + name);
}

std::string jack_form_name(JackForm f) {
  switch (f) {
    case JackForm::J:
      return "J";
    case JackForm::Jstar:
      return "Jstar";
    case JackForm::Omega:
      return "Omega";
    case JackForm::C:
      return "C";
  }
  throw BadInput("corrupt Jack form");
}

JackTable::JackTable(int n, Rational alpha) : n_(n), alpha_(std::move(alpha)) {
  if (n_ < 1) throw BadInput("JackTable: n must be >= 1");
  if (is_zero(alpha_)) throw BadInput("JackTable: alpha = 0");
}

SymPoly JackTable::box_on_m(const Partition& mu) {
  auto it = box_m_memo_.find(mu);
  if (it != box_m_memo_.end()) return it->second;
  SymPoly img = apply_box(basis_m(mu, n_), alpha_);
  box_m_memo_.emplace(mu, img);
  return img;
}

SymPoly JackTable::jack(const Partition& lambda) {
  if (lambda.length() > n_)
    throw BadInput("jack: partition " + lambda.str() + " has more than " +
                   std::to_string(n_) + " rows");
  std::lock_guard<std::mutex> lock(mu_);
  auto it = memo_.find(lambda);
  if (it != memo_.end()) return it->second;

  // Solve box(f) = rho(lambda) f downward in dominance. Reverse-lex
  // descending order is a linear extension of dominance, and box sends
  // m_mu to rho(mu) m_mu plus strictly dominance-lower keys, so each new
  // coefficient depends only on already-solved ones.
  int d = lambda.size();
  Rational rho_top = rho(lambda, alpha_);
  SymPoly f(n_);
  f.add_term(lambda, hooks(lambda, alpha_).c);

  bool seen_top = false;
  for (const auto& nu : reverse_lex_order(d, n_)) {
    if (nu == lambda) {
      seen_top = true;
      continue;
    }
    if (!seen_top || !lambda.dominates(nu)) continue;
    Rational s(0);
    for (const auto& [mu, k] : f.terms()) s += box_on_m(mu).coef(nu) * k;
    if (is_zero(s)) continue;
    Rational gap = rho_top - rho(nu, alpha_);
    if (is_zero(gap))
      throw DegenerateParameter("jack: eigenvalue collision between " +
                                lambda.str() + " and " + nu.str() +
                                " at alpha = " + rat_str(alpha_));
    f.add_term(nu, s / gap);
  }
  memo_.emplace(lambda, f);
  return f;
}

SymPoly JackTable::jstar(const Partition& lambda) {
  return jack(lambda).scaled(Rational(1) / j_norm(lambda));
}

SymPoly JackTable::omega(const Partition& lambda) {
  Rational ones = eval_ones(lambda);
  if (is_zero(ones))
    throw DegenerateParameter("omega: J_" + lambda.str() + "(1_n) = 0");
  return jack(lambda).scaled(Rational(1) / ones);
}

Rational JackTable::eval_ones(const Partition& lambda) const {
  if (lambda.length() > n_)
    throw BadInput("eval_ones: partition longer than n");
  Rational pow(1);
  for (int i = 0; i < lambda.size(); ++i) pow *= alpha_;
  return pow * alpha_pochhammer(Rational(n_) / alpha_, lambda, alpha_);
}

Rational JackTable::j_norm(const Partition& lambda) const {
  return hooks(lambda, alpha_).j;
}

std::map<Partition, Rational> JackTable::to_jack_basis(const SymPoly& f) {
  if (f.n() != n_) throw BadInput("to_jack_basis: variable count mismatch");
  std::map<Partition, Rational> out;
  SymPoly g = f;
  while (!g.is_zero()) {
    // The lex-greatest key of the top homogeneous component is
    // dominance-maximal, so only J_lambda contributes to it.
    SymPoly top = g.component(g.max_degree());
    const Partition& lambda = top.terms().rbegin()->first;
    Rational c = top.terms().rbegin()->second / hooks(lambda, alpha_).c;
    out[lambda] = c;
    g = g - jack(lambda).scaled(c);
  }
  return out;
}

namespace {
Rational c_lower(const Partition& p, int i, int j, const Rational& alpha) {
  BoxStats s = box_stats(p, i, j);
  return alpha * s.arm + s.leg + 1;
}
Rational c_upper(const Partition& p, int i, int j, const Rational& alpha) {
  BoxStats s = box_stats(p, i, j);
  return alpha * (s.arm + 1) + s.leg;
}

/// Row of the single box of lambda/mu; -1 if lambda does not cover mu.
int cover_row(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size() + 1) return -1;
  int row = -1;
  for (int i = 1; i <= lambda.length(); ++i) {
    int diff = lambda.part(i) - mu.part(i);
    if (diff == 0) continue;
    if (diff != 1 || row != -1) return -1;
    row = i;
  }
  return row;
}
}  // namespace

Rational binom_up(const Partition& lambda, const Partition& mu,
                  const Rational& alpha) {
  int i0 = cover_row(lambda, mu);
  if (i0 < 0)
    throw BadInput("binom_up: " + lambda.str() + " does not cover " +
                   mu.str());
  int j0 = lambda.part(i0);
  Rational acc(1);
  for (int i = 1; i <= i0 - 1; ++i)
    acc *= c_lower(lambda, i, j0, alpha) / c_lower(mu, i, j0, alpha);
  for (int j = 1; j <= j0 - 1; ++j)
    acc *= c_upper(lambda, i0, j, alpha) / c_upper(mu, i0, j, alpha);
  return acc;
}

Rational binom_down_formula(const Partition& lambda, int i0,
                            const Rational& alpha, int n) {
  if (i0 < 1 || i0 > n)
    throw BadInput("binom_down_formula: row out of range");
  if (lambda.length() > n)
    throw BadInput("binom_down_formula: partition longer than n");
  if (lambda.part(i0) == 0) return Rational(0);
  auto w = w_vector(lambda, n, alpha);
  Rational acc = w[i0 - 1] + Rational(n - 1) / alpha;
  for (int i = 1; i <= n; ++i) {
    if (i == i0) continue;
    Rational den = w[i - 1] - w[i0 - 1];
    if (is_zero(den))
      throw DegenerateParameter("binom_down_formula: repeated w at alpha = " +
                                rat_str(alpha));
    acc *= (den + Rational(1) / alpha) / den;
  }
  return acc;
}

Rational binom_down_formula(const Partition& lambda, const Partition& mu,
                            const Rational& alpha, int n) {
  int i0 = cover_row(lambda, mu);
  if (i0 < 0)
    throw BadInput("binom_down_formula: " + lambda.str() +
                   " does not cover " + mu.str());
  return binom_down_formula(lambda, i0, alpha, n);
}

namespace {
Rational binom_general_impl(const Partition& lambda, const Partition& mu,
                            const Rational& alpha,
                            std::map<Partition, Rational>& memo) {
  auto it = memo.find(mu);
  if (it != memo.end()) return it->second;
  Rational val(0);
  if (mu == lambda) {
    val = 1;
  } else if (lambda.contains(mu)) {
    // (|lambda|-|mu|) b_{lambda mu} = sum_{rho covering mu, rho <= lambda}
    //   b_{lambda rho} b_{rho mu}
    for (const auto& rho_p : covers_of(mu, lambda.length())) {
      if (!lambda.contains(rho_p)) continue;
      val += binom_general_impl(lambda, rho_p, alpha, memo) *
             binom_up(rho_p, mu, alpha);
    }
    val /= Rational(lambda.size() - mu.size());
  }
  memo.emplace(mu, val);
  return val;
}
}  // namespace

Rational binom_general(const Partition& lambda, const Partition& mu,
                       const Rational& alpha) {
  if (!lambda.contains(mu)) return Rational(0);
  std::map<Partition, Rational> memo;
  return binom_general_impl(lambda, mu, alpha, memo);
}

Rational pieri_phi(const Partition& mu, int i0, const Rational& alpha, int n) {
  if (i0 < 1 || i0 > n) throw BadInput("pieri_phi: row out of range");
  if (mu.length() > n) throw BadInput("pieri_phi: partition longer than n");
  auto w = w_vector(mu, n, alpha);
  Rational den0 = w[i0 - 1] + Rational(n) / alpha;
  if (is_zero(den0))
    throw DegenerateParameter("pieri_phi: vanishing w + n/alpha at alpha = " +
                              rat_str(alpha));
  Rational acc = (Rational(1) / alpha) / den0;
  for (int i = 1; i <= n; ++i) {
    if (i == i0) continue;
    Rational den = w[i0 - 1] - w[i - 1];
    if (is_zero(den))
      throw DegenerateParameter("pieri_phi: repeated w at alpha = " +
                                rat_str(alpha));
    acc *= (den + Rational(1) / alpha) / den;
  }
  return acc;
}

Rational pieri_phi(const Partition& lambda, const Partition& mu,
                   const Rational& alpha, int n) {
  int i0 = cover_row(lambda, mu);
  if (i0 < 0)
    throw BadInput("pieri_phi: " + lambda.str() + " does not cover " +
                   mu.str());
  return pieri_phi(mu, i0, alpha, n);
}

Rational convert_form(const Rational& coef, const Partition& lambda,
                      JackForm from, JackForm to, int n, const Rational& alpha,
                      const Rational& beta) {
  if (from == to) return coef;
  // scale s_F with F_lambda = s_F * J_lambda
  auto scale = [&](JackForm f) -> Rational {
    switch (f) {
      case JackForm::J:
        return Rational(1);
      case JackForm::Jstar:
        return Rational(1) / hooks(lambda, alpha).j;
      case JackForm::Omega: {
        Rational pow(1);
        for (int i = 0; i < lambda.size(); ++i) pow *= alpha;
        Rational ones =
            pow * alpha_pochhammer(Rational(n) / alpha, lambda, alpha);
        if (is_zero(ones))
          throw DegenerateParameter("convert_form: J_" + lambda.str() +
                                    "(1_n) = 0");
        return Rational(1) / ones;
      }
      case JackForm::C: {
        if (is_zero(beta)) throw BadInput("convert_form: C form needs beta");
        Rational pow(1), fact(1);
        for (int i = 1; i <= lambda.size(); ++i) {
          pow *= Rational(2) / beta;
          fact *= i;
        }
        return pow * fact / hooks(lambda, alpha).j;
      }
    }
    throw BadInput("corrupt Jack form");
  };
  // coef_from * F_from = coef_to * F_to as polynomials
  return coef * scale(from) / scale(to);
}

}  // namespace jackhg
