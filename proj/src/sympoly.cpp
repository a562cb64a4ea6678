#include "jackhg/sympoly.hpp"

#include <algorithm>
#include <numeric>

namespace jackhg {

Rational SymPoly::coef(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymPoly::add_term(const Partition& lambda, const Rational& c) {
  if (lambda.length() > n_)
    throw BadInput("SymPoly: partition longer than variable count");
  if (jackhg::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (jackhg::is_zero(it->second)) terms_.erase(it);
  }
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
  if (n_ != o.n_) throw BadInput("SymPoly: mismatched variable counts");
  SymPoly r = *this;
  for (const auto& [lam, c] : o.terms_) r.add_term(lam, c);
  return r;
}

SymPoly SymPoly::operator-(const SymPoly& o) const {
  return *this + o.scaled(Rational(-1));
}

SymPoly SymPoly::scaled(const Rational& c) const {
  SymPoly r(n_);
  if (jackhg::is_zero(c)) return r;
  for (const auto& [lam, v] : terms_) r.terms_.emplace(lam, v * c);
  return r;
}

namespace {
/// All distinct permutations of lambda's parts padded with zeros to length n.
std::vector<Exponents> orbit(const Partition& lambda, int n) {
  Exponents e(n, 0);
  std::copy(lambda.parts().begin(), lambda.parts().end(), e.begin());
  std::sort(e.begin(), e.end());
  std::vector<Exponents> out;
  do {
    out.push_back(e);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

bool weakly_decreasing(const Exponents& e) {
  for (size_t i = 1; i < e.size(); ++i)
    if (e[i - 1] < e[i]) return false;
  return true;
}
}  // namespace

Monomials SymPoly::expand() const {
  Monomials out;
  for (const auto& [lam, c] : terms_)
    for (const auto& e : orbit(lam, n_)) out[e] = c;
  return out;
}

SymPoly SymPoly::from_monomials(int n, const Monomials& mono) {
  SymPoly r(n);
  for (const auto& [e, c] : mono) {
    if (!weakly_decreasing(e)) continue;
    r.add_term(Partition(e), c);
  }
  return r;
}

SymPoly SymPoly::operator*(const SymPoly& o) const {
  if (n_ != o.n_) throw BadInput("SymPoly: mismatched variable counts");
  // Expand one factor's orbits against the other's full monomial expansion;
  // by symmetry of the product, reading the weakly decreasing exponent
  // vectors recovers the m-basis coefficients.
  Monomials b = o.expand();
  Monomials prod;
  for (const auto& [lam, c] : terms_) {
    for (const auto& ea : orbit(lam, n_)) {
      for (const auto& [eb, cb] : b) {
        Exponents e(n_);
        for (int i = 0; i < n_; ++i) e[i] = ea[i] + eb[i];
        if (!weakly_decreasing(e)) continue;  // only the representatives matter
        prod[e] += c * cb;
      }
    }
  }
  SymPoly r(n_);
  for (auto& [e, c] : prod)
    if (!jackhg::is_zero(c)) r.add_term(Partition(e), c);
  return r;
}

Rational SymPoly::eval_ones() const {
  Rational acc(0);
  for (const auto& [lam, c] : terms_)
    acc += c * static_cast<long>(orbit(lam, n_).size());
  return acc;
}

Rational SymPoly::eval_point(const std::vector<Rational>& pt) const {
  if (static_cast<int>(pt.size()) != n_)
    throw BadInput("eval_point: wrong point dimension");
  Rational acc(0);
  for (const auto& [lam, c] : terms_) {
    Rational orbit_sum(0);
    for (const auto& e : orbit(lam, n_)) {
      Rational mono(1);
      for (int i = 0; i < n_; ++i)
        for (int k = 0; k < e[i]; ++k) mono *= pt[i];
      orbit_sum += mono;
    }
    acc += c * orbit_sum;
  }
  return acc;
}

SymPoly SymPoly::component(int degree) const {
  SymPoly r(n_);
  for (const auto& [lam, c] : terms_)
    if (lam.size() == degree) r.add_term(lam, c);
  return r;
}

int SymPoly::max_degree() const {
  int d = -1;
  for (const auto& [lam, c] : terms_) d = std::max(d, lam.size());
  return d;
}

SymPoly SymPoly::restrict_vars(int m) const {
  if (m < 1 || m > n_) throw BadInput("restrict_vars: bad variable count");
  SymPoly r(m);
  for (const auto& [lam, c] : terms_)
    if (lam.length() <= m) r.add_term(lam, c);
  return r;
}

SymPoly basis_m(const Partition& lambda, int n) {
  SymPoly r(n);
  r.add_term(lambda, Rational(1));
  return r;
}

SymPoly basis_e(int r, int n) {
  if (r < 0) throw BadInput("basis_e: negative r");
  SymPoly p(n);
  if (r == 0) {
    p.add_term(Partition(), Rational(1));
  } else if (r <= n) {
    p.add_term(Partition(std::vector<int>(r, 1)), Rational(1));
  }
  return p;
}

SymPoly basis_p(int r, int n) {
  if (r < 0) throw BadInput("basis_p: negative r");
  SymPoly p(n);
  if (r == 0)
    p.add_term(Partition(), Rational(n));
  else
    p.add_term(Partition({r}), Rational(1));
  return p;
}

SymPoly basis_h(int r, int n) {
  if (r < 0) throw BadInput("basis_h: negative r");
  SymPoly p(n);
  for (const auto& lam : partitions_of(r, n)) p.add_term(lam, Rational(1));
  return p;
}

namespace {
SymPoly jacobi_trudi_det(const std::vector<std::vector<SymPoly>>& mat, int n) {
  size_t k = mat.size();
  if (k == 0) {
    SymPoly one(n);
    one.add_term(Partition(), Rational(1));
    return one;
  }
  if (k == 1) return mat[0][0];
  SymPoly acc(n);
  int sign = 1;
  for (size_t col = 0; col < k; ++col, sign = -sign) {
    std::vector<std::vector<SymPoly>> minor;
    for (size_t i = 1; i < k; ++i) {
      std::vector<SymPoly> row;
      for (size_t j = 0; j < k; ++j)
        if (j != col) row.push_back(mat[i][j]);
      minor.push_back(std::move(row));
    }
    SymPoly term = mat[0][col] * jacobi_trudi_det(minor, n);
    acc = acc + term.scaled(Rational(sign));
  }
  return acc;
}
}  // namespace

SymPoly schur(const Partition& lambda, int n) {
  if (lambda.length() > n) throw BadInput("schur: partition longer than n");
  int l = lambda.length();
  std::vector<std::vector<SymPoly>> mat(l, std::vector<SymPoly>(l, SymPoly(n)));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) {
      int deg = lambda.part(i) - i + j;
      mat[i - 1][j - 1] = deg < 0 ? SymPoly(n) : basis_h(deg, n);
    }
  return jacobi_trudi_det(mat, n);
}

Rational z_lambda(const Partition& lambda) {
  Rational z(1);
  int run = 1;
  for (int i = 1; i <= lambda.length(); ++i) {
    z *= lambda.part(i);
    if (lambda.part(i) == lambda.part(i + 1)) {
      ++run;
    } else {
      for (int k = 2; k <= run; ++k) z *= k;
      run = 1;
    }
  }
  return z;
}

std::map<Partition, Rational> to_power_sums(const SymPoly& f) {
  std::map<Partition, Rational> out;
  int dmax = f.max_degree();
  if (dmax > f.n())
    throw BadInput("to_power_sums: need n >= degree for a faithful expansion");
  {
    Rational c0 = f.coef(Partition());
    if (!jackhg::is_zero(c0)) out[Partition()] = c0;
  }
  for (int d = 1; d <= dmax; ++d) {
    SymPoly comp = f.component(d);
    if (comp.is_zero()) continue;
    // p_mu expands in the m-basis over keys dominance-above mu, with m_mu
    // itself carried by a nonzero coefficient. Eliminating from the
    // lex-smallest key upward therefore fixes each c_mu in turn.
    std::vector<Partition> parts = reverse_lex_order(d, d);
    std::map<Partition, SymPoly> pexp;
    for (const auto& mu : parts) {
      SymPoly prod(f.n());
      prod.add_term(Partition(), Rational(1));
      for (int i = 1; i <= mu.length(); ++i)
        prod = prod * basis_p(mu.part(i), f.n());
      pexp.emplace(mu, std::move(prod));
    }
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
      const Partition& mu = *it;
      Rational lead = pexp.at(mu).coef(mu);
      if (jackhg::is_zero(lead))
        throw BadInput("to_power_sums: unexpected zero leading coefficient");
      Rational c = comp.coef(mu) / lead;
      if (!jackhg::is_zero(c)) {
        comp = comp - pexp.at(mu).scaled(c);
        out[mu] += c;
      }
    }
    if (!comp.is_zero())
      throw BadInput("to_power_sums: elimination left a nonzero remainder");
  }
  return out;
}

Rational hall_inner(const SymPoly& f, const SymPoly& g, const Rational& alpha) {
  auto pf = to_power_sums(f);
  auto pg = to_power_sums(g);
  Rational acc(0);
  for (const auto& [lam, cf] : pf) {
    auto it = pg.find(lam);
    if (it == pg.end()) continue;
    Rational weight = z_lambda(lam);
    for (int k = 0; k < lam.length(); ++k) weight *= alpha;
    acc += cf * it->second * weight;
  }
  return acc;
}

}  // namespace jackhg
