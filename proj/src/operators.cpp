#include "jackhg/operators.hpp"

#include <cctype>

#include "jackhg/jack.hpp"

namespace jackhg {

SymPoly apply_E(int r, const SymPoly& f) {
  if (r < 1) throw BadInput("apply_E: r must be >= 1");
  Monomials mono = f.expand();
  Monomials out;
  int n = f.n();
  for (const auto& [e, c] : mono) {
    for (int i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      Exponents d = e;
      d[i] += r - 2;  // x_i^{r-1} d/dx_i: exponent drops 1, gains r-1
      Rational& slot = out[d];
      slot += c * e[i];
      if (is_zero(slot)) out.erase(d);
    }
  }
  return SymPoly::from_monomials(n, out);
}

SymPoly apply_mul_e1(const SymPoly& f) {
  SymPoly e1(f.n());
  e1.add_term(Partition({1}), Rational(1));
  return f * e1;
}

SymPoly apply_box(const SymPoly& f, const Rational& alpha) {
  if (is_zero(alpha)) throw BadInput("apply_box: alpha = 0");
  int n = f.n();
  Monomials mono = f.expand();
  Monomials out;
  auto add = [&out](const Exponents& e, const Rational& c) {
    if (is_zero(c)) return;
    Rational& slot = out[e];
    slot += c;
    if (is_zero(slot)) out.erase(e);
  };

  // (1/2) sum_i x_i^2 d^2/dx_i^2 : monomial to monomial.
  for (const auto& [e, c] : mono)
    for (int i = 0; i < n; ++i)
      if (e[i] >= 2)
        add(e, c * rat(static_cast<long>(e[i]) * (e[i] - 1), 2));

  // Singular part, per unordered pair {i,j}:
  //   (1/alpha) x_i x_j (d_i f - d_j f) / (x_i - x_j).
  // The difference is antisymmetric under i <-> j, so each monomial pair
  // x_i^a x_j^b - x_i^b x_j^a (a > b) telescopes to
  // sum_{k=b}^{a-1} x_i^k x_j^{a+b-1-k}.
  Rational inv_alpha = Rational(1) / alpha;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // numerator g = d_i f - d_j f, as a monomial map
      Monomials g;
      auto gadd = [&g](const Exponents& e, const Rational& c) {
        if (is_zero(c)) return;
        Rational& slot = g[e];
        slot += c;
        if (is_zero(slot)) g.erase(e);
      };
      for (const auto& [e, c] : mono) {
        if (e[i] > 0) {
          Exponents d = e;
          --d[i];
          gadd(d, c * e[i]);
        }
        if (e[j] > 0) {
          Exponents d = e;
          --d[j];
          gadd(d, c * Rational(-e[j]));
        }
      }
      // divide by (x_i - x_j) via the telescoping identity, then
      // multiply by x_i x_j / alpha
      for (const auto& [e, c] : g) {
        int a = e[i], b = e[j];
        if (a <= b) continue;  // the (b,a) mate carries -c; handle once
        for (int k = b; k <= a - 1; ++k) {
          Exponents d = e;
          d[i] = k + 1;              // +1 from the x_i factor
          d[j] = a + b - 1 - k + 1;  // +1 from the x_j factor
          add(d, c * inv_alpha);
        }
      }
    }
  }
  return SymPoly::from_monomials(n, out);
}

// ---------------------------------------------------------------------------
// OpExpr

struct OpExpr::Node {
  enum Kind { kE, kBox, kMulE1, kScaled, kSum, kCompose, kAdPower } kind;
  int r = 0;  // for kE (the E_r index) and kAdPower (the power)
  Rational scale;
  std::shared_ptr<const Node> a, b;
};

OpExpr OpExpr::atom_E(int r) {
  if (r < 1) throw BadInput("OpExpr: E_r needs r >= 1");
  auto n = std::make_shared<Node>();
  n->kind = Node::kE;
  n->r = r;
  OpExpr e;
  e.node_ = n;
  return e;
}

OpExpr OpExpr::atom_box() {
  auto n = std::make_shared<Node>();
  n->kind = Node::kBox;
  OpExpr e;
  e.node_ = n;
  return e;
}

OpExpr OpExpr::atom_mul_e1() {
  auto n = std::make_shared<Node>();
  n->kind = Node::kMulE1;
  OpExpr e;
  e.node_ = n;
  return e;
}

OpExpr OpExpr::scaled(const Rational& c, OpExpr inner) {
  auto n = std::make_shared<Node>();
  n->kind = Node::kScaled;
  n->scale = c;
  n->a = inner.node_;
  OpExpr e;
  e.node_ = n;
  return e;
}

OpExpr OpExpr::sum(OpExpr a, OpExpr b) {
  auto n = std::make_shared<Node>();
  n->kind = Node::kSum;
  n->a = a.node_;
  n->b = b.node_;
  OpExpr e;
  e.node_ = n;
  return e;
}

OpExpr OpExpr::compose(OpExpr outer, OpExpr inner) {
  auto n = std::make_shared<Node>();
  n->kind = Node::kCompose;
  n->a = outer.node_;
  n->b = inner.node_;
  OpExpr e;
  e.node_ = n;
  return e;
}

OpExpr OpExpr::ad_power(OpExpr a, OpExpr b, int r) {
  if (r < 0) throw BadInput("OpExpr: ad power must be >= 0");
  auto n = std::make_shared<Node>();
  n->kind = Node::kAdPower;
  n->r = r;
  n->a = a.node_;
  n->b = b.node_;
  OpExpr e;
  e.node_ = n;
  return e;
}

namespace {
long long binomial_ll(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}
}  // namespace

SymPoly OpExpr::apply(const SymPoly& f, const Rational& alpha) const {
  const Node& nd = *node_;
  switch (nd.kind) {
    case Node::kE:
      return apply_E(nd.r, f);
    case Node::kBox:
      return apply_box(f, alpha);
    case Node::kMulE1:
      return apply_mul_e1(f);
    case Node::kScaled: {
      OpExpr inner;
      inner.node_ = nd.a;
      return inner.apply(f, alpha).scaled(nd.scale);
    }
    case Node::kSum: {
      OpExpr a, b;
      a.node_ = nd.a;
      b.node_ = nd.b;
      return a.apply(f, alpha) + b.apply(f, alpha);
    }
    case Node::kCompose: {
      OpExpr outer, inner;
      outer.node_ = nd.a;
      inner.node_ = nd.b;
      return outer.apply(inner.apply(f, alpha), alpha);
    }
    case Node::kAdPower: {
      OpExpr a, b;
      a.node_ = nd.a;
      b.node_ = nd.b;
      return apply_ad_power(a, b, nd.r, f, alpha);
    }
  }
  throw BadInput("OpExpr: corrupt node");
}

int OpExpr::degree_shift() const {
  const Node& nd = *node_;
  switch (nd.kind) {
    case Node::kE:
      return nd.r - 2;
    case Node::kBox:
      return 0;
    case Node::kMulE1:
      return 1;
    case Node::kScaled: {
      OpExpr a;
      a.node_ = nd.a;
      return a.degree_shift();
    }
    case Node::kSum: {
      OpExpr a, b;
      a.node_ = nd.a;
      b.node_ = nd.b;
      int sa = a.degree_shift(), sb = b.degree_shift();
      if (sa != sb) throw BadInput("OpExpr: sum of mixed degree shifts");
      return sa;
    }
    case Node::kCompose: {
      OpExpr a, b;
      a.node_ = nd.a;
      b.node_ = nd.b;
      return a.degree_shift() + b.degree_shift();
    }
    case Node::kAdPower: {
      OpExpr a, b;
      a.node_ = nd.a;
      b.node_ = nd.b;
      if (nd.r > 0 && a.degree_shift() != 0)
        throw BadInput("OpExpr: ad with non-grade-preserving outer operator");
      return b.degree_shift();
    }
  }
  throw BadInput("OpExpr: corrupt node");
}

SymPoly apply_ad_power(const OpExpr& a, const OpExpr& b, int r,
                       const SymPoly& f, const Rational& alpha) {
  if (r < 0) throw BadInput("apply_ad_power: r must be >= 0");
  SymPoly acc(f.n());
  for (int k = 0; k <= r; ++k) {
    SymPoly g = f;
    for (int t = 0; t < k; ++t) g = a.apply(g, alpha);
    g = b.apply(g, alpha);
    for (int t = 0; t < r - k; ++t) g = a.apply(g, alpha);
    Rational coef = rat(binomial_ll(r, k));
    if (k % 2 == 1) coef = -coef;
    acc = acc + g.scaled(coef);
  }
  return acc;
}

namespace {

class OpParser {
 public:
  explicit OpParser(const std::string& s) : s_(s) {}

  OpExpr run() {
    OpExpr e = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return e;
  }

 private:
  const std::string& s_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) {
    throw BadInput("operator parse error at position " +
                   std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool peek_word(const std::string& w) {
    skip();
    if (s_.compare(pos_, w.size(), w) != 0) return false;
    size_t end = pos_ + w.size();
    if (end < s_.size() &&
        (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_'))
      return false;
    return true;
  }

  bool eat_word(const std::string& w) {
    if (!peek_word(w)) return false;
    pos_ += w.size();
    return true;
  }

  long integer() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected an integer");
    return std::stol(s_.substr(start, pos_ - start));
  }

  OpExpr expr() {
    OpExpr e = term();
    for (;;) {
      if (eat('+')) {
        e = OpExpr::sum(e, term());
      } else if (eat('-')) {
        e = OpExpr::sum(e, OpExpr::scaled(Rational(-1), term()));
      } else {
        return e;
      }
    }
  }

  OpExpr term() {
    OpExpr e = factor();
    while (eat('.')) e = OpExpr::compose(e, factor());
    return e;
  }

  OpExpr factor() {
    skip();
    if (eat('-')) return OpExpr::scaled(Rational(-1), factor());
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      long num = integer();
      long den = 1;
      if (eat('/')) den = integer();
      if (!eat('*')) fail("expected '*' after a scalar");
      return OpExpr::scaled(rat(num, den), factor());
    }
    return primary();
  }

  OpExpr primary() {
    skip();
    if (eat('(')) {
      OpExpr e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (eat('[')) {
      OpExpr a = expr();
      if (!eat(',')) fail("expected ',' in commutator");
      OpExpr b = expr();
      if (!eat(']')) fail("expected ']'");
      return OpExpr::ad_power(a, b, 1);
    }
    if (eat_word("ad")) {
      if (!eat('(')) fail("expected '(' after ad");
      OpExpr a = expr();
      if (!eat(',')) fail("expected ',' in ad");
      OpExpr b = expr();
      if (!eat(')')) fail("expected ')'");
      int r = 1;
      if (eat('^')) r = static_cast<int>(integer());
      return OpExpr::ad_power(a, b, r);
    }
    if (eat_word("box")) return OpExpr::atom_box();
    if (eat_word("e1")) return OpExpr::atom_mul_e1();
    if (pos_ < s_.size() && s_[pos_] == 'E') {
      ++pos_;
      return OpExpr::atom_E(static_cast<int>(integer()));
    }
    fail("expected an operator");
  }
};

}  // namespace

OpExpr OpExpr::parse(const std::string& text) { return OpParser(text).run(); }

Rational elem_sym(const std::vector<Rational>& vals, int r) {
  int n = static_cast<int>(vals.size());
  if (r < 0 || r > n) return Rational(0);
  // e_k via the Newton-free DP over prefixes
  std::vector<Rational> e(r + 1, Rational(0));
  e[0] = 1;
  for (int i = 0; i < n; ++i)
    for (int k = std::min(r, i + 1); k >= 1; --k) e[k] += vals[i] * e[k - 1];
  return e[r];
}

SymPoly apply_lowering_L(const std::vector<Rational>& b, const Rational& alpha,
                         const SymPoly& f) {
  int q = static_cast<int>(b.size());
  OpExpr neg_box = OpExpr::scaled(Rational(-1), OpExpr::atom_box());
  OpExpr E1 = OpExpr::atom_E(1);
  SymPoly acc(f.n());
  for (int r = 0; r <= q; ++r) {
    Rational c = elem_sym(b, q - r);
    if (is_zero(c)) continue;
    acc = acc + apply_ad_power(neg_box, E1, r, f, alpha).scaled(c);
  }
  return acc;
}

SymPoly apply_raising_R(const std::vector<Rational>& a, const Rational& alpha,
                        const SymPoly& f) {
  int p = static_cast<int>(a.size());
  OpExpr box = OpExpr::atom_box();
  OpExpr e1 = OpExpr::atom_mul_e1();
  SymPoly acc(f.n());
  for (int r = 0; r <= p; ++r) {
    Rational c = elem_sym(a, p - r);
    if (is_zero(c)) continue;
    acc = acc + apply_ad_power(box, e1, r, f, alpha).scaled(c);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Eigenvalues

std::vector<Rational> w_vector(const Partition& lambda, int n,
                               const Rational& alpha) {
  if (lambda.length() > n) throw BadInput("w_vector: partition longer than n");
  std::vector<Rational> w(n);
  for (int i = 1; i <= n; ++i)
    w[i - 1] = Rational(lambda.part(i)) - Rational(i - 1) / alpha;
  return w;
}

Rational sekiguchi_eigenvalue(const Partition& lambda, const Rational& t,
                              int n, const Rational& alpha) {
  Rational acc(1);
  for (const auto& w : w_vector(lambda, n, alpha)) acc *= w + t;
  return acc;
}

Rational d_r_eigenvalue(const Partition& lambda, int r, int n,
                        const Rational& alpha) {
  if (r < 0 || r > n) throw BadInput("d_r_eigenvalue: need 0 <= r <= n");
  return elem_sym(w_vector(lambda, n, alpha), r);
}

namespace {
/// prod_i (1 - (w_i - shift)s) / (1 - (w_i - base)s) truncated to `order`.
UniSeries w_quotient_series(const std::vector<Rational>& w,
                            const Rational& num_offset,
                            const Rational& den_offset, int order) {
  UniSeries num = UniSeries::constant(Rational(1), order);
  UniSeries den = UniSeries::constant(Rational(1), order);
  for (const auto& wi : w) {
    num = num * UniSeries::linear(Rational(1), -(wi - num_offset), order);
    den = den * UniSeries::linear(Rational(1), -(wi - den_offset), order);
  }
  return num * den.inverse();
}
}  // namespace

Rational f_r_eigenvalue(const Partition& mu, int r, int n,
                        const Rational& alpha) {
  if (r < 0) throw BadInput("f_r_eigenvalue: r must be >= 0");
  auto w = w_vector(mu, n, alpha);
  int order = r;
  // prod (1-(w_i-1/a)s)/(1-w_i s) minus the constant subtrahend, over 1+ns/a
  UniSeries quot =
      w_quotient_series(w, Rational(1) / alpha, Rational(0), order);
  Rational subtrahend(1);
  for (const auto& wi : w) {
    Rational den = wi + Rational(n) / alpha;
    if (is_zero(den))
      throw DegenerateParameter("f_r_eigenvalue: vanishing w_i + n/alpha");
    subtrahend *= (wi + Rational(n - 1) / alpha) / den;
  }
  UniSeries top = quot - UniSeries::constant(subtrahend, order);
  UniSeries bottom =
      UniSeries::linear(Rational(1), Rational(n) / alpha, order);
  return (top * bottom.inverse())[r];
}

Rational g_eigenvalue(const Partition& mu, int r, int n, const Rational& alpha) {
  if (r < 0) throw BadInput("g_eigenvalue: r must be >= 0");
  auto w = w_vector(mu, n, alpha);
  int order = r + 1;
  UniSeries g = w_quotient_series(w, Rational(1) / alpha, Rational(0), order)
                    .scaled(alpha);
  return g[r + 1];
}

Rational htilde_eigenvalue(const Partition& lambda, int r, int n,
                           const Rational& alpha) {
  if (r < 0) throw BadInput("htilde_eigenvalue: r must be >= 0");
  auto w = w_vector(lambda, n, alpha);
  // numerator offset 1 - 1/alpha, denominator offset 1
  return w_quotient_series(w, Rational(1) - Rational(1) / alpha, Rational(1),
                           r)[r];
}

Rational h_eigenvalue(const Partition& lambda, int r, int n,
                      const Rational& alpha) {
  if (r < 0) throw BadInput("h_eigenvalue: r must be >= 0");
  auto w = w_vector(lambda, n, alpha);
  int order = r + 2;
  UniSeries ht = w_quotient_series(w, Rational(1) - Rational(1) / alpha,
                                   Rational(1), order);
  UniSeries pre = UniSeries::linear(
      Rational(1), Rational(1) + Rational(n - 1) / alpha, order);
  UniSeries inner = UniSeries::linear(Rational(1), Rational(1) - Rational(1) / alpha,
                                      order) -
                    pre * ht;
  // H(lambda;s) = (alpha/s^2) * inner; coefficient of s^r is alpha*inner[r+2].
  if (!is_zero(inner[0]) || !is_zero(inner[1]))
    throw DegenerateParameter("h_eigenvalue: generating function not O(s^2)");
  return alpha * inner[r + 2];
}

Rational M_eigenvalue(const Partition& mu, const std::vector<Rational>& a,
                      int n, const Rational& alpha) {
  int p = static_cast<int>(a.size());
  Rational acc(0);
  for (int r = 0; r <= p; ++r)
    acc += elem_sym(a, p - r) * g_eigenvalue(mu, r, n, alpha);
  return acc;
}

Rational N_eigenvalue(const Partition& lambda, const std::vector<Rational>& b,
                      int n, const Rational& alpha) {
  int q = static_cast<int>(b.size());
  Rational acc(0);
  for (int r = 0; r <= q; ++r)
    acc += elem_sym(b, q - r) * h_eigenvalue(lambda, r, n, alpha);
  return acc;
}

Rational f_r_bruteforce(const Partition& mu, int r, int n,
                        const Rational& alpha) {
  Rational jmu = hooks(mu, alpha).j;
  Rational acc(0);
  for (const auto& lambda : covers_of(mu, n)) {
    Rational term = binom_up(lambda, mu, alpha) * jmu / hooks(lambda, alpha).j;
    Rational rho = rho_skew(lambda, mu, alpha);
    for (int t = 0; t < r; ++t) term *= rho;
    acc += term;
  }
  return alpha * acc;
}

Rational g_bruteforce(const Partition& mu, int r, int n,
                      const Rational& alpha) {
  auto ones = [&](const Partition& p) -> Rational {
    Rational v(1);
    for (int i = 0; i < p.size(); ++i) v *= alpha;
    return v * alpha_pochhammer(Rational(n) / alpha, p, alpha);
  };
  Rational jmu = hooks(mu, alpha).j;
  Rational mu_ones = ones(mu);
  Rational acc(0);
  for (const auto& lambda : covers_of(mu, n)) {
    Rational term = binom_up(lambda, mu, alpha) * ones(lambda) /
                    hooks(lambda, alpha).j * jmu / mu_ones;
    Rational rho = rho_skew(lambda, mu, alpha);
    for (int t = 0; t < r; ++t) term *= rho;
    acc += term;
  }
  return alpha * acc;
}

Rational h_bruteforce(const Partition& lambda, int r, const Rational& alpha) {
  Rational acc(0);
  for (const auto& mu : covered_by(lambda)) {
    Rational term = binom_up(lambda, mu, alpha);
    Rational rho = rho_skew(lambda, mu, alpha);
    for (int t = 0; t < r; ++t) term *= rho;
    acc += term;
  }
  return acc;
}

Rational appendix_Lhat_scalar(const Partition& lambda, const Rational& c) {
  return c + lambda.size() - 1;
}

Rational appendix_Nhat_eigenvalue(const Partition& lambda, const Rational& c) {
  return (c + lambda.size() - 1) * lambda.size();
}

}  // namespace jackhg
