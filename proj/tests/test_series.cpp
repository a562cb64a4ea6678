#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "jackhg/series.hpp"
#include "jackhg/operators.hpp"

using namespace jackhg;

namespace {

Rational factorial(int k) {
  Rational f(1);
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

SymPoly exp_p1(int n, int maxdeg) {
  SymPoly p1 = basis_p(1, n);
  SymPoly out(n), cur(n);
  cur.add_term(Partition(), Rational(1));
  out = out + cur;
  for (int k = 1; k <= maxdeg; ++k) {
    cur = cur * p1;
    out = out + cur.scaled(Rational(1) / factorial(k));
  }
  return out;
}

ParamSet make_params(std::vector<Rational> a, std::vector<Rational> b, int n,
                     Rational alpha) {
  ParamSet ps;
  ps.a = std::move(a);
  ps.b = std::move(b);
  ps.n = n;
  ps.alpha = std::move(alpha);
  return ps;
}

}  // namespace

TEST_CASE("coefficients are Pochhammer ratios") {
  ParamSet ps = make_params({rat(1, 2), Rational(3)}, {rat(5, 3)}, 2,
                            rat(7, 4));
  JackSeries s = build_pFq(ps, 4);
  CHECK(s.coeffs.at(Partition()) == 1);
  for (const auto& [lam, c] : s.coeffs) {
    Rational expect = alpha_pochhammer(ps.a[0], lam, ps.alpha) *
                      alpha_pochhammer(ps.a[1], lam, ps.alpha) /
                      alpha_pochhammer(ps.b[0], lam, ps.alpha);
    CHECK(c == expect);
  }
  // truncation: keys are exactly the partitions with |lam| <= 4, l <= 2
  int count = 0;
  for (int d = 0; d <= 4; ++d) count += (int)partitions_of(d, 2).size();
  CHECK((int)s.coeffs.size() == count);
}

TEST_CASE("maxdeg 0 expands to the constant 1") {
  ParamSet ps = make_params({}, {}, 2, rat(3, 2));
  JackTable t(2, ps.alpha);
  SymPoly f = to_sympoly(build_pFq(ps, 0), t);
  CHECK(f.coef(Partition()) == 1);
  CHECK(f.max_degree() == 0);
}

TEST_CASE("pole in a lower parameter raises DegenerateParameter") {
  ParamSet ps = make_params({rat(1, 2)}, {Rational(0)}, 2, Rational(2));
  CHECK_THROWS_AS(build_pFq(ps, 2), DegenerateParameter);
  // a negative integer multiple hits the Pochhammer zero too
  ParamSet ps2 = make_params({rat(1, 2)}, {Rational(-1)}, 2, Rational(2));
  CHECK_THROWS_AS(build_pFq(ps2, 3), DegenerateParameter);
}

TEST_CASE("0F0 is the exponential of p1") {
  ParamSet ps = make_params({}, {}, 2, rat(9, 5));
  JackTable t(2, ps.alpha);
  CHECK(to_sympoly(build_pFq(ps, 5), t) == exp_p1(2, 5));
}

TEST_CASE("1F0 is the binomial series product") {
  // prod_i (1 - x_i)^{-a} truncated
  Rational a = rat(4, 7), alpha = rat(5, 2);
  int n = 2, d = 4;
  ParamSet ps = make_params({a}, {}, n, alpha);
  JackTable t(n, alpha);
  SymPoly lhs = to_sympoly(build_pFq(ps, d), t);
  Monomials prod;
  prod[Exponents(n, 0)] = 1;
  for (int i = 0; i < n; ++i) {
    Monomials next;
    for (const auto& [e, c] : prod) {
      for (int k = 0; true; ++k) {
        Exponents e2 = e;
        e2[i] += k;
        int total = 0;
        for (int v : e2) total += v;
        if (total > d) break;
        next[e2] += c * pochhammer(a, k) / factorial(k);
      }
    }
    prod = std::move(next);
  }
  CHECK(lhs == SymPoly::from_monomials(n, prod));
}

TEST_CASE("one-alphabet expansions are stable under variable restriction") {
  Rational alpha = rat(6, 5);
  std::vector<Rational> a = {rat(2, 3)}, b = {rat(9, 4)};
  for (int d = 0; d <= 5; ++d) {
    ParamSet ps3 = make_params(a, b, 3, alpha);
    ParamSet ps2 = make_params(a, b, 2, alpha);
    JackTable t3(3, alpha), t2(2, alpha);
    SymPoly big = to_sympoly(build_pFq(ps3, d), t3);
    SymPoly small = to_sympoly(build_pFq(ps2, d), t2);
    CHECK(big.restrict_vars(2) == small);
  }
}

TEST_CASE("two-alphabet series restricted to y = 1_n recovers one alphabet") {
  Rational alpha = rat(7, 5);
  ParamSet ps = make_params({rat(3, 2)}, {rat(13, 3)}, 2, alpha);
  int d = 4;
  JackTable t(2, alpha);
  BiPoly two = diag_to_bipoly(build_pFq_diag(ps, d), t);
  // evaluate the y-side at (1,1)
  std::map<Partition, Rational> at_ones;
  for (const auto& [key, c] : two) {
    Rational v = c * basis_m(key.second, 2).eval_ones();
    at_ones[key.first] += v;
  }
  SymPoly one = to_sympoly(build_pFq(ps, d), t);
  for (const auto& [lam, c] : at_ones)
    CHECK(c == one.coef(lam));
  for (const auto& [lam, c] : one.terms())
    CHECK(at_ones[lam] == c);
}

TEST_CASE("two-alphabet expansions are symmetric in x and y") {
  Rational alpha = rat(11, 4);
  ParamSet ps = make_params({rat(5, 3), Rational(2)}, {rat(17, 6)}, 2, alpha);
  JackTable t(2, alpha);
  BiPoly f = diag_to_bipoly(build_pFq_diag(ps, 4), t);
  BiPoly swapped;
  for (const auto& [key, c] : f) swapped[{key.second, key.first}] = c;
  CHECK(f == swapped);
}

TEST_CASE("2F1hat coefficients") {
  Rational a = rat(3, 2), b = rat(7, 5), c = rat(9, 2), alpha = rat(5, 3);
  int n = 2;
  JackSeries s = build_2F1hat(a, b, c, n, alpha, 3);
  CHECK(s.coeffs.at(Partition()) == 1);
  CHECK(s.coeffs.at(Partition({1})) == a * b / c);
  // lambda = (1,1): (a)(a - 1/alpha)(b)(b - 1/alpha) / (c (c+1))
  Rational inva = Rational(1) / alpha;
  CHECK(s.coeffs.at(Partition({1, 1})) ==
        a * (a - inva) * b * (b - inva) / (c * (c + 1)));
  // n = 1 reduces to the Gauss series coefficients
  JackSeries g = build_2F1hat(a, b, c, 1, alpha, 5);
  for (int k = 0; k <= 5; ++k) {
    Partition lam = k == 0 ? Partition() : Partition({k});
    CHECK(g.coeffs.at(lam) ==
          pochhammer(a, k) * pochhammer(b, k) / pochhammer(c, k));
  }
  // pole in (c)_k
  CHECK_THROWS_AS(build_2F1hat(a, b, Rational(-2), n, alpha, 4),
                  DegenerateParameter);
}

TEST_CASE("is_jack_diagonal") {
  Rational alpha = rat(8, 3);
  int n = 2;
  JackTable t(n, alpha);
  // any diagonal series expansion is diagonal
  ParamSet ps = make_params({rat(5, 2)}, {rat(19, 6)}, n, alpha);
  BiPoly diag = diag_to_bipoly(build_pFq_diag(ps, 3), t);
  CHECK(is_jack_diagonal(diag, t));
  // an off-diagonal pure tensor is not
  BiPoly off = tensor(t.jack(Partition({2})), t.jack(Partition({1, 1})));
  CHECK_FALSE(is_jack_diagonal(off, t));
  // a diagonal pure tensor is
  BiPoly on = tensor(t.jack(Partition({2})), t.jack(Partition({2})));
  CHECK(is_jack_diagonal(on, t));
  // Cauchy kernel prod (1 - x_i y_j)^{-1/alpha}, truncated per alphabet
  int d = 3;
  Rational inva = Rational(1) / alpha;
  std::map<std::pair<Exponents, Exponents>, Rational> prod;
  prod[{Exponents(n, 0), Exponents(n, 0)}] = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::map<std::pair<Exponents, Exponents>, Rational> next;
      for (const auto& [key, c] : prod) {
        for (int k = 0; true; ++k) {
          auto key2 = key;
          key2.first[i] += k;
          key2.second[j] += k;
          int tx = 0, ty = 0;
          for (int v : key2.first) tx += v;
          for (int v : key2.second) ty += v;
          if (tx > d || ty > d) break;
          next[key2] += c * pochhammer(inva, k) / factorial(k);
        }
      }
      prod = std::move(next);
    }
  }
  BiPoly cauchy;
  for (const auto& [key, c] : prod) {
    bool dec = true;
    for (int i = 1; i < n; ++i) {
      if (key.first[i - 1] < key.first[i]) dec = false;
      if (key.second[i - 1] < key.second[i]) dec = false;
    }
    if (!dec || is_zero(c)) continue;
    std::vector<int> px, py;
    for (int v : key.first)
      if (v > 0) px.push_back(v);
    for (int v : key.second)
      if (v > 0) py.push_back(v);
    cauchy[{Partition(px), Partition(py)}] = c;
  }
  CHECK(is_jack_diagonal(cauchy, t));
}

TEST_CASE("tensor and bipoly_add") {
  int n = 2;
  SymPoly f = basis_m(Partition({1}), n);
  SymPoly g = basis_m(Partition({2}), n).scaled(Rational(3));
  BiPoly fg = tensor(f, g);
  CHECK(fg.size() == 1);
  CHECK(fg.at({Partition({1}), Partition({2})}) == 3);
  BiPoly acc = fg;
  bipoly_add(acc, fg, Rational(-1));
  CHECK(acc.empty());
}
