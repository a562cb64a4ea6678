#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "jackhg/jack.hpp"
#include "jackhg/operators.hpp"

using namespace jackhg;

TEST_CASE("apply_E basics") {
  int n = 3;
  // E1 m_(1) = n
  SymPoly img = apply_E(1, basis_m(Partition({1}), n));
  CHECK(img.coef(Partition()) == n);
  // E2 is the degree operator on any homogeneous polynomial
  SymPoly f = basis_m(Partition({2, 1}), n);
  CHECK(apply_E(2, f) == f.scaled(Rational(3)));
  // E3 m_(1) = m_(2) ... sum x_i^2 d_i (x_1+x_2+x_3) = p_2
  CHECK(apply_E(3, basis_m(Partition({1}), n)) == basis_p(2, n));
}

TEST_CASE("box eigenvalue on Jack polynomials") {
  for (const Rational& alpha : {rat(2), rat(8, 3), rat(1, 5)}) {
    for (int n = 1; n <= 3; ++n) {
      JackTable t(n, alpha);
      for (int d = 0; d <= 4; ++d) {
        for (const auto& lam : partitions_of(d, n)) {
          SymPoly j = t.jack(lam);
          CHECK(apply_box(j, alpha) == j.scaled(rho(lam, alpha)));
          CHECK(apply_E(2, j) == j.scaled(Rational(d)));
        }
      }
    }
  }
}

TEST_CASE("box on the truncated exponential of p1") {
  // box(exp p1) = (1/2) p2 exp(p1), checked on homogeneous slices
  int n = 2, maxdeg = 6;
  Rational alpha = rat(5, 2);
  SymPoly p1 = basis_p(1, n), p2 = basis_p(2, n);
  SymPoly expo(n), cur(n);
  cur.add_term(Partition(), Rational(1));
  expo = expo + cur;
  Rational fact(1);
  for (int k = 1; k <= maxdeg; ++k) {
    cur = cur * p1;
    fact *= k;
    expo = expo + cur.scaled(Rational(1) / fact);
  }
  SymPoly lhs = apply_box(expo, alpha);
  SymPoly rhs = (p2 * expo).scaled(rat(1, 2));
  for (int k = 0; k <= maxdeg; ++k)
    CHECK(lhs.component(k) == rhs.component(k));
}

TEST_CASE("E3 equals [box, e1] on Jstar") {
  int n = 2;
  Rational alpha = rat(7, 4);
  JackTable t(n, alpha);
  Partition mu({1});
  SymPoly js = t.jstar(mu);
  SymPoly lhs = apply_E(3, js);
  SymPoly rhs = apply_box(apply_mul_e1(js), alpha) -
                apply_mul_e1(apply_box(js, alpha));
  CHECK(lhs == rhs);
  // and both expand as alpha sum rho(lam/mu) binom Jstar_lam
  SymPoly expect(n);
  for (const auto& lam : covers_of(mu, n)) {
    Rational w = alpha * rho_skew(lam, mu, alpha) *
                 binom_up(lam, mu, alpha);
    expect = expect + t.jstar(lam).scaled(w);
  }
  CHECK(lhs == expect);
}

TEST_CASE("OpExpr parser matches the constructed operators") {
  int n = 2;
  Rational alpha = rat(5, 2);
  JackTable t(n, alpha);
  SymPoly f = t.jack(Partition({2, 1}));

  SUBCASE("atoms") {
    CHECK(OpExpr::parse("E1").apply(f, alpha) == apply_E(1, f));
    CHECK(OpExpr::parse("E3").apply(f, alpha) == apply_E(3, f));
    CHECK(OpExpr::parse("box").apply(f, alpha) == apply_box(f, alpha));
    CHECK(OpExpr::parse("e1").apply(f, alpha) == apply_mul_e1(f));
  }
  SUBCASE("scalar multiples and sums") {
    CHECK(OpExpr::parse("3/2*E1").apply(f, alpha) ==
          apply_E(1, f).scaled(rat(3, 2)));
    CHECK(OpExpr::parse("-box").apply(f, alpha) ==
          apply_box(f, alpha).scaled(Rational(-1)));
    CHECK(OpExpr::parse("E2+box").apply(f, alpha) ==
          apply_E(2, f) + apply_box(f, alpha));
    CHECK(OpExpr::parse("E2-box").apply(f, alpha) ==
          apply_E(2, f) - apply_box(f, alpha));
  }
  SUBCASE("composition runs right to left") {
    CHECK(OpExpr::parse("box.e1").apply(f, alpha) ==
          apply_box(apply_mul_e1(f), alpha));
  }
  SUBCASE("commutators") {
    SymPoly comm = apply_box(apply_mul_e1(f), alpha) -
                   apply_mul_e1(apply_box(f, alpha));
    CHECK(OpExpr::parse("[box,e1]").apply(f, alpha) == comm);
    CHECK(OpExpr::parse("ad(box,e1)").apply(f, alpha) == comm);
    CHECK(OpExpr::parse("ad(box,e1)^2").apply(f, alpha) ==
          apply_ad_power(OpExpr::atom_box(), OpExpr::atom_mul_e1(), 2, f,
                         alpha));
    CHECK(OpExpr::parse("ad(-box,E1)^2").apply(f, alpha) ==
          apply_ad_power(OpExpr::scaled(Rational(-1), OpExpr::atom_box()),
                         OpExpr::atom_E(1), 2, f, alpha));
  }
  SUBCASE("parse errors") {
    CHECK_THROWS_AS(OpExpr::parse(""), BadInput);
    CHECK_THROWS_AS(OpExpr::parse("E0"), BadInput);
    CHECK_THROWS_AS(OpExpr::parse("box+"), BadInput);
    CHECK_THROWS_AS(OpExpr::parse("foo"), BadInput);
  }
}

TEST_CASE("degree shifts") {
  CHECK(OpExpr::parse("E1").degree_shift() == -1);
  CHECK(OpExpr::parse("e1").degree_shift() == 1);
  CHECK(OpExpr::parse("box").degree_shift() == 0);
  CHECK(OpExpr::parse("E2").degree_shift() == 0);
  CHECK(OpExpr::parse("E3").degree_shift() == 1);
  CHECK(OpExpr::parse("box.e1").degree_shift() == 1);
  CHECK(OpExpr::parse("[box,e1]").degree_shift() == 1);
  // mixed-shift sums are rejected
  CHECK_THROWS_AS(OpExpr::parse("E1+e1").degree_shift(), BadInput);
}

TEST_CASE("elem_sym") {
  std::vector<Rational> v = {Rational(1), Rational(2), Rational(3)};
  CHECK(elem_sym(v, 0) == 1);
  CHECK(elem_sym(v, 1) == 6);
  CHECK(elem_sym(v, 2) == 11);
  CHECK(elem_sym(v, 3) == 6);
  CHECK(elem_sym(v, 4) == 0);
}

TEST_CASE("Debiard-Sekiguchi eigenvalues") {
  Rational alpha = rat(5, 3);
  int n = 3;
  Partition lam({3, 1});
  auto w = w_vector(lam, n, alpha);
  REQUIRE(w.size() == 3);
  CHECK(w[0] == 3);
  CHECK(w[1] == Rational(1) - Rational(1) / alpha);
  CHECK(w[2] == -Rational(2) / alpha);
  for (int r = 0; r <= 3; ++r)
    CHECK(d_r_eigenvalue(lam, r, n, alpha) == elem_sym(w, r));
  Rational tpar = rat(9, 2);
  Rational prod(1);
  for (const auto& wi : w) prod *= wi + tpar;
  CHECK(sekiguchi_eigenvalue(lam, tpar, n, alpha) == prod);
}

TEST_CASE("eigenvalue closed forms vs brute force, small sweep") {
  Rational alpha = rat(7, 5);
  for (int n = 1; n <= 3; ++n) {
    for (int d = 0; d <= 4; ++d) {
      for (const auto& mu : partitions_of(d, n)) {
        for (int r = 0; r <= 4; ++r) {
          CHECK(f_r_eigenvalue(mu, r, n, alpha) ==
                f_r_bruteforce(mu, r, n, alpha));
          CHECK(g_eigenvalue(mu, r, n, alpha) ==
                g_bruteforce(mu, r, n, alpha));
          CHECK(h_eigenvalue(mu, r, n, alpha) == h_bruteforce(mu, r, alpha));
        }
      }
    }
  }
}

TEST_CASE("eigenvalue special values") {
  Rational alpha = rat(9, 2);
  int n = 3;
  for (int d = 0; d <= 4; ++d) {
    for (const auto& mu : partitions_of(d, n)) {
      CHECK(g_eigenvalue(mu, 0, n, alpha) == n);
      CHECK(g_eigenvalue(mu, 1, n, alpha) == mu.size());
      CHECK(h_eigenvalue(mu, 0, n, alpha) == mu.size());
      CHECK(h_eigenvalue(mu, 1, n, alpha) ==
            Rational(2) * rho(mu, alpha));
    }
  }
}

TEST_CASE("lowering operator on Omega") {
  // L(Omega_lam) = sum_{mu <| lam} prod_k (rho(lam/mu) + b_k) binom Omega_mu
  Rational alpha = rat(4, 3);
  int n = 2;
  JackTable t(n, alpha);
  std::vector<Rational> b = {rat(5, 2), rat(7, 3)};
  for (int d = 1; d <= 4; ++d) {
    for (const auto& lam : partitions_of(d, n)) {
      SymPoly lhs = apply_lowering_L(b, alpha, t.omega(lam));
      SymPoly rhs(n);
      for (const auto& mu : covered_by(lam)) {
        Rational w = binom_up(lam, mu, alpha);
        for (const auto& bk : b) w *= rho_skew(lam, mu, alpha) + bk;
        rhs = rhs + t.omega(mu).scaled(w);
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("raising operator on Jstar") {
  // R(Jstar_mu) = alpha sum_{lam |> mu} prod_k (rho(lam/mu) + a_k) binom
  // Jstar_lam
  Rational alpha = rat(4, 3);
  int n = 2;
  JackTable t(n, alpha);
  std::vector<Rational> a = {rat(1, 2), Rational(3)};
  for (int d = 0; d <= 3; ++d) {
    for (const auto& mu : partitions_of(d, n)) {
      SymPoly lhs = apply_raising_R(a, alpha, t.jstar(mu));
      SymPoly rhs(n);
      for (const auto& lam : covers_of(mu, n)) {
        Rational w = alpha * binom_up(lam, mu, alpha);
        for (const auto& ak : a) w *= rho_skew(lam, mu, alpha) + ak;
        rhs = rhs + t.jstar(lam).scaled(w);
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("M and N eigen-operators against their definitions") {
  Rational alpha = rat(5, 4);
  int n = 2;
  std::vector<Rational> a = {rat(1, 3), rat(2, 5)};
  std::vector<Rational> b = {rat(11, 3)};
  for (int d = 0; d <= 4; ++d) {
    for (const auto& mu : partitions_of(d, n)) {
      // M = sum_{r<=p} e_{p-r}(a) G_{r,n}
      Rational m(0);
      for (int r = 0; r <= 2; ++r)
        m += elem_sym(a, 2 - r) * g_eigenvalue(mu, r, n, alpha);
      CHECK(M_eigenvalue(mu, a, n, alpha) == m);
      // N = sum_{r<=q} e_{q-r}(b) H_r
      Rational nn(0);
      for (int r = 0; r <= 1; ++r)
        nn += elem_sym(b, 1 - r) * h_eigenvalue(mu, r, n, alpha);
      CHECK(N_eigenvalue(mu, b, n, alpha) == nn);
    }
  }
}

TEST_CASE("N eigenvalue equals the lowering cover sum") {
  // N(b) eigenvalue on J_lam = sum_{mu <| lam} prod(rho+b_k) binom(lam,mu)
  Rational alpha = rat(8, 5);
  int n = 3;
  std::vector<Rational> b = {rat(3, 2), rat(13, 4)};
  for (int d = 1; d <= 4; ++d) {
    for (const auto& lam : partitions_of(d, n)) {
      Rational sum(0);
      for (const auto& mu : covered_by(lam)) {
        Rational w = binom_up(lam, mu, alpha);
        for (const auto& bk : b) w *= rho_skew(lam, mu, alpha) + bk;
        sum += w;
      }
      CHECK(N_eigenvalue(lam, b, n, alpha) == sum);
    }
  }
}

TEST_CASE("appendix scalars") {
  Rational c = rat(7, 2);
  CHECK(appendix_Lhat_scalar(Partition({2, 1}), c) == c + 2);
  CHECK(appendix_Nhat_eigenvalue(Partition({2, 1}), c) ==
        (c + 2) * Rational(3));
  CHECK(appendix_Nhat_eigenvalue(Partition(), c) == 0);
}
