#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "jackhg/jack.hpp"
#include "jackhg/operators.hpp"

using namespace jackhg;

namespace {
Rational factorial(int k) {
  Rational f(1);
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}
}  // namespace

TEST_CASE("degree-2 integral forms") {
  Rational alpha = rat(5, 2);
  JackTable t(2, alpha);
  // J_(2) = (1+alpha) m_(2) + 2 m_(1,1)
  SymPoly j2 = t.jack(Partition({2}));
  CHECK(j2.coef(Partition({2})) == Rational(1) + alpha);
  CHECK(j2.coef(Partition({1, 1})) == 2);
  // J_(1,1) = 2 m_(1,1)
  SymPoly j11 = t.jack(Partition({1, 1}));
  CHECK(j11.coef(Partition({1, 1})) == 2);
  CHECK(j11.coef(Partition({2})) == 0);
  // J of the empty partition is the constant 1
  CHECK(t.jack(Partition()).coef(Partition()) == 1);
}

TEST_CASE("trailing coefficient of m_(1^d) is d! when n >= d") {
  Rational alpha = rat(7, 3);
  JackTable t(4, alpha);
  for (int d = 1; d <= 4; ++d)
    for (const auto& lam : partitions_of(d, 4))
      CHECK(t.jack(lam).coef(Partition(std::vector<int>(d, 1))) ==
            factorial(d));
}

TEST_CASE("leading coefficient at m_lambda is the hook product c_lambda") {
  Rational alpha = rat(3, 4);
  JackTable t(3, alpha);
  for (int d = 0; d <= 5; ++d)
    for (const auto& lam : partitions_of(d, 3))
      CHECK(t.jack(lam).coef(lam) == hooks(lam, alpha).c);
}

TEST_CASE("C-forms sum to (x1+...+xn)^d") {
  for (int n = 1; n <= 3; ++n) {
    Rational alpha = rat(5, 3);
    Rational beta = Rational(2) / alpha;
    JackTable t(n, alpha);
    SymPoly e1 = basis_e(1, n);
    SymPoly power(n);
    power.add_term(Partition(), Rational(1));
    for (int d = 1; d <= 4; ++d) {
      power = power * e1;
      SymPoly sum(n);
      for (const auto& lam : partitions_of(d, n)) {
        Rational c = convert_form(Rational(1), lam, JackForm::C, JackForm::J,
                                  n, alpha, beta);
        sum = sum + t.jack(lam).scaled(c);
      }
      CHECK(sum == power);
    }
  }
}

TEST_CASE("evaluation at 1_n: closed form vs expansion") {
  Rational alpha = rat(9, 4);
  JackTable t(3, alpha);
  for (int d = 0; d <= 5; ++d)
    for (const auto& lam : partitions_of(d, 3))
      CHECK(t.jack(lam).eval_ones() == t.eval_ones(lam));
  // lambda longer than n is rejected
  CHECK_THROWS_AS(t.eval_ones(Partition({1, 1, 1, 1})), BadInput);
}

TEST_CASE("orthogonality under the alpha-Hall inner product") {
  Rational alpha = rat(4, 7);
  int n = 5;  // n >= degree, so the power-sum expansion is faithful
  JackTable t(n, alpha);
  std::vector<Partition> all;
  for (int d = 0; d <= 4; ++d)
    for (const auto& lam : partitions_of(d, n)) all.push_back(lam);
  for (size_t i = 0; i < all.size(); ++i) {
    for (size_t j = i; j < all.size(); ++j) {
      Rational ip = hall_inner(t.jack(all[i]), t.jack(all[j]), alpha);
      if (i == j)
        CHECK(ip == t.j_norm(all[i]));
      else
        CHECK(ip == 0);
    }
  }
}

TEST_CASE("stability in the number of variables") {
  Rational alpha = rat(11, 6);
  JackTable big(4, alpha);
  for (int m = 1; m < 4; ++m) {
    JackTable small(m, alpha);
    for (int d = 0; d <= 5; ++d) {
      for (const auto& lam : partitions_of(d, 4)) {
        SymPoly restricted = big.jack(lam).restrict_vars(m);
        if (lam.length() > m)
          CHECK(restricted.is_zero());
        else
          CHECK(restricted == small.jack(lam));
      }
    }
  }
}

TEST_CASE("alpha = 1 specialization is a hook multiple of Schur") {
  JackTable t(3, Rational(1));
  for (int d = 0; d <= 5; ++d)
    for (const auto& lam : partitions_of(d, 3))
      CHECK(t.jack(lam) ==
            schur(lam, 3).scaled(hooks(lam, Rational(1)).c));
}

TEST_CASE("lambda longer than n is rejected") {
  JackTable t(2, rat(5, 2));
  CHECK_THROWS_AS(t.jack(Partition({1, 1, 1})), BadInput);
}

TEST_CASE("to_jack_basis inverts the expansion") {
  Rational alpha = rat(8, 5);
  JackTable t(3, alpha);
  SymPoly f = t.jack(Partition({2, 1})).scaled(rat(3, 7)) +
              t.jack(Partition({1})).scaled(Rational(-2)) +
              t.jack(Partition({3}));
  auto coeffs = t.to_jack_basis(f);
  CHECK(coeffs.size() == 3);
  CHECK(coeffs[Partition({2, 1})] == rat(3, 7));
  CHECK(coeffs[Partition({1})] == Rational(-2));
  CHECK(coeffs[Partition({3})] == 1);
}

TEST_CASE("adjacent binomial coefficients") {
  Rational alpha = rat(5, 2);
  CHECK(binom_up(Partition({2}), Partition({1}), alpha) == 2);
  CHECK(binom_up(Partition({1, 1}), Partition({1}), alpha) == 2);
  CHECK(binom_up(Partition({1}), Partition(), alpha) == 1);
}

TEST_CASE("three binomial routes agree on adjacent pairs") {
  for (const Rational& alpha : {rat(2), rat(1, 2), rat(5, 3)}) {
    for (int d = 0; d <= 5; ++d) {
      for (const auto& mu : partitions_of(d, 6)) {
        for (const auto& lam : covers_of(mu, 6)) {
          Rational up = binom_up(lam, mu, alpha);
          CHECK(binom_down_formula(lam, mu, alpha, 6) == up);
          CHECK(binom_general(lam, mu, alpha) == up);
          // n-independence of the w-form
          CHECK(binom_down_formula(lam, mu, alpha, 8) == up);
        }
      }
    }
  }
}

TEST_CASE("general binomial coefficients") {
  Rational alpha = rat(5, 2);
  // recursion with the single chain (0) < (1) < (2): 2 b = 2 * 1
  CHECK(binom_general(Partition({2}), Partition(), alpha) == 1);
  // binom(lambda, lambda) = 1; binom(lambda, 0) = 1 is false in general,
  // but mu not contained in lambda gives 0
  CHECK(binom_general(Partition({2, 1}), Partition({2, 1}), alpha) == 1);
  CHECK(binom_general(Partition({2}), Partition({1, 1}), alpha) == 0);
  // sum over covered partitions equals |lambda|
  for (int d = 1; d <= 6; ++d) {
    for (const auto& lam : partitions_of(d, 4)) {
      Rational sum(0);
      for (const auto& mu : covered_by(lam))
        sum += binom_up(lam, mu, alpha);
      CHECK(sum == Rational(d));
    }
  }
}

TEST_CASE("general binomials from iterated e1 multiplication") {
  // (e1^k / k!) Jstar_mu = alpha^k sum binom(lam,mu) (j_mu/j_lam) Jstar_lam
  Rational alpha = rat(7, 4);
  int n = 3;
  JackTable t(n, alpha);
  Partition mu({1});
  SymPoly img = t.jstar(mu);
  Rational fact(1);
  for (int k = 1; k <= 2; ++k) {
    img = apply_mul_e1(img);
    fact *= k;
  }
  auto coeffs = t.to_jack_basis(img.scaled(Rational(1) / fact));
  for (const auto& lam : partitions_of(3, n)) {
    Rational expect = alpha * alpha * binom_general(lam, mu, alpha) /
                      t.j_norm(lam);
    CHECK(coeffs[lam] == expect);
  }
}

TEST_CASE("Pieri coefficients") {
  // e1 J_(0) = J_(1)
  CHECK(pieri_phi(Partition({1}), Partition(), Rational(1), 1) == 1);
  // result is zero when mu + eps_i is not a partition: (1,1)+eps_2 = (1,2)
  CHECK(pieri_phi(Partition({1, 1}), 2, rat(5, 2), 2) == 0);
  // e1 J_(1) = 1/(1+alpha) J_(2) + alpha/(1+alpha) J_(1,1) at any alpha
  {
    Rational al = rat(5, 2);
    CHECK(pieri_phi(Partition({1}), 1, al, 2) ==
          Rational(1) / (Rational(1) + al));
    CHECK(pieri_phi(Partition({1}), 2, al, 2) == al / (Rational(1) + al));
  }
  // two-oracle agreement on all adjacent pairs
  Rational alpha = rat(5, 2);
  int n = 4;
  for (int d = 0; d <= 4; ++d) {
    for (const auto& mu : partitions_of(d, n)) {
      for (const auto& lam : covers_of(mu, n)) {
        Rational expect = alpha * binom_up(lam, mu, alpha) *
                          hooks(mu, alpha).j / hooks(lam, alpha).j;
        CHECK(pieri_phi(lam, mu, alpha, n) == expect);
      }
    }
  }
}

TEST_CASE("e1 times J_mu expands with Pieri coefficients") {
  Rational alpha = rat(3, 2);
  int n = 3;
  JackTable t(n, alpha);
  for (int d = 0; d <= 3; ++d) {
    for (const auto& mu : partitions_of(d, n)) {
      SymPoly img = apply_mul_e1(t.jack(mu));
      auto coeffs = t.to_jack_basis(img);
      for (const auto& lam : covers_of(mu, n))
        CHECK(coeffs[lam] == pieri_phi(lam, mu, alpha, n));
    }
  }
}

TEST_CASE("form conversions") {
  Rational alpha = rat(5, 2);
  Rational beta = Rational(2) / alpha;
  int n = 3;
  Partition lam({2, 1});
  // identity conversion
  CHECK(convert_form(rat(4, 3), lam, JackForm::J, JackForm::J, n, alpha,
                     beta) == rat(4, 3));
  // coefficient 1 on J_lambda becomes j_lambda on Jstar (J = j Jstar)
  CHECK(convert_form(Rational(1), lam, JackForm::J, JackForm::Jstar, n, alpha,
                     beta) == hooks(lam, alpha).j);
  // and J(1_n) on Omega (J = J(1_n) Omega)
  JackTable t(n, alpha);
  CHECK(convert_form(Rational(1), lam, JackForm::J, JackForm::Omega, n, alpha,
                     beta) == t.eval_ones(lam));
  // round trips through every form
  for (JackForm f : {JackForm::J, JackForm::Jstar, JackForm::Omega,
                     JackForm::C}) {
    Rational there = convert_form(rat(7, 5), lam, JackForm::J, f, n, alpha,
                                  beta);
    CHECK(convert_form(there, lam, f, JackForm::J, n, alpha, beta) ==
          rat(7, 5));
  }
}

TEST_CASE("form parsing") {
  CHECK(jack_form_parse("J") == JackForm::J);
  CHECK(jack_form_parse("Jstar") == JackForm::Jstar);
  CHECK(jack_form_parse("Omega") == JackForm::Omega);
  CHECK(jack_form_parse("C") == JackForm::C);
  CHECK_THROWS_AS(jack_form_parse("Q"), BadInput);
  CHECK(jack_form_name(JackForm::Jstar) == "Jstar");
}
