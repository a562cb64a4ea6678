#pragma once

#include <mutex>

#include "jackhg/sympoly.hpp"

namespace jackhg {

/// The four normalizations of Jack polynomials.
enum class JackForm { J, Jstar, Omega, C };

JackForm jack_form_parse(const std::string& name);
std::string jack_form_name(JackForm f);

/// Jack polynomials for a fixed (n, alpha), with memoized expansions.
/// Safe for concurrent use; all returned values are independent copies.
class JackTable {
 public:
  JackTable(int n, Rational alpha);

  int n() const { return n_; }
  const Rational& alpha() const { return alpha_; }

  /// Integral form J_lambda in the m-basis, by the triangular
  /// Laplace-Beltrami eigen-solve. Throws DegenerateParameter on an
  /// eigenvalue collision at this alpha.
  SymPoly jack(const Partition& lambda);

  SymPoly jstar(const Partition& lambda);   // J / j_lambda
  SymPoly omega(const Partition& lambda);   // J / J(1_n)

  /// Closed form J_lambda(1_n) = alpha^{|lambda|} (n/alpha)_lambda.
  Rational eval_ones(const Partition& lambda) const;

  Rational j_norm(const Partition& lambda) const;  // j_lambda

  /// Expresses a homogeneous-or-not symmetric polynomial in the J-basis.
  /// Works degree by degree, peeling dominance-maximal keys.
  std::map<Partition, Rational> to_jack_basis(const SymPoly& f);

 private:
  int n_;
  Rational alpha_;
  std::mutex mu_;
  std::map<Partition, SymPoly> memo_;
  std::map<Partition, SymPoly> box_m_memo_;

  SymPoly box_on_m(const Partition& mu);
};

/// Generalized binomial coefficient, adjacent case, by the arm/leg hook
/// ratio product over the row and column of the added box.
Rational binom_up(const Partition& lambda, const Partition& mu,
                  const Rational& alpha);

/// Adjacent binomial coefficient by the w-product closed form, where
/// mu = lambda - epsilon_{i0}; returns 0 when that is not a partition.
Rational binom_down_formula(const Partition& lambda, int i0,
                            const Rational& alpha, int n);
Rational binom_down_formula(const Partition& lambda, const Partition& mu,
                            const Rational& alpha, int n);

/// General binomial coefficient via the cover recursion
/// (|lambda|-|mu|) b = sum_{rho <| lambda} b_{lambda rho} b_{rho mu};
/// returns 0 when mu is not contained in lambda.
Rational binom_general(const Partition& lambda, const Partition& mu,
                       const Rational& alpha);

/// Pieri coefficient for the integral form: e_1 J_mu = sum phi J_lambda,
/// closed product formula with lambda = mu + epsilon_{i0}; 0 when that is
/// not a partition.
Rational pieri_phi(const Partition& mu, int i0, const Rational& alpha, int n);
Rational pieri_phi(const Partition& lambda, const Partition& mu,
                   const Rational& alpha, int n);

/// Rescales a coefficient of the `from` form of J_lambda into the `to`
/// form. beta is only consulted for the C form (alpha = 2/beta).
Rational convert_form(const Rational& coef, const Partition& lambda,
                      JackForm from, JackForm to, int n, const Rational& alpha,
                      const Rational& beta);

}  // namespace jackhg
