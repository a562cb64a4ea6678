#pragma once

#include <map>
#include <vector>

#include "jackhg/partition.hpp"

namespace jackhg {

/// Exponent vector of a single monomial, length n.
using Exponents = std::vector<int>;
/// Full monomial expansion: exponent vector -> coefficient.
using Monomials = std::map<Exponents, Rational>;

/// Symmetric polynomial in n variables in the monomial-orbit basis:
/// a map from partitions (length <= n) to the coefficient of m_lambda.
/// Zero coefficients are never stored.
class SymPoly {
 public:
  explicit SymPoly(int n) : n_(n) {
    if (n < 1) throw BadInput("SymPoly: n must be >= 1");
  }

  int n() const { return n_; }
  const std::map<Partition, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of m_lambda (0 if absent).
  Rational coef(const Partition& lambda) const;
  /// Adds c to the coefficient of m_lambda; erases the key if it cancels.
  void add_term(const Partition& lambda, const Rational& c);

  SymPoly operator+(const SymPoly& o) const;
  SymPoly operator-(const SymPoly& o) const;
  SymPoly operator*(const SymPoly& o) const;
  SymPoly scaled(const Rational& c) const;

  bool operator==(const SymPoly& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
  }

  /// Expand all orbits into individual monomials.
  Monomials expand() const;
  /// Inverse of expand(): reads coefficients at weakly decreasing exponent
  /// vectors. The input must be symmetric for this to be faithful.
  static SymPoly from_monomials(int n, const Monomials& mono);

  Rational eval_ones() const;
  Rational eval_point(const std::vector<Rational>& pt) const;

  /// Homogeneous component of the given degree.
  SymPoly component(int degree) const;
  int max_degree() const;  // -1 for the zero polynomial

  /// Restriction to the first m variables (sets x_{m+1..n} = 0): drops the
  /// keys with length > m.
  SymPoly restrict_vars(int m) const;

 private:
  int n_;
  std::map<Partition, Rational> terms_;
};

SymPoly basis_m(const Partition& lambda, int n);
SymPoly basis_e(int r, int n);  // zero for r > n
SymPoly basis_p(int r, int n);
SymPoly basis_h(int r, int n);
/// Schur polynomial via the Jacobi-Trudi determinant det(h_{lambda_i - i + j}).
SymPoly schur(const Partition& lambda, int n);

/// Expansion of (homogeneous components of) f in the power-sum basis.
/// Faithful only when n >= deg f; throws BadInput otherwise.
std::map<Partition, Rational> to_power_sums(const SymPoly& f);

/// alpha-Hall inner product <f,g> with <p_lambda,p_mu> = delta z_lambda
/// alpha^{l(lambda)}. Mixed degrees pair to zero.
Rational hall_inner(const SymPoly& f, const SymPoly& g, const Rational& alpha);

/// z_lambda = prod_r r^{m_r} m_r!.
Rational z_lambda(const Partition& lambda);

}  // namespace jackhg
