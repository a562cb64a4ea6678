#pragma once

#include <memory>
#include <string>
#include <vector>

#include "jackhg/sympoly.hpp"
#include "jackhg/uniseries.hpp"

namespace jackhg {

/// E_r = sum_i x_i^{r-1} d/dx_i, applied termwise to the full monomial
/// expansion and re-orbited.
SymPoly apply_E(int r, const SymPoly& f);

/// Laplace-Beltrami operator. The singular part is evaluated per unordered
/// variable pair with the telescoping divided-difference identity, so no
/// rational function is ever formed; symmetric input gives symmetric
/// polynomial output.
SymPoly apply_box(const SymPoly& f, const Rational& alpha);

/// Multiplication by e_1 = x_1 + ... + x_n.
SymPoly apply_mul_e1(const SymPoly& f);

/// Composable operator expressions for the CLI and the commutator tests.
/// Grammar accepted by parse: E1, E2, ..., box, e1, -X, c*X, X+Y, X.Y
/// (composition), ad(A,B)^r, [A,B].
class OpExpr {
 public:
  static OpExpr atom_E(int r);
  static OpExpr atom_box();
  static OpExpr atom_mul_e1();
  static OpExpr scaled(const Rational& c, OpExpr inner);
  static OpExpr sum(OpExpr a, OpExpr b);
  static OpExpr compose(OpExpr outer, OpExpr inner);  // outer after inner
  static OpExpr ad_power(OpExpr a, OpExpr b, int r);

  SymPoly apply(const SymPoly& f, const Rational& alpha) const;

  /// Degree shift when homogeneous (-1 for E1, +1 for e1, 0 for box/E2);
  /// throws BadInput for mixed-shift sums.
  int degree_shift() const;

  static OpExpr parse(const std::string& text);

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

/// Iterated commutator ad_A^r(B) applied to f via the signed binomial
/// expansion sum_k (-1)^k C(r,k) A^{r-k} B A^k.
SymPoly apply_ad_power(const OpExpr& a, const OpExpr& b, int r,
                       const SymPoly& f, const Rational& alpha);

/// Lowering operator L = sum_{r<=q} e_{q-r}(b) ad_{-box}^r(E1).
SymPoly apply_lowering_L(const std::vector<Rational>& b, const Rational& alpha,
                         const SymPoly& f);
/// Raising operator R = sum_{r<=p} e_{p-r}(a) ad_{box}^r(e1).
SymPoly apply_raising_R(const std::vector<Rational>& a, const Rational& alpha,
                        const SymPoly& f);

/// Elementary symmetric polynomial e_r of a list of scalars.
Rational elem_sym(const std::vector<Rational>& vals, int r);

/// w_i(lambda) = lambda_i - (i-1)/alpha for i = 1..n.
std::vector<Rational> w_vector(const Partition& lambda, int n,
                               const Rational& alpha);

/// Debiard-Sekiguchi eigenvalues: D(t) acts by prod_i (w_i + t), and
/// D_r by e_r(w).
Rational sekiguchi_eigenvalue(const Partition& lambda, const Rational& t,
                              int n, const Rational& alpha);
Rational d_r_eigenvalue(const Partition& lambda, int r, int n,
                        const Rational& alpha);

/// f_r(mu) closed form from its generating function
/// F(mu;s) = (prod (1-(w_i-1/a)s)/(1-w_i s) - prod (w_i+(n-1)/a)/(w_i+n/a))
///           / (1+ns/a).
Rational f_r_eigenvalue(const Partition& mu, int r, int n,
                        const Rational& alpha);

/// g_{r,n}(mu): coefficient of s^{r+1} in
/// G_n(mu;s) = alpha prod (1-(w_i-1/a)s)/(1-w_i s),
/// expanded as a truncated power series.
Rational g_eigenvalue(const Partition& mu, int r, int n, const Rational& alpha);

/// H_r(lambda): coefficient of s^r in
/// H(lambda;s) = (a/s^2)(1+(1-1/a)s - (1+(1+(n-1)/a)s) Htilde(lambda;s)).
Rational h_eigenvalue(const Partition& lambda, int r, int n,
                      const Rational& alpha);

/// Htilde_r(lambda): coefficient of s^r in
/// Htilde(lambda;s) = prod (1-(w_i-1+1/a)s)/(1-(w_i-1)s).
Rational htilde_eigenvalue(const Partition& lambda, int r, int n,
                           const Rational& alpha);

/// Eigenvalue of M = sum_r e_{p-r}(a) G_{r,n} on J_mu.
Rational M_eigenvalue(const Partition& mu, const std::vector<Rational>& a,
                      int n, const Rational& alpha);

/// Eigenvalue of N = sum_r e_{q-r}(b) H_r on J_lambda.
Rational N_eigenvalue(const Partition& lambda, const std::vector<Rational>& b,
                      int n, const Rational& alpha);

/// Brute-force cover sums; the independent oracles for the closed forms.
Rational f_r_bruteforce(const Partition& mu, int r, int n,
                        const Rational& alpha);
Rational g_bruteforce(const Partition& mu, int r, int n, const Rational& alpha);
Rational h_bruteforce(const Partition& lambda, int r, const Rational& alpha);

/// Appendix operators for the Borodin-Olshanski series: the scalar
/// (c+|lambda|-1) that Lhat scales the lowered image by, and the Nhat
/// eigenvalue (c+|lambda|-1)|lambda|.
Rational appendix_Lhat_scalar(const Partition& lambda, const Rational& c);
Rational appendix_Nhat_eigenvalue(const Partition& lambda, const Rational& c);

}  // namespace jackhg
