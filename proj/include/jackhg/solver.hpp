#pragma once

#include <string>

#include "jackhg/operators.hpp"
#include "jackhg/series.hpp"

namespace jackhg {

/// Thrown when an over-determined consistency check fails; this would
/// falsify one of the verified identities rather than signal bad input.
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Per-slice residual bookkeeping. A slice is a degree (second = -1) or a
/// bidegree. Only complete slices carry a verdict; incomplete ones are
/// recorded so reports can show what the truncation cut off.
struct Residual {
  struct Slice {
    bool complete = false;
    bool zero = true;
    std::string detail;  // one offending term when nonzero
  };
  std::map<std::pair<int, int>, Slice> slices;

  void record(std::pair<int, int> key, bool complete, const SymPoly& value);
  void record(std::pair<int, int> key, bool complete, const BiPoly& value);
  bool ok() const;  // every complete slice is zero
  int checked() const;
  std::string first_failure() const;
};

/// Cover recursion C_lambda prod(rho+b_k) = C_mu prod(rho+a_k), checked
/// for consistency across every cover of every key.
DiagSeries solve_theorem_A(const ParamSet& params, int maxdeg);

/// Residual of L^(x) - R^(y) (mirrored: L^(y) - R^(x)) on the bi-m basis;
/// complete bidegree slices are (j, j+1) with j+1 <= maxdeg.
Residual residual_theorem_A(const DiagSeries& s, JackTable& table,
                            bool mirrored);

/// Reverse-lex elimination from the cover recursion and its rho-weighted
/// companion; at most two new unknowns per step, solved via the 2x2 system
/// whose determinant is K_b(l1) K_b(l2) (rho(l2/mu) - rho(l1/mu)).
JackSeries solve_theorem_B(const ParamSet& params, int maxdeg);

/// m-variable residual of L^(m)(b) - M^(m)(a) on the restricted series;
/// L is applied both differentially and by coefficient transport (the two
/// must agree); complete degrees are <= maxdeg - 1.
Residual residual_theorem_B(const JackSeries& s, int m);

/// Cover-sum recursion C_lambda sum prod(rho+b_k) binom =
/// sum C_mu prod(rho+a_k) binom.
JackSeries solve_theorem_C(const ParamSet& params, int maxdeg);

/// Residual of N(b) - R(a); N diagonal, R applied both differentially and
/// by coefficient transport; complete degrees are <= maxdeg.
Residual residual_theorem_C(const JackSeries& s, JackTable& table);

/// Appendix solvers for 2F1hat.
JackSeries solve_appendix_Chat(const Rational& a, const Rational& b,
                               const Rational& c, int n,
                               const Rational& alpha, int maxdeg);
JackSeries solve_appendix_Bhat(const Rational& a, const Rational& b,
                               const Rational& c, int n,
                               const Rational& alpha, int maxdeg);

/// Residual of Nhat(c) - Rhat(a,b) with Nhat = (c-1+E2)E2 applied
/// differentially and checked against its eigenvalue.
Residual residual_appendix_Chat(const JackSeries& s, const Rational& c,
                                JackTable& table);
/// m-variable residual of Lhat(c) - Mhat(a,b) with Lhat = (c+E2)E1 and
/// Mhat diagonal.
Residual residual_appendix_Bhat(const JackSeries& s, const Rational& c,
                                int m);

/// G(x1,x2) = exp(x1+x2)(1+(x1-x2)^2): satisfies the two-variable equation
/// (d1+d2-2)G = 0 yet fails the one-variable stability equation and is not
/// exp(p1), showing the stability condition is needed for uniqueness.
struct CounterexampleReport {
  bool passes_m2 = false;
  bool fails_m1 = false;
  bool differs_from_0F0 = false;
  bool ok() const { return passes_m2 && fails_m1 && differs_from_0F0; }
};
CounterexampleReport stability_counterexample(int maxdeg);

}  // namespace jackhg
