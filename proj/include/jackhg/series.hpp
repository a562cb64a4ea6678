#pragma once

#include <map>
#include <utility>

#include "jackhg/jack.hpp"
#include "jackhg/params.hpp"

namespace jackhg {

/// One-alphabet series F(x) = sum C_lambda alpha^{|lambda|} Jstar_lambda(x),
/// truncated to |lambda| <= maxdeg and l(lambda) <= params.n.
struct JackSeries {
  ParamSet params;
  int maxdeg = 0;
  std::map<Partition, Rational> coeffs;
};

/// Two-alphabet series F(x,y) = sum C_lambda alpha^{|lambda|}
/// Omega_lambda(x) Jstar_lambda(y), same truncation.
struct DiagSeries {
  ParamSet params;
  int maxdeg = 0;
  std::map<Partition, Rational> coeffs;
};

/// Bi-symmetric polynomial over the (m_mu(x), m_nu(y)) basis.
using BiKey = std::pair<Partition, Partition>;
using BiPoly = std::map<BiKey, Rational>;

/// C_lambda = (a)_lambda / (b)_lambda for all keys; throws
/// DegenerateParameter naming the offending lambda and b_k on a pole.
JackSeries build_pFq(const ParamSet& params, int maxdeg);
DiagSeries build_pFq_diag(const ParamSet& params, int maxdeg);

/// Borodin-Olshanski coefficients C_lambda = (a)_lambda (b)_lambda /
/// (c)_{|lambda|} with an ordinary Pochhammer denominator.
JackSeries build_2F1hat(const Rational& a, const Rational& b,
                        const Rational& c, int n, const Rational& alpha,
                        int maxdeg);

/// Exact m-basis expansion of the truncated series. The table must carry
/// the series' (n, alpha).
SymPoly to_sympoly(const JackSeries& s, JackTable& table);
BiPoly diag_to_bipoly(const DiagSeries& s, JackTable& table);

BiPoly tensor(const SymPoly& fx, const SymPoly& fy);
void bipoly_add(BiPoly& acc, const BiPoly& other, const Rational& scale);

/// True iff expanding F in the Jack basis in x and in y yields a diagonal
/// coefficient matrix (only J_lambda(x) J_lambda(y) terms).
bool is_jack_diagonal(const BiPoly& f, JackTable& table);

}  // namespace jackhg
