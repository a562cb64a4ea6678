#pragma once

#include <random>
#include <vector>

#include "jackhg/partition.hpp"

namespace jackhg {

/// Parameters of a hypergeometric series: upper list a (length p), lower
/// list b (length q), variable count n, and alpha > 0.
struct ParamSet {
  std::vector<Rational> a;
  std::vector<Rational> b;
  int n = 1;
  Rational alpha = Rational(1);
};

/// One raw draw: alpha = u/v with u, v in 1..50; each parameter num/den
/// with num in 1..40, den in 1..8, shifted by a small integer.
ParamSet draw_params(std::mt19937_64& rng, int p, int q, int n);

/// True when the draw avoids every degeneracy the solvers can hit up to
/// the given truncation degree: nonzero (b_k)_lambda, nonzero
/// prod(rho(lambda/mu)+b_k) on adjacent pairs, and no Laplace-Beltrami
/// eigenvalue collision between comparable partitions.
bool params_generic(const ParamSet& ps, int maxdeg);

/// Rejection-samples draw_params until params_generic holds.
ParamSet draw_generic_params(std::mt19937_64& rng, int p, int q, int n,
                             int maxdeg);

}  // namespace jackhg
