#include "jackhg/params.hpp"

namespace jackhg {

ParamSet draw_params(std::mt19937_64& rng, int p, int q, int n) {
  std::uniform_int_distribution<long> d50(1, 50), d40(1, 40), d8(1, 8),
      d5(0, 5);
  ParamSet ps;
  ps.n = n;
  ps.alpha = rat(d50(rng), d50(rng));
  auto draw_param = [&]() -> Rational {
    return rat(d40(rng), d8(rng)) + Rational(d5(rng));
  };
  for (int k = 0; k < p; ++k) ps.a.push_back(draw_param());
  for (int k = 0; k < q; ++k) ps.b.push_back(draw_param());
  return ps;
}

bool params_generic(const ParamSet& ps, int maxdeg) {
  if (ps.alpha <= 0) return false;
  // Pochhammer non-vanishing of the lower parameters, one degree past the
  // truncation so that cover sums stay generic too.
  for (int d = 0; d <= maxdeg + 1; ++d) {
    for (const auto& lam : partitions_of(d, ps.n)) {
      for (const auto& bk : ps.b) {
        if (is_zero(alpha_pochhammer(bk, lam, ps.alpha))) return false;
      }
    }
  }
  // rho(lambda/mu) + b_k != 0 on adjacent pairs.
  for (int d = 0; d <= maxdeg; ++d) {
    for (const auto& mu : partitions_of(d, ps.n)) {
      for (const auto& lam : covers_of(mu, ps.n)) {
        Rational r = rho_skew(lam, mu, ps.alpha);
        for (const auto& bk : ps.b)
          if (is_zero(r + bk)) return false;
      }
    }
  }
  // No eigenvalue collision rho(lambda) = rho(nu) among dominance-comparable
  // partitions of equal size. Incomparable pairs can collide for every
  // alpha — e.g. (3,3) and (4,1,1) — but the triangular solve never divides
  // by their gap, so they are harmless.
  for (int d = 2; d <= maxdeg + 1; ++d) {
    auto parts = partitions_of(d, ps.n);
    std::vector<Rational> vals;
    for (const auto& lam : parts) vals.push_back(rho(lam, ps.alpha));
    for (size_t i = 0; i < vals.size(); ++i)
      for (size_t j = i + 1; j < vals.size(); ++j) {
        if (!parts[i].dominates(parts[j]) && !parts[j].dominates(parts[i]))
          continue;
        if (vals[i] == vals[j]) return false;
      }
  }
  return true;
}

ParamSet draw_generic_params(std::mt19937_64& rng, int p, int q, int n,
                             int maxdeg) {
  for (int tries = 0; tries < 1000; ++tries) {
    ParamSet ps = draw_params(rng, p, q, n);
    if (params_generic(ps, maxdeg)) return ps;
  }
  throw DegenerateParameter("draw_generic_params: no generic draw found");
}

}  // namespace jackhg
