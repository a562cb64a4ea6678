#pragma once

#include <compare>
#include <string>
#include <vector>

#include "jackhg/rational.hpp"

namespace jackhg {

/// Integer partition in canonical form: weakly decreasing positive parts,
/// trailing zeros stripped. The empty vector is the zero partition (0).
class Partition {
 public:
  Partition() = default;
  /// Accepts weakly decreasing non-negative parts; strips trailing zeros.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;              // |lambda|
  int part(int i) const {        // 1-based, 0 beyond the length
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
  }

  Partition conjugate() const;

  bool contains(const Partition& mu) const;
  bool covers(const Partition& mu) const;
  bool dominates(const Partition& mu) const;  // requires equal sizes

  /// lambda + epsilon_i (1-based row); result may fail to be a partition,
  /// in which case std::nullopt-like behavior is signaled by `ok`.
  bool add_box(int row, Partition* out) const;
  bool remove_box(int row, Partition* out) const;

  std::string str() const;  // e.g. [3,1]

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Arm, co-arm, leg, co-leg of box (i,j) (1-based). Throws BadInput if the
/// box lies outside the diagram.
struct BoxStats {
  int arm, coarm, leg, coleg;
};
BoxStats box_stats(const Partition& lambda, int i, int j);

/// All partitions in P_n covering mu, ordered by the row of the added box.
std::vector<Partition> covers_of(const Partition& mu, int n);

/// All partitions covered by lambda, ordered by the row of the removed box.
std::vector<Partition> covered_by(const Partition& lambda);

/// Sum of alpha-contents: sum_i ( l_i(l_i-1)/2 - l_i(i-1)/alpha ).
Rational rho(const Partition& lambda, const Rational& alpha);
/// rho(lambda) - rho(mu), the content of the added box when lambda |> mu.
Rational rho_skew(const Partition& lambda, const Partition& mu,
                  const Rational& alpha);

/// Ordinary Pochhammer (a)_m.
Rational pochhammer(const Rational& a, int m);
/// alpha-Pochhammer (a;alpha)_lambda = prod_i (a-(i-1)/alpha)_{lambda_i}.
Rational alpha_pochhammer(const Rational& a, const Partition& lambda,
                          const Rational& alpha);
/// Product over a tuple of parameters.
Rational alpha_pochhammer(const std::vector<Rational>& as,
                          const Partition& lambda, const Rational& alpha);

/// a + rho(lambda/mu); equals (a)_lambda/(a)_mu for lambda |> mu.
Rational poch_ratio(const Rational& a, const Partition& lambda,
                    const Partition& mu, const Rational& alpha);

/// alpha-hook products c_lambda, c'_lambda and j_lambda = c c'.
struct HookProducts {
  Rational c, cprime, j;
};
HookProducts hooks(const Partition& lambda, const Rational& alpha);

/// All partitions of size d with length <= n.
std::vector<Partition> partitions_of(int d, int n);

/// Same set, sorted reverse-lexicographically descending: (6) > (5,1) > ...
std::vector<Partition> reverse_lex_order(int d, int n);

}  // namespace jackhg
