#pragma once

#include <vector>

#include "jackhg/rational.hpp"

namespace jackhg {

/// Truncated univariate formal power series over Q; coefficients 0..order
/// inclusive. Used for the generating-function variables s and t.
class UniSeries {
 public:
  explicit UniSeries(int order) : coef_(order + 1, Rational(0)) {
    if (order < 0) throw BadInput("UniSeries: negative order");
  }

  int order() const { return static_cast<int>(coef_.size()) - 1; }
  const Rational& operator[](int k) const { return coef_.at(k); }
  Rational& operator[](int k) { return coef_.at(k); }

  static UniSeries constant(const Rational& c, int order);
  /// c0 + c1*s truncated to `order`.
  static UniSeries linear(const Rational& c0, const Rational& c1, int order);

  UniSeries operator+(const UniSeries& o) const;
  UniSeries operator-(const UniSeries& o) const;
  UniSeries operator*(const UniSeries& o) const;  // Cauchy product, truncated
  UniSeries scaled(const Rational& c) const;

  /// Multiplicative inverse up to truncation; requires nonzero constant term.
  UniSeries inverse() const;

  bool operator==(const UniSeries& o) const { return coef_ == o.coef_; }

 private:
  std::vector<Rational> coef_;
};

}  // namespace jackhg
