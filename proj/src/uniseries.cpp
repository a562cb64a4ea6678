#include "jackhg/uniseries.hpp"

namespace jackhg {

UniSeries UniSeries::constant(const Rational& c, int order) {
  UniSeries s(order);
  s[0] = c;
  return s;
}

UniSeries UniSeries::linear(const Rational& c0, const Rational& c1, int order) {
  UniSeries s(order);
  s[0] = c0;
  if (order >= 1) s[1] = c1;
  return s;
}

UniSeries UniSeries::operator+(const UniSeries& o) const {
  if (order() != o.order()) throw BadInput("UniSeries: mismatched orders");
  UniSeries r(order());
  for (int k = 0; k <= order(); ++k) r[k] = coef_[k] + o.coef_[k];
  return r;
}

UniSeries UniSeries::operator-(const UniSeries& o) const {
  if (order() != o.order()) throw BadInput("UniSeries: mismatched orders");
  UniSeries r(order());
  for (int k = 0; k <= order(); ++k) r[k] = coef_[k] - o.coef_[k];
  return r;
}

UniSeries UniSeries::operator*(const UniSeries& o) const {
  if (order() != o.order()) throw BadInput("UniSeries: mismatched orders");
  UniSeries r(order());
  for (int i = 0; i <= order(); ++i) {
    if (is_zero(coef_[i])) continue;
    for (int j = 0; i + j <= order(); ++j) r[i + j] += coef_[i] * o.coef_[j];
  }
  return r;
}

UniSeries UniSeries::scaled(const Rational& c) const {
  UniSeries r(order());
  for (int k = 0; k <= order(); ++k) r[k] = coef_[k] * c;
  return r;
}

UniSeries UniSeries::inverse() const {
  if (is_zero(coef_[0]))
    throw BadInput("UniSeries::inverse: zero constant term");
  UniSeries r(order());
  r[0] = 1 / coef_[0];
  for (int k = 1; k <= order(); ++k) {
    Rational acc(0);
    for (int j = 1; j <= k; ++j) acc += coef_[j] * r[k - j];
    r[k] = -acc / coef_[0];
  }
  return r;
}

}  // namespace jackhg
