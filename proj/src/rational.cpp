#include "jackhg/rational.hpp"

namespace jackhg {

Rational rat(long num, long den) {
  if (den == 0) throw BadInput("rat: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rat_parse(const std::string& text) {
  if (text.empty()) throw BadInput("rat_parse: empty token");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Rational r(mpz_class(text), 1);
      r.canonicalize();
      return r;
    }
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    if (den == 0) throw BadInput("rat_parse: zero denominator in '" + text + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw BadInput("rat_parse: malformed rational '" + text + "'");
  }
}

std::string rat_str(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace jackhg
