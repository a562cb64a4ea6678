#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace jackhg {

/// Exact arbitrary-precision rational. All arithmetic in this library is
/// over Q; nothing is ever rounded.
using Rational = mpq_class;

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parameters hit a non-generic point (vanishing hook factor, repeated
/// eigenvalue, ...). Callers typically redraw and retry.
struct DegenerateParameter : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Canonical num/den with den > 0 and gcd 1; zero is 0/1.
Rational rat(long num, long den = 1);

/// Parses "3", "-3", "p/q". Throws BadInput on malformed text or zero
/// denominator.
Rational rat_parse(const std::string& text);

/// "num/den", den omitted when 1. Matches the CLI wire format.
std::string rat_str(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace jackhg
