#pragma once

#include <gmpxx.h>

#include <string>

namespace mzv {

using Rational = mpq_class;

/// "p/q", or "p" when the denominator is one.
std::string format_rational(const Rational& q);

Rational parse_rational(const std::string& text);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace mzv
