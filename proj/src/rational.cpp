#include "mzv/rational.hpp"

#include "mzv/error.hpp"

namespace mzv {

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw Error(ErrorKind::ParseError, "bad rational \"" + text + "\"");
  if (q.get_den() == 0) throw Error(ErrorKind::ParseError, "zero denominator in \"" + text + "\"");
  q.canonicalize();
  return q;
}

}  // namespace mzv
