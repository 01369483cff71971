#ifndef LIEALG_SCALAR_HPP
#define LIEALG_SCALAR_HPP

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "liealg/error.hpp"

namespace liealg {

/// Exact rational number. GMP keeps every arithmetic result in lowest terms
/// with a positive denominator.
using Scalar = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Scalar& a) { return sgn(a) == 0; }

/// "p/q", or "p" when q == 1.
inline std::string to_string(const Scalar& a) { return a.get_str(10); }

inline Scalar parse_scalar(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!digits(num) || (slash != std::string_view::npos && !digits(den)))
    throw Error(ErrorKind::Parse, "malformed scalar '" + std::string(text) + "'");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  Scalar out;
  if (out.set_str(s, 10) != 0) throw Error(ErrorKind::Parse, "malformed scalar '" + s + "'");
  if (sgn(out.get_den()) == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + s + "'");
  out.canonicalize();
  return out;
}

}  // namespace liealg

#endif
