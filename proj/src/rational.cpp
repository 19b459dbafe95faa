#include "affcrit/rational.hpp"

#include <cctype>
#include <limits>

#include "affcrit/errors.hpp"

namespace affcrit {

namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-' || den.front() == '+')
    throw ParseError("malformed rational '" + std::string(text) + "'");
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  mpz_class zn(n, 10), zd(std::string(den), 10);
  if (zd == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(zn, zd);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(10); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::int64_t to_int64(const Rational& q) {
  if (!is_integer(q)) throw std::domain_error("rational " + format_rational(q) + " is not an integer");
  const mpz_class& n = q.get_num();
  if (!n.fits_slong_p()) throw OverflowError("integer " + n.get_str() + " exceeds int64");
  return n.get_si();
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coefficient overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("coefficient overflow in multiplication");
  return r;
}

}  // namespace affcrit
