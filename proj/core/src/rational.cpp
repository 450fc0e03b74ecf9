#include "liespec/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace liespec {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

bool is_integer(const BigRat& r) { return denominator(r) == 1; }

bool is_positive_integer(const BigRat& r) {
  return is_integer(r) && numerator(r) > 0;
}

BigInt rational_floor(const BigRat& r) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  BigInt q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

long long to_int64(const BigRat& r) {
  if (!is_integer(r)) throw std::invalid_argument("to_int64: not an integer: " + rat_string(r));
  const BigInt n = numerator(r);
  if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min())
    throw std::invalid_argument("to_int64: out of range: " + n.str());
  return n.convert_to<long long>();
}

std::string rat_string(const BigRat& r) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool parse_bigint(const std::string& s, BigInt& out) {
  if (s.empty()) return false;
  const std::size_t start = (s[0] == '-') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  out = BigInt(s);
  return true;
}

}  // namespace

std::optional<BigRat> parse_rational(const std::string& text) {
  BigInt num;
  BigInt den = 1;
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!parse_bigint(text, num)) return std::nullopt;
  } else {
    const std::string p = text.substr(0, slash);
    const std::string q = text.substr(slash + 1);
    if (!parse_bigint(p, num) || !parse_bigint(q, den)) return std::nullopt;
    if (den <= 0) return std::nullopt;
  }
  return BigRat(num, den);
}

}  // namespace liespec
