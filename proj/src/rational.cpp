#include "cherednik/rational.hpp"

#include <cctype>
#include <numeric>

#include "cherednik/errors.hpp"

namespace cherednik {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string strip(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  std::string out(s.substr(b, e - b));
  if (!out.empty() && out[0] == '+') out.erase(0, 1);
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s = strip(text);
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-')
    throw InvalidInput("malformed rational '" + std::string(text) + "'");
  Integer d(den);
  if (d == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  Rational r{Integer(num), d};
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::int64_t gcd_i64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm_i64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return std::lcm(a, b);
}

int totient(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

Integer floor_rational(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Rational frac(const Rational& value) { return value - Rational(floor_rational(value)); }

}  // namespace cherednik
