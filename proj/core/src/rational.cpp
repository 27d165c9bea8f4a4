#include "cuspbound/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cusp {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("rational must be \"p/q\" or \"p\", got \"" +
                                std::string(text) + "\"");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) {
    throw std::invalid_argument("rational has zero denominator: \"" +
                                std::string(text) + "\"");
  }
  if (negative) n = -n;
  Rational value(n, d);
  value.canonicalize();
  return value;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> values;
  size_t start = 0;
  while (true) {
    size_t comma = text.find(',', start);
    std::string_view field = text.substr(
        start, comma == std::string_view::npos ? comma : comma - start);
    values.push_back(parse_rational(field));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

std::string format_rational(const Rational& value) {
  return value.get_str();
}

Integer floor_of(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Rational fractional_part(const Rational& value) {
  return value - Rational(floor_of(value));
}

bool is_integer(const Rational& value) {
  return value.get_den() == 1;
}

std::string decimal_string(const Rational& value, int digits) {
  if (digits < 0) throw std::invalid_argument("digits must be >= 0");
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Integer num = abs(value.get_num()) * scale;
  Integer den = value.get_den();
  Integer quot, rem;
  mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
              den.get_mpz_t());
  if (2 * rem >= den) quot += 1;
  Integer whole = quot / scale;
  Integer frac = quot % scale;
  std::string out;
  if (sgn(value) < 0 && quot != 0) out += '-';
  out += whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += '.';
    out += std::string(static_cast<size_t>(digits) - f.size(), '0');
    out += f;
  }
  return out;
}

}  // namespace cusp
