#include "trivdiag/rational.hpp"

#include <stdexcept>

namespace trivdiag {

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_display_string(const Rational& value) { return value.get_str(); }

Rational parse_rational(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty rational");
  }
  auto valid_integer = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  const auto den_text = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_integer(num_text) || !valid_integer(den_text) || den_text[0] == '-') {
    throw std::invalid_argument("malformed rational: " + std::string(text));
  }
  Integer num(std::string(num_text[0] == '+' ? num_text.substr(1) : num_text));
  Integer den(std::string(den_text[0] == '+' ? den_text.substr(1) : den_text));
  if (den == 0) {
    throw std::invalid_argument("zero denominator: " + std::string(text));
  }
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Rational rising_factorial(const Rational& u, unsigned long m) {
  Rational out = 1;
  for (unsigned long i = 0; i < m; ++i) {
    out *= u + Rational(static_cast<long>(i));
  }
  return out;
}

}  // namespace trivdiag
