#include "homalg/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace homalg {

namespace {

bool valid_integer_token(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && (s.front() == '+' || s.front() == '-')) {
    s.remove_prefix(1);
  }
  if (s.empty()) return false;
  for (const char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num_part = text.substr(0, slash);
  if (!valid_integer_token(num_part, /*allow_sign=*/true)) {
    throw std::invalid_argument("Rational: malformed numerator in '" +
                                std::string(text) + "'");
  }
  mpq_class v(mpz_class(std::string(num_part), 10));
  if (slash != std::string_view::npos) {
    const std::string_view den_part = text.substr(slash + 1);
    if (!valid_integer_token(den_part, /*allow_sign=*/false)) {
      throw std::invalid_argument("Rational: malformed denominator in '" +
                                  std::string(text) + "'");
    }
    const mpz_class den(std::string(den_part), 10);
    if (den == 0) {
      throw std::invalid_argument("Rational: zero denominator in '" +
                                  std::string(text) + "'");
    }
    v /= mpq_class(den);
  }
  v.canonicalize();
  return Rational(std::move(v));
}

std::string Rational::str() const {
  std::string out = v_.get_num().get_str();
  if (v_.get_den() != 1) {
    out += '/';
    out += v_.get_den().get_str();
  }
  return out;
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
  return Rational(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace homalg
