#include "gridpeb/rational.hpp"

#include <ostream>
#include "gridpeb/error.hpp"

namespace gridpeb {

namespace {

mpz_class parse_integer(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  if (s.empty()) throw InvalidArgument("empty integer in rational literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw InvalidArgument("bad rational literal: " + s);
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw InvalidArgument("bad rational literal: " + s);
  }
  if (s[0] == '+') s.erase(s.begin());
  return mpz_class(s, 10);
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text), mpz_class(1));
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

Rational Rational::dyadic(unsigned exponent) {
  mpz_class den = 1;
  den <<= exponent;
  return Rational(mpz_class(1), den);
}

bool Rational::is_dyadic() const {
  const mpz_class& d = q_.get_den();
  // a power of two has exactly one set bit
  return mpz_popcount(d.get_mpz_t()) == 1;
}

mpz_class Rational::floor() const {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

std::string Rational::str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace gridpeb
