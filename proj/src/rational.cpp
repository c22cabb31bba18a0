#include "cubit/rational.hpp"

#include <stdexcept>

namespace cubit {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

BigInt Rational::floor() const {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

Rational Rational::fractional_part() const { return *this - Rational(floor()); }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.q_.get_num().get_str() << '/' << r.q_.get_den().get_str();
}

std::size_t Rational::hash() const {
  const std::size_t h1 = mpz_get_ui(q_.get_num_mpz_t());
  const std::size_t h2 = mpz_get_ui(q_.get_den_mpz_t());
  return h1 * 0x9e3779b97f4a7c15ULL ^ (h2 + (h1 << 6) + (h1 >> 2)) ^
         static_cast<std::size_t>(sgn(q_) + 1);
}

}  // namespace cubit
