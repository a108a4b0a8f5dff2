#include "stacklab/log_real.hpp"

#include <cstdio>
#include <numbers>

#include "stacklab/errors.hpp"

namespace stacklab {

LogReal LogReal::from_log(int sign, double log_magnitude) {
  LogReal r;
  if (sign == 0 || log_magnitude == -std::numeric_limits<double>::infinity()) return r;
  r.sign_ = sign > 0 ? 1 : -1;
  r.log_magnitude_ = log_magnitude;
  return r;
}

LogReal LogReal::from_double(double x) {
  if (x == 0.0) return {};
  return from_log(x > 0 ? 1 : -1, std::log(std::fabs(x)));
}

LogReal LogReal::from_integer(const Integer& z) {
  if (sgn(z) == 0) return {};
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());  // |mant| in [0.5, 1)
  return from_log(sgn(z), std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::numbers::ln2);
}

double LogReal::to_double() const { return sign_ == 0 ? 0.0 : sign_ * std::exp(log_magnitude_); }

LogReal operator*(const LogReal& a, const LogReal& b) {
  return LogReal::from_log(a.sign_ * b.sign_, a.log_magnitude_ + b.log_magnitude_);
}

LogReal operator/(const LogReal& a, const LogReal& b) {
  if (b.is_zero()) throw DomainError("LogReal: division by zero");
  return LogReal::from_log(a.sign_ * b.sign_, a.log_magnitude_ - b.log_magnitude_);
}

LogReal operator+(const LogReal& a, const LogReal& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const LogReal& big = a.log_magnitude_ >= b.log_magnitude_ ? a : b;
  const LogReal& small = &big == &a ? b : a;
  const double t = std::exp(small.log_magnitude_ - big.log_magnitude_);  // in (0, 1]
  if (big.sign_ == small.sign_) return LogReal::from_log(big.sign_, big.log_magnitude_ + std::log1p(t));
  if (t == 1.0) return {};
  return LogReal::from_log(big.sign_, big.log_magnitude_ + std::log1p(-t));
}

std::string LogReal::scientific() const {
  if (sign_ == 0) return "0";
  const double l10 = log_magnitude_ / std::numbers::ln10;
  double exponent = std::floor(l10);
  double mantissa = std::pow(10.0, l10 - exponent);
  if (mantissa >= 9.9999995) {
    mantissa /= 10.0;
    exponent += 1.0;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s%.6f e%+d", sign_ < 0 ? "-" : "", mantissa, static_cast<int>(exponent));
  return buf;
}

double ratio(const LogReal& a, const LogReal& b) {
  if (a.is_zero() || b.is_zero()) throw DomainError("ratio: zero operand");
  return a.sign() * b.sign() * std::exp(a.log_magnitude() - b.log_magnitude());
}

}  // namespace stacklab
