#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "stacklab/series.hpp"

namespace stacklab {

// sign * exp(log_magnitude). Exponentially large and small magnitudes (e^{pi sqrt(beta n)},
// e^{A/eps}) are carried here; only ratios are ever exponentiated back to doubles.
//
// Products and quotients are exact in log space. A sum of two same-sign values within
// e^{30} of each other has relative error below 1e-14; a difference loses the usual
// cancellation digits.
class LogReal {
 public:
  LogReal() = default;  // zero
  static LogReal from_log(int sign, double log_magnitude);
  static LogReal from_double(double x);
  static LogReal from_integer(const Integer& z);
  static LogReal exp(double x) { return from_log(1, x); }

  int sign() const { return sign_; }
  double log_magnitude() const { return log_magnitude_; }
  bool is_zero() const { return sign_ == 0; }
  // May overflow to +-inf or underflow to 0.
  double to_double() const;

  LogReal operator-() const { return from_log(-sign_, log_magnitude_); }
  friend LogReal operator*(const LogReal& a, const LogReal& b);
  friend LogReal operator/(const LogReal& a, const LogReal& b);
  friend LogReal operator+(const LogReal& a, const LogReal& b);
  friend LogReal operator-(const LogReal& a, const LogReal& b) { return a + (-b); }

  // "m.mmmmmm e+k" (base 10, six decimals); "0" for zero.
  std::string scientific() const;

 private:
  int sign_ = 0;
  double log_magnitude_ = -std::numeric_limits<double>::infinity();
};

// a / b as a double; both must be nonzero.
double ratio(const LogReal& a, const LogReal& b);

}  // namespace stacklab
