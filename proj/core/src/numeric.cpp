// Special functions: dilogarithm, quantum dilogarithm and (q; q)_inf on the real ray.

#include <cmath>
#include <numbers>
#include <string>

#include "stacklab/asym.hpp"
#include "stacklab/errors.hpp"

namespace stacklab::asym {

namespace {

using std::numbers::pi;

constexpr int kMaxTerms = 10'000'000;

double dilog_series(double x) {
  double sum = 0.0;
  double power = x;
  for (int m = 1; m < kMaxTerms; ++m) {
    const double term = power / (static_cast<double>(m) * m);
    sum += term;
    if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
    power *= x;
  }
  return sum;
}

// e^z - 1 without cancellation for small |z|
std::complex<double> expm1(std::complex<double> z) {
  const double a = z.real();
  const double b = z.imag();
  const double s = std::sin(b / 2);
  return {std::expm1(a) * std::cos(b) - 2 * s * s, std::exp(a) * std::sin(b)};
}

}  // namespace

double dilog(double x) {
  if (!(x >= -1.0 && x < 1.0)) throw DomainError("dilog: argument must lie in [-1, 1)");
  if (x == 0.0) return 0.0;
  if (x == -1.0) return -pi * pi / 12;
  if (std::fabs(x) <= 0.5) return dilog_series(x);
  if (x > 0.5) return pi * pi / 6 - std::log(x) * std::log1p(-x) - dilog_series(1 - x);
  // x in (-1, -1/2): Li2(x) = -Li2(x / (x - 1)) - log^2(1 - x) / 2, with x/(x-1) in (1/3, 1/2)
  const double l = std::log1p(-x);
  return -dilog_series(x / (x - 1)) - l * l / 2;
}

std::complex<double> dilog(std::complex<double> z) {
  if (std::abs(z) > 0.75) throw DomainError("complex dilog: |z| must be <= 0.75");
  std::complex<double> sum = 0.0;
  std::complex<double> power = z;
  for (int m = 1; m < kMaxTerms; ++m) {
    const std::complex<double> term = power / (static_cast<double>(m) * m);
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    power *= z;
  }
  return sum;
}

std::complex<double> quantum_dilog(std::complex<double> x, std::complex<double> q, double tol) {
  if (!(std::abs(x) < 1.0)) throw DomainError("quantum_dilog: |x| must be < 1");
  if (!(std::abs(q) < 1.0)) throw DomainError("quantum_dilog: |q| must be < 1");
  if (std::abs(x) == 0.0) return 0.0;
  const std::complex<double> log_q = std::log(q);
  const bool real_q = q.imag() == 0.0 && q.real() > 0.0;
  std::complex<double> sum = 0.0;
  std::complex<double> power = x;
  for (int m = 1; m < kMaxTerms; ++m) {
    const double md = static_cast<double>(m);
    // 1 - q^m
    const std::complex<double> denom = real_q ? std::complex<double>(-std::expm1(md * log_q.real()))
                                              : -expm1(md * log_q);
    const std::complex<double> term = power / (md * denom);
    sum += term;
    if (std::abs(term) <= tol * std::abs(sum)) return sum;
    power *= x;
  }
  throw NumericError("quantum_dilog: no convergence after " + std::to_string(kMaxTerms) + " terms");
}

double log_qpochhammer_inf(double eps) {
  if (!(eps > 0.0)) throw DomainError("log_qpochhammer_inf: eps must be positive");
  // sum_j log(1 - e^{-j eps}); Neumaier summation keeps the O(1/eps) terms accurate.
  double sum = 0.0;
  double carry = 0.0;
  for (long j = 1;; ++j) {
    const double x = -static_cast<double>(j) * eps;
    const double term = std::log(-std::expm1(x));
    const double t = sum + term;
    carry += std::fabs(sum) >= std::fabs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
    if (x < -45.0) break;  // remaining terms below e^{-45} / (1 - e^{-eps})
  }
  return sum + carry;
}

}  // namespace stacklab::asym
