#include "stacklab/asym.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "stacklab/errors.hpp"

namespace stacklab::asym {

namespace {

using std::numbers::pi;
constexpr double kPhi = kGoldenRatio;

void require_eps(double eps, double upper) {
  if (!(eps > 0.0 && eps <= upper)) {
    throw DomainError("eps must lie in (0, " + std::to_string(upper) + "], got " + std::to_string(eps));
  }
}

// log(1 - e^{-x}), x > 0
double log_one_minus_exp(double x) { return std::log(-std::expm1(-x)); }
// log(1 + e^{-x})
double log_one_plus_exp(double x) { return std::log1p(std::exp(-x)); }

// Positive Eulerian sum in log space: sum_{m >= first} exp(-eps e(m) + log T_m), with
// log T_m = log T_{m-1} + step(m) and log T_{first-1} = 0. Stops once the terms are
// decreasing and below 1e-17 of the running total.
template <typename Exponent, typename Step>
LogReal log_eulerian_sum(double eps, std::size_t first, Exponent exponent, Step step) {
  LogReal acc;
  double log_t = 0.0;
  double previous = -std::numeric_limits<double>::infinity();
  constexpr std::size_t kMaxTerms = 50'000'000;
  for (std::size_t m = first; m < first + kMaxTerms; ++m) {
    log_t += step(m);
    const double log_term = -eps * exponent(m) + log_t;
    acc = acc + LogReal::exp(log_term);
    const bool decreasing = log_term < previous;
    previous = log_term;
    if (decreasing && log_term < acc.log_magnitude() + std::log(1e-17)) return acc;
  }
  throw NumericError("log_eulerian_sum: no convergence");
}

template <typename Exponent>
LogReal first_kind(double eps, Exponent exponent) {
  const LogReal sum = log_eulerian_sum(eps, 1, exponent, [eps](std::size_t m) {
    double s = -log_one_minus_exp(eps * static_cast<double>(m));
    if (m >= 2) s -= log_one_minus_exp(eps * static_cast<double>(m - 1));
    return s;
  });
  return sum + LogReal::exp(0.0);
}

template <typename Exponent>
LogReal summit_kind(double eps, Exponent exponent) {
  return log_eulerian_sum(eps, 0, exponent, [eps](std::size_t m) {
    return m == 0 ? 0.0 : -2.0 * log_one_minus_exp(eps * static_cast<double>(m));
  });
}

double false_theta_value(double eps) {
  double sum = 0.0;
  for (long n = 1;; ++n) {
    const double e = eps * static_cast<double>(n * (n + 1) / 2);
    if (e > 45.0) break;
    sum += (n % 2 == 1 ? 1.0 : -1.0) * std::exp(-e);
  }
  return sum;
}

}  // namespace

bool has_main_term(Variant v) { return v != Variant::L; }

MainTerm main_term(Variant v) {
  const double h_constant = 1.0 / (kPhi * 2.0 * std::sqrt(2.0) * std::pow(5.0, 0.75));
  switch (v) {
    case Variant::S:
    case Variant::SS: return {std::pow(2.0, -3) * std::pow(3.0, -0.75), 1.25, 4.0 / 3.0};
    case Variant::G: return {std::pow(2.0, -3) * std::pow(3.0, -0.5), 1.0, 2.0 / 3.0};
    case Variant::GS:
    case Variant::P: return {std::pow(2.0, -2) * std::pow(3.0, -0.5), 1.0, 2.0 / 3.0};
    case Variant::H: return {h_constant, 1.0, 0.8};
    case Variant::HS: return {kPhi * h_constant, 1.0, 0.8};
    case Variant::D: return {std::pow(2.0, -3.25) * std::pow(3.0, -0.25), 0.75, 2.0 / 3.0};
    case Variant::DM: return {1.0 / 16.0, 1.0, 1.0};
    case Variant::FPHI:
    case Variant::F0: return {1.0 / (8.0 * std::sqrt(3.0)), 1.0, 2.0 / 3.0};
    case Variant::L: break;
  }
  throw UsageError("main_term: variant '" + std::string(variant_name(v)) + "' has no main term");
}

LogReal main_term_value(const MainTerm& mt, double n) {
  if (!(n >= 1.0)) throw DomainError("main_term_value: n must be >= 1");
  return LogReal::from_log(1, std::log(mt.C) - mt.alpha * std::log(n) + pi * std::sqrt(mt.beta * n));
}

bool has_eps_asymptotic(Variant v) {
  switch (v) {
    case Variant::P:
    case Variant::GS:
    case Variant::DM:
    case Variant::H:
    case Variant::HS:
    case Variant::S:
    case Variant::SS: return true;
    default: return false;
  }
}

EpsAsym eps_asymptotic(Variant v) {
  const double h_lambda = 1.0 / (kPhi * std::sqrt(2.0 * pi) * std::pow(5.0, 0.25));
  switch (v) {
    // 1/(q)_inf ~ sqrt(eps / 2 pi) e^{pi^2 / (6 eps)}
    case Variant::P:
    case Variant::GS: return {1.0 / std::sqrt(2.0 * pi), 0.5, pi * pi / 6.0};
    case Variant::DM: return {1.0 / (4.0 * std::sqrt(pi)), 0.5, pi * pi / 4.0};
    case Variant::H: return {h_lambda, 0.5, pi * pi / 5.0};
    case Variant::HS: return {kPhi * h_lambda, 0.5, pi * pi / 5.0};
    // L(q) and 1 - L(q) both tend to 1/2
    case Variant::S:
    case Variant::SS: return {1.0 / (4.0 * pi), 1.0, pi * pi / 3.0};
    default: break;
  }
  throw UsageError("eps_asymptotic: no closed form for variant '" + std::string(variant_name(v)) + "'");
}

LogReal eps_asymptotic_value(const EpsAsym& e, double eps) {
  if (!(eps > 0.0)) throw DomainError("eps_asymptotic_value: eps must be positive");
  return LogReal::from_double(e.lambda) * LogReal::exp(e.alpha * std::log(eps) + e.A / eps);
}

MainTerm ingham_transfer(const EpsAsym& e) {
  if (!(e.A > 0.0)) throw DomainError("ingham_transfer: A must be positive");
  if (!(e.lambda > 0.0)) throw DomainError("ingham_transfer: lambda must be positive");
  const double power = e.alpha / 2.0 + 0.25;
  return {e.lambda / (2.0 * std::sqrt(pi)) * std::pow(e.A, power), e.alpha / 2.0 + 0.75, 4.0 * e.A / (pi * pi)};
}

double coeff_ratio(Variant v, std::size_t n, const PowerSeries& coeffs) {
  if (n == 0 || n > coeffs.order()) {
    throw UsageError("coeff_ratio: n = " + std::to_string(n) + " outside 1.." + std::to_string(coeffs.order()));
  }
  if (sgn(coeffs[n]) <= 0) throw DomainError("coeff_ratio: coefficient is not positive");
  return ratio(LogReal::from_integer(coeffs[n]), main_term_value(main_term(v), static_cast<double>(n)));
}

LogReal eval_genfun(Variant v, double eps) {
  require_eps(eps, 1.0);
  const auto square = [](std::size_t m) { return static_cast<double>(m * m); };
  const auto triangular = [](std::size_t m) { return static_cast<double>(m * (m + 1) / 2); };
  switch (v) {
    case Variant::S: {
      const LogReal inv_sq = LogReal::exp(-2.0 * log_qpochhammer_inf(eps));
      return LogReal::exp(0.0) + LogReal::from_double(false_theta_value(eps)) * inv_sq;
    }
    case Variant::SS:
      return LogReal::from_double(1.0 - false_theta_value(eps)) * LogReal::exp(-2.0 * log_qpochhammer_inf(eps));
    case Variant::G: return first_kind(eps, square);
    case Variant::GS: return summit_kind(eps, square);
    case Variant::H: return first_kind(eps, triangular);
    case Variant::HS: return summit_kind(eps, triangular);
    case Variant::D:
      return log_eulerian_sum(eps, 0, [](std::size_t m) { return static_cast<double>(m + 1); },
                              [eps](std::size_t m) {
                                return m == 0 ? 0.0 : 2.0 * log_one_plus_exp(eps * static_cast<double>(m));
                              });
    case Variant::DM:
      // q (q^2; q^2)_inf / ((1 + q) (q)_inf^2)
      return LogReal::exp(-eps + log_qpochhammer_inf(2.0 * eps) - log_one_plus_exp(eps) -
                          2.0 * log_qpochhammer_inf(eps));
    case Variant::FPHI:
      return summit_kind(eps, [](std::size_t m) { return static_cast<double>(m * m + m); });
    case Variant::F0:
      return eval_genfun(Variant::GS, eps) - eval_genfun(Variant::FPHI, eps);
    case Variant::P: return LogReal::exp(-log_qpochhammer_inf(eps));
    case Variant::L: return LogReal::from_double(false_theta_value(eps));
  }
  throw UsageError("eval_genfun: unknown variant");
}

std::complex<double> saddle_f(std::complex<double> u) {
  const std::complex<double> i(0.0, 1.0);
  return -2.0 * pi * pi * u * u + 0.5 * dilog(std::exp(4.0 * pi * i * u));
}

std::complex<double> saddle_fp(std::complex<double> u) {
  const std::complex<double> i(0.0, 1.0);
  return 2.0 * pi * i * (2.0 * pi * i * u - std::log(1.0 - std::exp(4.0 * pi * i * u)));
}

std::complex<double> saddle_fpp(std::complex<double> u) {
  const std::complex<double> i(0.0, 1.0);
  const std::complex<double> w = std::exp(4.0 * pi * i * u);
  return -4.0 * pi * pi * (1.0 + 2.0 * w / (1.0 - w));
}

SaddleData saddle_data() {
  std::complex<double> u(0.0, 0.1);
  int iterations = 0;
  for (; iterations < 100; ++iterations) {
    const std::complex<double> step = saddle_fp(u) / saddle_fpp(u);
    u -= step;
    if (std::abs(step) < 1e-16) break;
  }
  if (iterations == 100) throw NumericError("saddle_data: Newton iteration did not converge");
  SaddleData d;
  d.v = u;
  d.f_v = saddle_f(u).real();
  d.fpp_v = saddle_fpp(u).real();
  d.fp_abs = std::abs(saddle_fp(u));
  d.contour_height = u.imag();
  d.newton_iterations = iterations + 1;
  return d;
}

namespace {

// Simpson over [-T, T] with `intervals` subintervals of exp(E(t) - shift); returns the
// complex integral. E is the exponent of the integrand along the horizontal contour.
template <typename Exponent>
std::complex<double> simpson(Exponent exponent, double T, std::size_t intervals, double shift) {
  const double h = 2.0 * T / static_cast<double>(intervals);
  std::vector<std::complex<double>> weighted(intervals + 1);
  for (std::size_t k = 0; k <= intervals; ++k) {
    const double t = -T + h * static_cast<double>(k);
    const double w = (k == 0 || k == intervals) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
    weighted[k] = w * std::exp(exponent(t) - shift);
  }
  // pairwise reduction keeps the result independent of any later parallel split
  for (std::size_t stride = 1; stride < weighted.size(); stride *= 2) {
    for (std::size_t k = 0; k + stride < weighted.size(); k += 2 * stride) weighted[k] += weighted[k + stride];
  }
  return weighted[0] * (h / 3.0);
}

}  // namespace

QuadratureReport contour_A_report(double eps) {
  require_eps(eps, 0.2);
  const std::complex<double> i(0.0, 1.0);
  const double height = std::log(kPhi) / (2.0 * pi);
  const double q2 = std::exp(-2.0 * eps);
  const auto exponent = [&](double t) {
    const std::complex<double> u(t, height);
    const std::complex<double> x2 = std::exp(4.0 * pi * i * u);
    return -2.0 * pi * pi * u * u / eps + pi * i * u + quantum_dilog(x2 * q2, q2, 1e-17);
  };
  const double T = 3.0 * std::sqrt(eps);
  const double shift = exponent(0.0).real();
  constexpr std::size_t kIntervals = 2000;  // 2001 nodes
  const std::complex<double> coarse = simpson(exponent, T, kIntervals, shift);
  const std::complex<double> fine = simpson(exponent, T, 2 * kIntervals, shift);

  QuadratureReport r;
  r.nodes = 2 * kIntervals + 1;
  r.relative_change = std::abs(fine.real() - coarse.real()) / std::abs(fine.real());
  r.imag_over_real = std::abs(fine.imag() / fine.real());
  if (!(r.relative_change < 1e-6)) {
    throw NumericError("contour_A: quadrature not converged at eps=" + std::to_string(eps) +
                       " (relative change " + std::to_string(r.relative_change) + ")");
  }
  const double log_scale = 0.5 * std::log(2.0 * pi / eps) + shift;
  const LogReal fine_value = -LogReal::exp(log_scale) * LogReal::from_double(fine.real());
  const LogReal coarse_value = -LogReal::exp(log_scale) * LogReal::from_double(coarse.real());
  if (fine_value.log_magnitude() > 700.0) {
    throw NumericError("contour_A: value exceeds double range at eps=" + std::to_string(eps));
  }
  r.value = fine_value.to_double();
  r.coarse_value = coarse_value.to_double();
  return r;
}

double contour_A(double eps) { return contour_A_report(eps).value; }

double A_from_H(double eps) {
  require_eps(eps, 0.2);
  // A = (1 - H) (q)_inf q^{-7/8}
  const LogReal one_minus_h = LogReal::exp(0.0) - eval_genfun(Variant::H, eps);
  return (one_minus_h * LogReal::exp(log_qpochhammer_inf(eps) + 7.0 * eps / 8.0)).to_double();
}

LogReal A_mainterm(double eps) {
  require_eps(eps, 0.2);
  return LogReal::from_log(-1, -std::log(kPhi) - 0.25 * std::log(5.0) + pi * pi / (30.0 * eps));
}

double hs_over_h(double eps) {
  require_eps(eps, 0.2);
  return ratio(eval_genfun(Variant::HS, eps), eval_genfun(Variant::H, eps));
}

}  // namespace stacklab::asym
