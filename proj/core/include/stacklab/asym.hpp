#pragma once

// Asymptotics: main-term catalog C n^{-alpha} e^{pi sqrt(beta n)}, the Ingham transfer
// from lambda eps^alpha e^{A/eps} behaviour at q = e^{-eps}, floating-point evaluation of
// the generating functions, and the saddle-point pipeline for shifted stacks.

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "stacklab/genfun.hpp"
#include "stacklab/log_real.hpp"
#include "stacklab/series.hpp"

namespace stacklab::asym {

inline constexpr double kGoldenRatio = 1.6180339887498948482;

// C n^{-alpha} exp(pi sqrt(beta n))
struct MainTerm {
  double C = 1.0;
  double alpha = 0.0;
  double beta = 0.0;
};

// lambda eps^alpha exp(A / eps) as eps -> 0+
struct EpsAsym {
  double lambda = 1.0;
  double alpha = 0.0;
  double A = 0.0;
};

// Catalog entry for the variant. UsageError for L, which has no main term.
MainTerm main_term(Variant v);
bool has_main_term(Variant v);

// log C - alpha log n + pi sqrt(beta n). n >= 1.
LogReal main_term_value(const MainTerm& mt, double n);

// Behaviour of the generating function at q = e^{-eps} for the variants where it is known
// in closed form (P, GS, DM, H, HS, S, SS). UsageError otherwise.
EpsAsym eps_asymptotic(Variant v);
bool has_eps_asymptotic(Variant v);
LogReal eps_asymptotic_value(const EpsAsym& e, double eps);

// a(n) ~ lambda / (2 sqrt(pi)) A^{alpha/2 + 1/4} n^{-(alpha/2 + 3/4)} exp(2 sqrt(A n)).
// DomainError unless A > 0 and lambda > 0.
MainTerm ingham_transfer(const EpsAsym& e);

// Exact coefficient n divided by the main term. DomainError for a non-positive coefficient,
// UsageError when n is 0 or exceeds the series order.
double coeff_ratio(Variant v, std::size_t n, const PowerSeries& coeffs);

// Li2(x) for x in [-1, 1). Power series for |x| <= 1/2, reflection / Landen map outside.
double dilog(double x);
// Li2(z) = sum z^m / m^2 for |z| <= 0.75. DomainError otherwise.
std::complex<double> dilog(std::complex<double> z);

// Li2(x; q) = -log (x; q)_inf = sum_{m>=1} x^m / (m (1 - q^m)), summed until a term drops
// below tol times the partial sum. DomainError unless |x| < 1 and |q| < 1.
std::complex<double> quantum_dilog(std::complex<double> x, std::complex<double> q, double tol = 1e-16);

// log (q; q)_inf at q = e^{-eps}.
double log_qpochhammer_inf(double eps);

// Generating function of the variant at q = e^{-eps}, eps in (0, 1].
LogReal eval_genfun(Variant v, double eps);

// f(u) = -2 pi^2 u^2 + Li2(e^{4 pi i u}) / 2 and its derivatives.
std::complex<double> saddle_f(std::complex<double> u);
std::complex<double> saddle_fp(std::complex<double> u);
std::complex<double> saddle_fpp(std::complex<double> u);

struct SaddleData {
  std::complex<double> v;  // critical point of f in the upper half-plane
  double f_v = 0.0;
  double fpp_v = 0.0;
  double fp_abs = 0.0;          // |f'(v)|
  double contour_height = 0.0;  // Im v = log(phi) / (2 pi)
  int newton_iterations = 0;
};

// Locates the critical point by Newton's method on f' and evaluates f, f'' there.
SaddleData saddle_data();

struct QuadratureReport {
  double value = 0.0;            // A(e^{-eps})
  double coarse_value = 0.0;     // same integral at half the node count
  double relative_change = 0.0;  // |value - coarse| / |value|
  double imag_over_real = 0.0;   // imaginary residue of the integral
  std::size_t nodes = 0;
};

// Composite Simpson over u = t + i log(phi)/(2 pi), |t| <= 3 sqrt(eps), of
// -sqrt(2 pi / eps) exp(-2 pi^2 u^2 / eps + pi i u + Li2(x^2 q^2; q^2)), x = e^{2 pi i u}.
// NumericError if doubling the node count changes the value by 1e-6 or more, or if the
// result leaves double range.
QuadratureReport contour_A_report(double eps);
double contour_A(double eps);
// Inverts H(q) = 1 - q^{7/8} A(q) / (q)_inf with H evaluated numerically.
double A_from_H(double eps);
// -phi^{-1} 5^{-1/4} e^{pi^2 / (30 eps)}
LogReal A_mainterm(double eps);

double hs_over_h(double eps);

}  // namespace stacklab::asym
