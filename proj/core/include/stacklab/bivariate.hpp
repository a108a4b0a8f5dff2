#pragma once

// Laurent polynomials in x whose coefficients are truncated power series in q.
// Products keep only the x-exponents inside a fixed window [x_min, x_max]; a result
// is trustworthy only for exponents whose every contributing pair lies in the window.

#include <cstddef>
#include <vector>

#include "stacklab/series.hpp"

namespace stacklab {

struct XWindow {
  int x_min = 0;
  int x_max = 0;

  friend bool operator==(const XWindow&, const XWindow&) = default;
};

// Window that makes the x^0 coefficient of the constant-term products exact modulo q^{N+1}:
// [-(ceil(sqrt(2N)) + 2), ceil(sqrt(2N)) + 3].
XWindow sufficient_window(std::size_t order);

class BivariateSeries {
 public:
  // Zero series. UsageError unless x_min <= 0 <= x_max.
  BivariateSeries(XWindow window, std::size_t order);

  // c(q) * x^k; the term is dropped when k lies outside the window.
  static BivariateSeries monomial(XWindow window, std::size_t order, int k, const PowerSeries& c);

  const XWindow& window() const { return window_; }
  std::size_t order() const { return order_; }
  // Coefficient of x^k. UsageError outside the window.
  const PowerSeries& at(int k) const;

  BivariateSeries& operator+=(const BivariateSeries& other);
  friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);
  // Multiplies every x-slice by a series in q alone.
  friend BivariateSeries operator*(const BivariateSeries& a, const PowerSeries& c);

  friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

 private:
  void set(int k, PowerSeries c);

  XWindow window_;
  std::size_t order_;
  std::vector<PowerSeries> per_x_;
};

// x^0 slice. UsageError if 0 is outside the window (cannot happen for a valid window).
PowerSeries constant_term_x(const BivariateSeries& b);

// (-x^{-1}; q)_inf = sum_r x^{-r} q^{r(r-1)/2} / (q)_r
BivariateSeries neg_inverse_x_product(XWindow window, std::size_t order);
// (-xq; q)_inf = sum_m x^m q^{m(m+1)/2} / (q)_m
BivariateSeries neg_xq_product(XWindow window, std::size_t order);
// 1 / (xq; q)_inf = sum_m x^m q^m / (q)_m
BivariateSeries xq_product_inverse(XWindow window, std::size_t order);

}  // namespace stacklab
