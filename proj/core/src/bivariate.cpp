#include "stacklab/bivariate.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "stacklab/detail/kernels.hpp"
#include "stacklab/errors.hpp"

namespace stacklab {

XWindow sufficient_window(std::size_t order) {
  const int r = static_cast<int>(std::ceil(std::sqrt(2.0 * static_cast<double>(order)))) + 2;
  return {-r, r + 1};
}

BivariateSeries::BivariateSeries(XWindow window, std::size_t order)
    : window_(window), order_(order) {
  if (window.x_min > 0 || window.x_max < 0) {
    throw UsageError("BivariateSeries: window [" + std::to_string(window.x_min) + ", " +
                     std::to_string(window.x_max) + "] must contain 0");
  }
  per_x_.assign(static_cast<std::size_t>(window.x_max - window.x_min + 1), PowerSeries(order));
}

BivariateSeries BivariateSeries::monomial(XWindow window, std::size_t order, int k, const PowerSeries& c) {
  BivariateSeries b(window, order);
  if (k >= window.x_min && k <= window.x_max) b.set(k, c);
  return b;
}

const PowerSeries& BivariateSeries::at(int k) const {
  if (k < window_.x_min || k > window_.x_max) {
    throw UsageError("BivariateSeries::at: x-exponent " + std::to_string(k) + " outside window");
  }
  return per_x_[static_cast<std::size_t>(k - window_.x_min)];
}

void BivariateSeries::set(int k, PowerSeries c) {
  if (c.order() != order_) throw UsageError("BivariateSeries: q-order mismatch");
  per_x_[static_cast<std::size_t>(k - window_.x_min)] = std::move(c);
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& other) {
  if (other.window_ != window_ || other.order_ != order_) {
    throw UsageError("BivariateSeries +: window or order mismatch");
  }
  for (std::size_t i = 0; i < per_x_.size(); ++i) per_x_[i] += other.per_x_[i];
  return *this;
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
  if (a.window_ != b.window_ || a.order_ != b.order_) {
    throw UsageError("BivariateSeries *: window or order mismatch");
  }
  BivariateSeries out(a.window_, a.order_);
  const XWindow w = a.window_;
  for (int i = w.x_min; i <= w.x_max; ++i) {
    const PowerSeries& ai = a.at(i);
    if (ai.is_zero()) continue;
    for (int j = w.x_min; j <= w.x_max; ++j) {
      const int k = i + j;
      if (k < w.x_min || k > w.x_max) continue;  // discarded by the window
      const PowerSeries& bj = b.at(j);
      if (bj.is_zero()) continue;
      out.per_x_[static_cast<std::size_t>(k - w.x_min)] += ps_mul(ai, bj);
    }
  }
  return out;
}

BivariateSeries operator*(const BivariateSeries& a, const PowerSeries& c) {
  if (c.order() != a.order_) throw UsageError("BivariateSeries *: q-order mismatch");
  BivariateSeries out(a.window_, a.order_);
  for (std::size_t i = 0; i < a.per_x_.size(); ++i) {
    if (!a.per_x_[i].is_zero()) out.per_x_[i] = ps_mul(a.per_x_[i], c);
  }
  return out;
}

PowerSeries constant_term_x(const BivariateSeries& b) { return b.at(0); }

namespace {

// sum_m x^{direction*m} q^{e(m)} / (q)_m, m limited by the window and by e(m) <= order.
template <typename Exponent>
BivariateSeries q_binomial_expansion(XWindow window, std::size_t order, int direction, Exponent exponent) {
  BivariateSeries out(window, order);
  const int limit = direction > 0 ? window.x_max : -window.x_min;
  // inv holds 1/(q)_m
  std::vector<Integer> inv(order + 1);
  inv[0] = 1;
  for (int m = 0; m <= limit; ++m) {
    if (m > 0) detail::div_one_minus(inv, static_cast<std::size_t>(m), order + 1);
    const std::size_t e = exponent(static_cast<std::size_t>(m));
    if (e > order) break;
    std::vector<Integer> term(order + 1);
    for (std::size_t n = e; n <= order; ++n) term[n] = inv[n - e];
    out += BivariateSeries::monomial(window, order, direction * m, PowerSeries(order, std::move(term)));
  }
  return out;
}

}  // namespace

BivariateSeries neg_inverse_x_product(XWindow window, std::size_t order) {
  return q_binomial_expansion(window, order, -1, [](std::size_t r) { return r == 0 ? 0 : r * (r - 1) / 2; });
}

BivariateSeries neg_xq_product(XWindow window, std::size_t order) {
  return q_binomial_expansion(window, order, +1, [](std::size_t m) { return m * (m + 1) / 2; });
}

BivariateSeries xq_product_inverse(XWindow window, std::size_t order) {
  return q_binomial_expansion(window, order, +1, [](std::size_t m) { return m; });
}

}  // namespace stacklab
