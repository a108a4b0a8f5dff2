#pragma once

// Exact truncated power series in q over arbitrary-precision integers.
//
// A PowerSeries of order N stands for a series modulo q^{N+1}: it stores the
// coefficients of q^0 .. q^N and every operation below is exact modulo
// q^{N+1}. Values are immutable once built; free functions return new values.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json_fwd.hpp>

namespace stacklab {

using Integer = mpz_class;

class PowerSeries {
 public:
  PowerSeries() : PowerSeries(0) {}
  // The zero series of the given order.
  explicit PowerSeries(std::size_t order);
  // Takes ownership of coeffs; throws UsageError unless coeffs.size() == order + 1.
  PowerSeries(std::size_t order, std::vector<Integer> coeffs);

  static PowerSeries one(std::size_t order);
  // c * q^exponent, or zero when exponent > order.
  static PowerSeries monomial(std::size_t order, std::size_t exponent, const Integer& c = 1);
  // Leading coefficients from a small literal list; the rest are zero.
  static PowerSeries from_list(std::size_t order, std::initializer_list<long> leading);

  std::size_t order() const { return coeffs_.size() - 1; }
  std::span<const Integer> coeffs() const { return coeffs_; }
  // Coefficient of q^n; n must not exceed order().
  const Integer& operator[](std::size_t n) const { return coeffs_[n]; }
  const Integer& at(std::size_t n) const;

  bool is_zero() const;

  // Same series seen modulo q^{new_order + 1}; new_order must not exceed order().
  PowerSeries truncated(std::size_t new_order) const;
  // Multiplication by q^k.
  PowerSeries shifted(std::size_t k) const;
  // Substitution q -> q^t (t >= 1).
  PowerSeries dilated(std::size_t t) const;

  PowerSeries& operator+=(const PowerSeries& other);
  PowerSeries& operator-=(const PowerSeries& other);
  PowerSeries& operator*=(const Integer& scalar);

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator-(const PowerSeries& a);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(PowerSeries a, const Integer& s) { return a *= s; }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.coeffs_ == b.coeffs_; }

  // Moves the coefficient buffer out; the series is left as the zero series of order 0.
  std::vector<Integer> release();

 private:
  std::vector<Integer> coeffs_;
};

// Cauchy product truncated at the common order. UsageError on order mismatch.
PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b);

// Two-sided inverse modulo q^{N+1}. DomainError unless the constant term is +1 or -1.
PowerSeries ps_inverse(const PowerSeries& a);

// Coefficient n of the result is the sum of coefficients 0..n of a (multiplication by 1/(1-q)).
PowerSeries ps_cumsum(const PowerSeries& a);

// Base of a q-Pochhammer symbol (base; q^step)_count where base = +q^offset or -q^offset.
enum class PochhammerBase { Positive, Negative };

inline constexpr std::optional<std::size_t> kInfinite = std::nullopt;

// (+-q^offset; q^step)_count truncated at order, i.e. the product of
// (1 -+ q^{offset + j*step}) for j < count. An infinite count keeps every factor whose
// exponent is <= order. DomainError if the product has zero constant term, UsageError if
// step == 0.
PowerSeries pochhammer(PochhammerBase base, std::size_t offset, std::optional<std::size_t> count,
                       std::size_t step, std::size_t order);

// {"order": N, "coeffs": ["<decimal>", ...]}
nlohmann::json to_json(const PowerSeries& s);
// Throws UsageError on malformed input.
PowerSeries power_series_from_json(const nlohmann::json& j);

std::string to_string(const PowerSeries& s);

}  // namespace stacklab
