#include "stacklab/series.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "stacklab/detail/kernels.hpp"
#include "stacklab/errors.hpp"

namespace stacklab {

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order + 1) {}

PowerSeries::PowerSeries(std::size_t order, std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != order + 1) {
    throw UsageError("PowerSeries: expected " + std::to_string(order + 1) + " coefficients, got " +
                     std::to_string(coeffs_.size()));
  }
}

PowerSeries PowerSeries::one(std::size_t order) { return monomial(order, 0); }

PowerSeries PowerSeries::monomial(std::size_t order, std::size_t exponent, const Integer& c) {
  PowerSeries s(order);
  if (exponent <= order) s.coeffs_[exponent] = c;
  return s;
}

PowerSeries PowerSeries::from_list(std::size_t order, std::initializer_list<long> leading) {
  PowerSeries s(order);
  std::size_t n = 0;
  for (long v : leading) {
    if (n > order) break;
    s.coeffs_[n++] = v;
  }
  return s;
}

const Integer& PowerSeries::at(std::size_t n) const {
  if (n > order()) {
    throw UsageError("PowerSeries::at: exponent " + std::to_string(n) + " exceeds order " +
                     std::to_string(order()));
  }
  return coeffs_[n];
}

bool PowerSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return sgn(c) == 0; });
}

PowerSeries PowerSeries::truncated(std::size_t new_order) const {
  if (new_order > order()) {
    throw UsageError("PowerSeries::truncated: cannot raise order " + std::to_string(order()) + " to " +
                     std::to_string(new_order));
  }
  return PowerSeries(new_order, std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

PowerSeries PowerSeries::shifted(std::size_t k) const {
  PowerSeries s(order());
  for (std::size_t n = k; n <= order(); ++n) s.coeffs_[n] = coeffs_[n - k];
  return s;
}

PowerSeries PowerSeries::dilated(std::size_t t) const {
  if (t == 0) throw UsageError("PowerSeries::dilated: t must be positive");
  PowerSeries s(order());
  for (std::size_t n = 0; n * t <= order(); ++n) s.coeffs_[n * t] = coeffs_[n];
  return s;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& other) {
  if (other.order() != order()) throw UsageError("PowerSeries +: order mismatch");
  for (std::size_t n = 0; n <= order(); ++n) coeffs_[n] += other.coeffs_[n];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& other) {
  if (other.order() != order()) throw UsageError("PowerSeries -: order mismatch");
  for (std::size_t n = 0; n <= order(); ++n) coeffs_[n] -= other.coeffs_[n];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Integer& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

PowerSeries operator-(const PowerSeries& a) {
  PowerSeries s = a;
  for (auto& c : s.coeffs_) c = -c;
  return s;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) { return ps_mul(a, b); }

std::vector<Integer> PowerSeries::release() {
  std::vector<Integer> out = std::move(coeffs_);
  coeffs_.assign(1, Integer(0));
  return out;
}

PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b) {
  if (a.order() != b.order()) {
    throw UsageError("ps_mul: order mismatch (" + std::to_string(a.order()) + " vs " +
                     std::to_string(b.order()) + ")");
  }
  const std::size_t order = a.order();
  // Iterate over the sparser operand in the outer loop; zero terms are skipped.
  const auto nonzeros = [](const PowerSeries& s) {
    return std::count_if(s.coeffs().begin(), s.coeffs().end(), [](const Integer& c) { return sgn(c) != 0; });
  };
  const PowerSeries& outer = nonzeros(a) <= nonzeros(b) ? a : b;
  const PowerSeries& inner = &outer == &a ? b : a;

  std::vector<Integer> out(order + 1);
  for (std::size_t i = 0; i <= order; ++i) {
    const Integer& ai = outer[i];
    if (sgn(ai) == 0) continue;
    mpz_srcptr x = ai.get_mpz_t();
    for (std::size_t j = 0; i + j <= order; ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), x, inner[j].get_mpz_t());
    }
  }
  return PowerSeries(order, std::move(out));
}

PowerSeries ps_inverse(const PowerSeries& a) {
  const Integer& c0 = a[0];
  if (c0 != 1 && c0 != -1) {
    throw DomainError("ps_inverse: constant term " + c0.get_str() + " is not a unit");
  }
  const std::size_t order = a.order();
  std::vector<std::size_t> support;
  for (std::size_t k = 1; k <= order; ++k) {
    if (sgn(a[k]) != 0) support.push_back(k);
  }
  std::vector<Integer> b(order + 1);
  b[0] = c0;  // 1/c0 == c0 for units
  Integer acc;
  for (std::size_t n = 1; n <= order; ++n) {
    acc = 0;
    for (std::size_t k : support) {
      if (k > n) break;
      mpz_addmul(acc.get_mpz_t(), a[k].get_mpz_t(), b[n - k].get_mpz_t());
    }
    b[n] = -acc * c0;
  }
  return PowerSeries(order, std::move(b));
}

PowerSeries ps_cumsum(const PowerSeries& a) {
  std::vector<Integer> out(a.coeffs().begin(), a.coeffs().end());
  detail::div_one_minus(out, 1, out.size());
  return PowerSeries(a.order(), std::move(out));
}

PowerSeries pochhammer(PochhammerBase base, std::size_t offset, std::optional<std::size_t> count,
                       std::size_t step, std::size_t order) {
  if (step == 0) throw UsageError("pochhammer: step must be positive");
  const bool positive = base == PochhammerBase::Positive;
  if (positive && offset == 0 && count.value_or(1) > 0) {
    throw DomainError("pochhammer: factor (1 - q^0) makes the constant term zero");
  }
  std::vector<Integer> buf(order + 1);
  buf[0] = 1;
  const std::size_t len = order + 1;
  for (std::size_t j = 0; !count || j < *count; ++j) {
    const std::size_t e = offset + j * step;
    if (e > order) break;  // factors beyond the truncation leave coefficients <= order unchanged
    if (e == 0) {
      // (1 + q^0) = 2
      for (auto& c : buf) c *= 2;
      continue;
    }
    if (positive) {
      detail::mul_one_minus(buf, e, len);
    } else {
      detail::mul_one_plus(buf, e, len);
    }
  }
  return PowerSeries(order, std::move(buf));
}

nlohmann::json to_json(const PowerSeries& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.get_str());
  return nlohmann::json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

PowerSeries power_series_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs")) {
    throw UsageError("power series JSON needs \"order\" and \"coeffs\"");
  }
  const auto& order_j = j.at("order");
  const auto& coeffs_j = j.at("coeffs");
  if (!order_j.is_number_unsigned() || !coeffs_j.is_array()) {
    throw UsageError("power series JSON: bad field types");
  }
  const auto order = order_j.get<std::size_t>();
  std::vector<Integer> coeffs;
  coeffs.reserve(coeffs_j.size());
  for (const auto& c : coeffs_j) {
    if (!c.is_string()) throw UsageError("power series JSON: coefficients must be decimal strings");
    Integer v;
    if (v.set_str(c.get<std::string>(), 10) != 0) {
      throw UsageError("power series JSON: not a decimal integer: " + c.get<std::string>());
    }
    coeffs.push_back(std::move(v));
  }
  return PowerSeries(order, std::move(coeffs));
}

std::string to_string(const PowerSeries& s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t n = 0; n <= s.order(); ++n) {
    if (n) os << ", ";
    os << s[n];
  }
  os << "] + O(q^" << s.order() + 1 << ')';
  return os.str();
}

}  // namespace stacklab
