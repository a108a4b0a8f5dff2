#include "stacklab/genfun.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "stacklab/bivariate.hpp"
#include "stacklab/detail/kernels.hpp"
#include "stacklab/errors.hpp"

namespace stacklab {

namespace {

using detail::div_one_minus;
using detail::mul_one_plus;

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

// sum_{m >= first} q^{exponent(m)} T_m, where step(buf, m, len) turns T_{m-1} into T_m
// (T_{first-1} = 1) on the first len coefficients. exponent must be strictly increasing,
// which lets every later term work on a shorter prefix of the same buffer.
template <typename Exponent, typename Step>
PowerSeries eulerian_sum(std::size_t order, std::size_t first, Exponent exponent, Step step) {
  std::vector<Integer> acc(order + 1);
  std::vector<Integer> buf(order + 1);
  buf[0] = 1;
  for (std::size_t m = first;; ++m) {
    const std::size_t e = exponent(m);
    if (e > order) break;
    const std::size_t len = order - e + 1;
    step(buf, m, len);
    for (std::size_t i = 0; i < len; ++i) acc[e + i] += buf[i];
  }
  return PowerSeries(order, std::move(acc));
}

// 1 + sum_{m>=1} q^{e(m)} / ((q)_{m-1}^2 (1 - q^m)); note (q)_{m-1}^2 (1-q^m) = (q)_{m-1} (q)_m.
template <typename Exponent>
PowerSeries first_kind_sum(std::size_t order, Exponent exponent) {
  PowerSeries s = eulerian_sum(order, 1, exponent, [](std::vector<Integer>& buf, std::size_t m, std::size_t len) {
    if (m >= 2) div_one_minus(buf, m - 1, len);
    div_one_minus(buf, m, len);
  });
  return s + PowerSeries::one(order);
}

// sum_{m>=0} q^{e(m)} / (q)_m^2
template <typename Exponent>
PowerSeries summit_kind_sum(std::size_t order, Exponent exponent) {
  return eulerian_sum(order, 0, exponent, [](std::vector<Integer>& buf, std::size_t m, std::size_t len) {
    if (m == 0) return;
    div_one_minus(buf, m, len);
    div_one_minus(buf, m, len);
  });
}

PowerSeries strict_sum(std::size_t order) {
  // sum_{m>=0} q^{m+1} (-q)_m^2
  return eulerian_sum(order, 0, [](std::size_t m) { return m + 1; },
                      [](std::vector<Integer>& buf, std::size_t m, std::size_t len) {
                        if (m == 0) return;
                        mul_one_plus(buf, m, len);
                        mul_one_plus(buf, m, len);
                      });
}

PowerSeries semi_strict_sum(std::size_t order) {
  // sum_{m>=0} q^{m+1} (-q)_m / (q)_m
  return eulerian_sum(order, 0, [](std::size_t m) { return m + 1; },
                      [](std::vector<Integer>& buf, std::size_t m, std::size_t len) {
                        if (m == 0) return;
                        mul_one_plus(buf, m, len);
                        div_one_minus(buf, m, len);
                      });
}

PowerSeries partition_series(std::size_t order) {
  return ps_inverse(pochhammer(PochhammerBase::Positive, 1, kInfinite, 1, order));
}

PowerSeries frobenius_no_zero(std::size_t order) {
  return summit_kind_sum(order, [](std::size_t m) { return m * m + m; });
}

// Sizes of the empty objects differ between the two sides of some identities:
// the stack series count the empty stack at q^0, the false theta side and the
// Frobenius-symbol split do not. These identities hold exactly once q^0 is reconciled.
PowerSeries plus_one(PowerSeries s) { return s + PowerSeries::one(s.order()); }
PowerSeries minus_one(PowerSeries s) { return s - PowerSeries::one(s.order()); }

BivariateSeries jacobi_product(std::size_t order) {
  const XWindow w = sufficient_window(order);
  const PowerSeries qpoch = pochhammer(PochhammerBase::Positive, 1, kInfinite, 1, order);
  return (neg_inverse_x_product(w, order) * neg_xq_product(w, order)) * qpoch;
}

BivariateSeries jacobi_sum(std::size_t order) {
  const XWindow w = sufficient_window(order);
  BivariateSeries out(w, order);
  for (int n = w.x_min; n <= w.x_max; ++n) {
    const long e = static_cast<long>(n) * (n + 1) / 2;
    out += BivariateSeries::monomial(w, order, n, PowerSeries::monomial(order, static_cast<std::size_t>(e)));
  }
  return out;
}

PowerSeries shifted_constant_term(std::size_t order) {
  const XWindow w = sufficient_window(order);
  // q x (xq; q)_inf^{-1}, then times (-x^{-1}; q)_inf
  const BivariateSeries qx = BivariateSeries::monomial(w, order, 1, PowerSeries::monomial(order, 1));
  return constant_term_x(neg_inverse_x_product(w, order) * (qx * xq_product_inverse(w, order)));
}

PowerSeries shifted_summit_constant_term(std::size_t order) {
  const XWindow w = sufficient_window(order);
  return constant_term_x(neg_inverse_x_product(w, order) * xq_product_inverse(w, order));
}

}  // namespace

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::S: return "s";
    case Variant::SS: return "ss";
    case Variant::G: return "g";
    case Variant::GS: return "gs";
    case Variant::H: return "h";
    case Variant::HS: return "hs";
    case Variant::D: return "d";
    case Variant::DM: return "dm";
    case Variant::FPHI: return "fphi";
    case Variant::F0: return "f0";
    case Variant::P: return "p";
    case Variant::L: return "l";
  }
  return "?";
}

Variant parse_variant(std::string_view name) {
  const std::string key = lower(name);
  for (Variant v : kAllVariants) {
    if (variant_name(v) == key) return v;
  }
  throw UsageError("unknown variant '" + std::string(name) + "'");
}

std::string_view identity_name(IdentityTag tag) {
  switch (tag) {
    case IdentityTag::SS_STANLEY: return "ss_stanley";
    case IdentityTag::S_AULUCK: return "s_auluck";
    case IdentityTag::DM_ETA: return "dm_eta";
    case IdentityTag::GS_EQ_P: return "gs_eq_p";
    case IdentityTag::G_PLUS_FPHI: return "g_plus_fphi";
    case IdentityTag::GS_SUM: return "gs_sum";
    case IdentityTag::F0_EQ_G: return "f0_eq_g";
    case IdentityTag::HS_EULERIAN: return "hs_eulerian";
    case IdentityTag::HS_WATSON: return "hs_watson";
    case IdentityTag::RR0: return "rr0";
    case IdentityTag::RR1: return "rr1";
    case IdentityTag::JTP_SPECIAL: return "jtp_special";
    case IdentityTag::CONST_TERM_H: return "const_term_h";
    case IdentityTag::CONST_TERM_HS: return "const_term_hs";
  }
  return "?";
}

IdentityTag parse_identity(std::string_view name) {
  const std::string key = lower(name);
  for (IdentityTag t : kAllIdentities) {
    if (identity_name(t) == key) return t;
  }
  throw UsageError("unknown identity '" + std::string(name) + "'");
}

std::string_view identity_description(IdentityTag tag) {
  switch (tag) {
    case IdentityTag::SS_STANLEY: return "Ss(q) = (1 - L(q)) / (q)_inf^2";
    case IdentityTag::S_AULUCK: return "S(q) = 1 + L(q) / (q)_inf^2";
    case IdentityTag::DM_ETA: return "Dm(q) = q (q^2;q^2)_inf / ((1+q) (q)_inf^2)";
    case IdentityTag::GS_EQ_P: return "Gs(q) = 1 / (q)_inf";
    case IdentityTag::G_PLUS_FPHI: return "Gs(q) = Fphi(q) + G(q) - 1";
    case IdentityTag::GS_SUM: return "1/(q)_inf = Fphi(q) + G(q) - 1";
    case IdentityTag::F0_EQ_G: return "Gs(q) - Fphi(q) = G(q) - 1";
    case IdentityTag::HS_EULERIAN: return "H(q) = 1 + (1/(q)_inf) sum q^{(2m+1)(m+1)} / (q^2;q^2)_m";
    case IdentityTag::HS_WATSON: return "Hs(q) = G_{1/2}(q^2) / (q)_inf";
    case IdentityTag::RR0: return "sum q^{n^2}/(q)_n = 1/((q;q^5)_inf (q^4;q^5)_inf)";
    case IdentityTag::RR1: return "sum q^{n(n+1)}/(q)_n = 1/((q^2;q^5)_inf (q^3;q^5)_inf)";
    case IdentityTag::JTP_SPECIAL: return "(-1/x)_inf (-xq)_inf (q)_inf = sum x^n q^{n(n+1)/2}";
    case IdentityTag::CONST_TERM_H: return "H(q) = 1 + [x^0] q x (-1/x)_inf / (xq)_inf";
    case IdentityTag::CONST_TERM_HS: return "Hs(q) = [x^0] (-1/x)_inf / (xq)_inf";
  }
  return "?";
}

PowerSeries false_theta(std::size_t order) {
  std::vector<Integer> c(order + 1);
  for (std::size_t n = 1;; ++n) {
    const std::size_t e = n * (n + 1) / 2;
    if (e > order) break;
    c[e] = (n % 2 == 1) ? 1 : -1;
  }
  return PowerSeries(order, std::move(c));
}

PowerSeries series(Variant v, std::size_t order) {
  switch (v) {
    case Variant::S: return first_kind_sum(order, [](std::size_t m) { return m; });
    case Variant::SS: return summit_kind_sum(order, [](std::size_t m) { return m; });
    case Variant::G: return first_kind_sum(order, [](std::size_t m) { return m * m; });
    case Variant::GS: return summit_kind_sum(order, [](std::size_t m) { return m * m; });
    case Variant::H: return first_kind_sum(order, [](std::size_t m) { return m * (m + 1) / 2; });
    case Variant::HS: return summit_kind_sum(order, [](std::size_t m) { return m * (m + 1) / 2; });
    case Variant::D: return strict_sum(order);
    case Variant::DM: return semi_strict_sum(order);
    case Variant::FPHI: return frobenius_no_zero(order);
    case Variant::F0: return series(Variant::GS, order) - frobenius_no_zero(order);
    case Variant::P: return partition_series(order);
    case Variant::L: return false_theta(order);
  }
  throw UsageError("series: unknown variant");
}

PowerSeries rogers_ramanujan_sum(int u, std::size_t order) {
  if (u != 0 && u != 1) throw UsageError("rogers_ramanujan_sum: u must be 0 or 1");
  const std::size_t shift = static_cast<std::size_t>(u);
  return eulerian_sum(order, 0, [shift](std::size_t n) { return n * (n + shift); },
                      [](std::vector<Integer>& buf, std::size_t n, std::size_t len) {
                        if (n > 0) div_one_minus(buf, n, len);
                      });
}

PowerSeries rogers_ramanujan_product(int u, std::size_t order) {
  if (u != 0 && u != 1) throw UsageError("rogers_ramanujan_product: u must be 0 or 1");
  const auto r = static_cast<std::size_t>(u);
  const PowerSeries a = pochhammer(PochhammerBase::Positive, 1 + r, kInfinite, 5, order);
  const PowerSeries b = pochhammer(PochhammerBase::Positive, 4 - r, kInfinite, 5, order);
  return ps_inverse(a * b);
}

PowerSeries watson_half_sum(std::size_t order) {
  return eulerian_sum(order, 0, [](std::size_t n) { return n * (2 * n + 1); },
                      [](std::vector<Integer>& buf, std::size_t n, std::size_t len) {
                        if (n > 0) div_one_minus(buf, 2 * n, len);
                      });
}

PowerSeries shifted_eulerian_form(std::size_t order) {
  const PowerSeries sum = eulerian_sum(order, 0, [](std::size_t m) { return (2 * m + 1) * (m + 1); },
                                       [](std::vector<Integer>& buf, std::size_t m, std::size_t len) {
                                         if (m > 0) div_one_minus(buf, 2 * m, len);
                                       });
  return plus_one(partition_series(order) * sum);
}

PowerSeries closed_form(IdentityTag tag, Side side, std::size_t order) {
  const bool left = side == Side::Left;
  switch (tag) {
    case IdentityTag::SS_STANLEY: {
      if (left) return series(Variant::SS, order);
      const PowerSeries p = partition_series(order);
      return (PowerSeries::one(order) - false_theta(order)) * (p * p);
    }
    case IdentityTag::S_AULUCK: {
      if (left) return series(Variant::S, order);
      const PowerSeries p = partition_series(order);
      return plus_one(false_theta(order) * (p * p));
    }
    case IdentityTag::DM_ETA: {
      if (left) return series(Variant::DM, order);
      const PowerSeries p = partition_series(order);
      const PowerSeries even = pochhammer(PochhammerBase::Positive, 2, kInfinite, 2, order);
      const PowerSeries one_plus_q_inv = ps_inverse(PowerSeries::from_list(order, {1, 1}));
      return (even * one_plus_q_inv * (p * p)).shifted(1);
    }
    case IdentityTag::GS_EQ_P:
      return left ? series(Variant::GS, order) : partition_series(order);
    case IdentityTag::G_PLUS_FPHI:
      if (left) return series(Variant::GS, order);
      return minus_one(frobenius_no_zero(order) + series(Variant::G, order));
    case IdentityTag::GS_SUM:
      if (left) return partition_series(order);
      return minus_one(frobenius_no_zero(order) + series(Variant::G, order));
    case IdentityTag::F0_EQ_G:
      return left ? series(Variant::F0, order) : minus_one(series(Variant::G, order));
    case IdentityTag::HS_EULERIAN:
      return left ? series(Variant::H, order) : shifted_eulerian_form(order);
    case IdentityTag::HS_WATSON:
      return left ? series(Variant::HS, order) : partition_series(order) * watson_half_sum(order);
    case IdentityTag::RR0:
      return left ? rogers_ramanujan_sum(0, order) : rogers_ramanujan_product(0, order);
    case IdentityTag::RR1:
      return left ? rogers_ramanujan_sum(1, order) : rogers_ramanujan_product(1, order);
    case IdentityTag::JTP_SPECIAL:
      return left ? constant_term_x(jacobi_product(order)) : constant_term_x(jacobi_sum(order));
    case IdentityTag::CONST_TERM_H:
      return left ? series(Variant::H, order) : plus_one(shifted_constant_term(order));
    case IdentityTag::CONST_TERM_HS:
      return left ? series(Variant::HS, order) : shifted_summit_constant_term(order);
  }
  throw UsageError("closed_form: unknown identity");
}

namespace {

std::optional<Mismatch> first_mismatch(const PowerSeries& l, const PowerSeries& r) {
  for (std::size_t n = 0; n <= l.order(); ++n) {
    if (l[n] != r[n]) return Mismatch{n, l[n], r[n], std::nullopt};
  }
  return std::nullopt;
}

}  // namespace

VerificationReport verify_identity(IdentityTag tag, std::size_t order) {
  VerificationReport report{tag, order, false, std::nullopt};
  if (tag == IdentityTag::JTP_SPECIAL) {
    const BivariateSeries l = jacobi_product(order);
    const BivariateSeries r = jacobi_sum(order);
    for (int k = l.window().x_min; k <= l.window().x_max && !report.first_mismatch; ++k) {
      if (auto m = first_mismatch(l.at(k), r.at(k))) {
        m->x_exponent = k;
        report.first_mismatch = std::move(m);
      }
    }
  } else {
    report.first_mismatch = first_mismatch(closed_form(tag, Side::Left, order), closed_form(tag, Side::Right, order));
  }
  report.passed = !report.first_mismatch.has_value();
  return report;
}

}  // namespace stacklab
