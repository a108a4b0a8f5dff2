#pragma once

// Generating functions of the stack families as exact power series, and the catalog
// of series identities that tie them together.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "stacklab/series.hpp"

namespace stacklab {

enum class Variant {
  S,     // stacks
  SS,    // stacks with summits
  G,     // receding stacks
  GS,    // receding stacks with summits
  H,     // shifted stacks
  HS,    // shifted stacks with summits
  D,     // strict stacks
  DM,    // semi-strict stacks
  FPHI,  // Frobenius symbols without a zero in the top row
  F0,    // Frobenius symbols with a zero in the top row
  P,     // partitions
  L,     // false theta function
};

inline constexpr std::array kAllVariants = {Variant::S,  Variant::SS, Variant::G,    Variant::GS,
                                            Variant::H,  Variant::HS, Variant::D,    Variant::DM,
                                            Variant::FPHI, Variant::F0, Variant::P, Variant::L};

// Lower-case short name: "s", "ss", ..., "fphi", "f0", "p", "l".
std::string_view variant_name(Variant v);
// Inverse of variant_name (case-insensitive). UsageError on unknown names.
Variant parse_variant(std::string_view name);

enum class IdentityTag {
  SS_STANLEY,
  S_AULUCK,
  DM_ETA,
  GS_EQ_P,
  G_PLUS_FPHI,
  GS_SUM,
  F0_EQ_G,
  HS_EULERIAN,
  HS_WATSON,
  RR0,
  RR1,
  JTP_SPECIAL,
  CONST_TERM_H,
  CONST_TERM_HS,
};

inline constexpr std::array kAllIdentities = {
    IdentityTag::SS_STANLEY, IdentityTag::S_AULUCK,    IdentityTag::DM_ETA,       IdentityTag::GS_EQ_P,
    IdentityTag::G_PLUS_FPHI, IdentityTag::GS_SUM,     IdentityTag::F0_EQ_G,      IdentityTag::HS_EULERIAN,
    IdentityTag::HS_WATSON,  IdentityTag::RR0,         IdentityTag::RR1,          IdentityTag::JTP_SPECIAL,
    IdentityTag::CONST_TERM_H, IdentityTag::CONST_TERM_HS};

// Lower-case tag name, e.g. "gs_eq_p".
std::string_view identity_name(IdentityTag tag);
IdentityTag parse_identity(std::string_view name);
// One-line human description of the two sides.
std::string_view identity_description(IdentityTag tag);

// Exact coefficients of the variant's generating function to order N, built from its
// Eulerian sum (P and L from their product / sum definitions; F0 as GS - FPHI).
PowerSeries series(Variant v, std::size_t order);

enum class Side { Left, Right };

// Named side of an identity. For JTP_SPECIAL the x^0 slice of the bivariate product is
// returned; verify_identity compares every slice of the window.
PowerSeries closed_form(IdentityTag tag, Side side, std::size_t order);

struct Mismatch {
  std::size_t exponent = 0;
  Integer left;
  Integer right;
  std::optional<int> x_exponent;  // set for bivariate identities
};

struct VerificationReport {
  IdentityTag tag;
  std::size_t order = 0;
  bool passed = false;
  std::optional<Mismatch> first_mismatch;
};

VerificationReport verify_identity(IdentityTag tag, std::size_t order);

// Individual Eulerian sums used by the identity catalog.
// G_u(q) = sum_n q^{n(n+u)} / (q)_n for u in {0, 1}.
PowerSeries rogers_ramanujan_sum(int u, std::size_t order);
// 1 / ((q^{1+u}; q^5)_inf (q^{4-u}; q^5)_inf)
PowerSeries rogers_ramanujan_product(int u, std::size_t order);
// sum_n q^{n(2n+1)} / (q^2; q^2)_n, i.e. G_{1/2}(q^2)
PowerSeries watson_half_sum(std::size_t order);
// 1 + (1/(q)_inf) sum_m q^{(2m+1)(m+1)} / (q^2; q^2)_m
PowerSeries shifted_eulerian_form(std::size_t order);
// sum_n (-1)^{n-1} q^{n(n+1)/2}
PowerSeries false_theta(std::size_t order);

}  // namespace stacklab
