// Acceptance suite: one PASS/FAIL line per criterion, tolerances and time limits pinned.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "stacklab/asym.hpp"
#include "stacklab/combinat.hpp"
#include "stacklab/genfun.hpp"
#include "stacklab_cli/cli.hpp"

namespace {

using namespace stacklab;
using std::numbers::pi;
const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

int failures = 0;

void criterion(int id, const char* title, double time_limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.passed = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed > time_limit_s) o.require(false, "took " + fmt("%.1f", elapsed) + " s, limit " + fmt("%.0f", time_limit_s) + " s");
  if (!o.passed) ++failures;
  std::printf("%s [%2d] %-58s %8.2fs%s%s\n", o.passed ? "PASS" : "FAIL", id, title, elapsed,
              o.detail.empty() ? "" : "  ", o.detail.c_str());
  std::fflush(stdout);
}

long coeff(Variant v, int n) { return series(v, static_cast<std::size_t>(n))[n].get_si(); }

}  // namespace

int main() {
  using combinat::StackVariant;

  criterion(1, "size-4 values from series and enumeration", 1.0, [] {
    Outcome o;
    const struct {
      Variant v;
      StackVariant sv;
      bool summits;
      long want;
    } cases[] = {{Variant::S, StackVariant::Stack, false, 8},      {Variant::SS, StackVariant::Stack, true, 12},
                 {Variant::G, StackVariant::Receding, false, 2},   {Variant::GS, StackVariant::Receding, true, 5},
                 {Variant::H, StackVariant::Shifted, false, 3},    {Variant::HS, StackVariant::Shifted, true, 6},
                 {Variant::D, StackVariant::Strict, false, 4},     {Variant::DM, StackVariant::SemiStrict, false, 5}};
    for (const auto& c : cases) {
      const long from_series = coeff(c.v, 4);
      const long from_objects =
          c.summits ? combinat::count_with_summits(c.sv, 4) : combinat::count(c.sv, 4);
      o.require(from_series == c.want && from_objects == c.want,
                std::string(variant_name(c.v)) + "(4): series " + std::to_string(from_series) + ", enumeration " +
                    std::to_string(from_objects) + ", expected " + std::to_string(c.want));
    }
    return o;
  });

  criterion(2, "series == brute force for every variant, 1 <= n <= 20", 120.0, [] {
    Outcome o;
    for (int n = 1; n <= 20; ++n) {
      const auto parts = combinat::partitions(n);
      long zero_top = 0;
      for (const auto& p : parts) zero_top += combinat::has_zero_top_row(combinat::partition_to_frobenius(p)) ? 1 : 0;
      const std::pair<Variant, long> checks[] = {
          {Variant::S, combinat::count(StackVariant::Stack, n)},
          {Variant::SS, combinat::count_with_summits(StackVariant::Stack, n)},
          {Variant::G, combinat::count(StackVariant::Receding, n)},
          {Variant::GS, combinat::count_with_summits(StackVariant::Receding, n)},
          {Variant::H, combinat::count(StackVariant::Shifted, n)},
          {Variant::HS, combinat::count_with_summits(StackVariant::Shifted, n)},
          {Variant::D, combinat::count(StackVariant::Strict, n)},
          {Variant::DM, combinat::count(StackVariant::SemiStrict, n)},
          {Variant::F0, zero_top},
          {Variant::FPHI, static_cast<long>(parts.size()) - zero_top},
          {Variant::P, static_cast<long>(parts.size())},
      };
      for (const auto& [v, brute] : checks) {
        const long s = coeff(v, n);
        o.require(s == brute, std::string(variant_name(v)) + "(" + std::to_string(n) + "): series " +
                                  std::to_string(s) + " vs " + std::to_string(brute));
      }
    }
    return o;
  });

  criterion(3, "identity suite at N = 500", 120.0, [] {
    Outcome o;
    for (IdentityTag tag : kAllIdentities) {
      const VerificationReport r = verify_identity(tag, 500);
      if (!r.passed) {
        std::string what = std::string(identity_name(tag)) + " fails";
        if (r.first_mismatch) what += " at q^" + std::to_string(r.first_mismatch->exponent);
        o.require(false, what);
      }
    }
    return o;
  });

  criterion(4, "bijection round trips (n<=30), zero-top-row split (n<=20)", 60.0, [] {
    Outcome o;
    for (int n = 1; n <= 30; ++n) {
      long zero = 0;
      long other = 0;
      for (const auto& p : combinat::partitions(n)) {
        const auto f = combinat::partition_to_frobenius(p);
        const auto m = combinat::partition_to_receding_summit(p);
        if (combinat::frobenius_to_partition(f) != p || combinat::receding_summit_to_partition(m) != p) {
          o.require(false, "round trip fails for " + combinat::format_partition(p));
        }
        if (n > 20) continue;
        const bool z = combinat::has_zero_top_row(f);
        if (z != combinat::summit_dominates_tail(m)) o.require(false, "correspondence fails for " + combinat::format_partition(p));
        (z ? zero : other) += 1;
      }
      if (n <= 20) {
        o.require(zero == coeff(Variant::G, n), "F0(" + std::to_string(n) + ") != g");
        o.require(other == coeff(Variant::GS, n) - coeff(Variant::G, n), "Fphi(" + std::to_string(n) + ") != gs - g");
      }
    }
    return o;
  });

  criterion(5, "dilog(phi^-2), f(v), f''(v), f'(v)", 10.0, [] {
    Outcome o;
    const double d = std::fabs(asym::dilog(1 / (kPhi * kPhi)) - (pi * pi / 15 - std::log(kPhi) * std::log(kPhi)));
    const asym::SaddleData s = asym::saddle_data();
    const double f = std::fabs(s.f_v - pi * pi / 30);
    const double fpp = std::fabs(s.fpp_v + 4 * pi * pi * std::sqrt(5.0));
    o.require(d < 1e-12, "dilog error " + fmt("%.2e", d));
    o.require(f < 1e-12, "f(v) error " + fmt("%.2e", f));
    o.require(fpp < 1e-10, "f''(v) error " + fmt("%.2e", fpp));
    o.require(s.fp_abs < 1e-10, "|f'(v)| = " + fmt("%.2e", s.fp_abs));
    if (o.passed) o.detail = "max err " + fmt("%.1e", std::max({d, f, fpp / 10, s.fp_abs}));
    return o;
  });

  criterion(6, "Ingham transfer reproduces DM, H, HS main terms (1e-12)", 1.0, [] {
    Outcome o;
    for (Variant v : {Variant::DM, Variant::H, Variant::HS}) {
      const asym::MainTerm t = asym::ingham_transfer(asym::eps_asymptotic(v));
      const asym::MainTerm m = asym::main_term(v);
      const double err = std::max({std::fabs(t.C / m.C - 1), std::fabs(t.alpha / m.alpha - 1), std::fabs(t.beta / m.beta - 1)});
      o.require(err < 1e-12, std::string(variant_name(v)) + " relative error " + fmt("%.2e", err));
    }
    return o;
  });

  criterion(7, "contour A vs from-H (eps .05) and main term (eps .02)", 10.0, [] {
    Outcome o;
    const double c05 = asym::contour_A(0.05);
    const double h05 = asym::A_from_H(0.05);
    const double c02 = asym::contour_A(0.02);
    const LogReal m02 = asym::A_mainterm(0.02);
    const double r1 = c05 / h05;
    const double r2 = ratio(LogReal::from_double(c02), m02);
    o.require(r1 >= 0.98 && r1 <= 1.02, "contour/from-H = " + fmt("%.6f", r1));
    o.require(r2 >= 0.90 && r2 <= 1.10, "contour/main = " + fmt("%.6f", r2));
    o.require(c05 < 0 && h05 < 0 && c02 < 0 && m02.sign() < 0, "sign is not negative");
    if (o.passed) o.detail = "ratios " + fmt("%.6f", r1) + ", " + fmt("%.6f", r2);
    return o;
  });

  criterion(8, "coeff ratios at n=5000 in [0.8,1.2] and closer than n=500", 600.0, [] {
    Outcome o;
    std::string summary;
    for (Variant v : {Variant::GS, Variant::DM, Variant::H, Variant::HS, Variant::S, Variant::SS, Variant::G, Variant::D,
                      Variant::FPHI}) {
      const PowerSeries s = series(v, 5000);
      const double r500 = asym::coeff_ratio(v, 500, s);
      const double r5000 = asym::coeff_ratio(v, 5000, s);
      o.require(r5000 >= 0.8 && r5000 <= 1.2, std::string(variant_name(v)) + " ratio(5000) = " + fmt("%.4f", r5000));
      o.require(std::fabs(r5000 - 1) < std::fabs(r500 - 1), std::string(variant_name(v)) + " does not improve");
      summary += std::string(summary.empty() ? "" : " ") + std::string(variant_name(v)) + "=" + fmt("%.4f", r5000);
    }
    if (o.passed) o.detail = summary;
    return o;
  });

  criterion(9, "eps limits: L -> 1/2, eta inversion, Hs/H -> phi", 30.0, [] {
    Outcome o;
    for (double eps : {0.1, 0.05, 0.02}) {
      const double l = asym::eval_genfun(Variant::L, eps).to_double();
      o.require(std::fabs(l - 0.5) <= eps / 4, "L at eps " + fmt("%g", eps) + " = " + fmt("%.6f", l));
      const double eta = std::exp(asym::log_qpochhammer_inf(eps) - 0.5 * std::log(2 * pi / eps) + pi * pi / (6 * eps));
      o.require(std::fabs(eta - 1) < eps, "(q)_inf ratio at eps " + fmt("%g", eps) + " = " + fmt("%.8f", eta));
    }
    const double r02 = asym::hs_over_h(0.02);
    const double r01 = asym::hs_over_h(0.01);
    o.require(std::fabs(r02 - kPhi) <= 0.08 * kPhi, "Hs/H at 0.02 = " + fmt("%.6f", r02));
    o.require(std::fabs(r01 - kPhi) < std::fabs(r02 - kPhi), "Hs/H at 0.01 not closer to phi");
    if (o.passed) o.detail = "Hs/H " + fmt("%.5f", r02) + " -> " + fmt("%.5f", r01);
    return o;
  });

  criterion(10, "`asym catalog --format json` matches the constants (1e-12)", 5.0, [] {
    Outcome o;
    std::ostringstream out, err;
    const int code = cli::run_cli({"--no-cache", "asym", "catalog", "--format", "json"}, out, err);
    o.require(code == 0, "exit code " + std::to_string(code));
    const nlohmann::json doc = nlohmann::json::parse(out.str());
    const double h = 1 / (kPhi * 2 * std::sqrt(2.0) * std::pow(5.0, 0.75));
    const struct {
      const char* name;
      double C, alpha, beta;
    } expected[] = {
        {"s", std::pow(2.0, -3) * std::pow(3.0, -0.75), 5.0 / 4, 4.0 / 3},
        {"ss", std::pow(2.0, -3) * std::pow(3.0, -0.75), 5.0 / 4, 4.0 / 3},
        {"g", std::pow(2.0, -3) / std::sqrt(3.0), 1, 2.0 / 3},
        {"gs", std::pow(2.0, -2) / std::sqrt(3.0), 1, 2.0 / 3},
        {"p", std::pow(2.0, -2) / std::sqrt(3.0), 1, 2.0 / 3},
        {"d", std::pow(2.0, -13.0 / 4) * std::pow(3.0, -0.25), 3.0 / 4, 2.0 / 3},
        {"h", h, 1, 4.0 / 5},
        {"hs", kPhi * h, 1, 4.0 / 5},
        {"dm", 1.0 / 16, 1, 1},
        {"fphi", 1 / (8 * std::sqrt(3.0)), 1, 2.0 / 3},
        {"f0", 1 / (8 * std::sqrt(3.0)), 1, 2.0 / 3},
    };
    o.require(doc.size() == std::size(expected), "catalog has " + std::to_string(doc.size()) + " entries");
    for (const auto& e : expected) {
      const auto it = std::find_if(doc.begin(), doc.end(), [&](const auto& row) { return row.at("variant") == e.name; });
      if (it == doc.end()) {
        o.require(false, std::string("missing ") + e.name);
        continue;
      }
      const double err = std::max({std::fabs(it->at("C").template get<double>() / e.C - 1),
                                   std::fabs(it->at("alpha").template get<double>() / e.alpha - 1),
                                   std::fabs(it->at("beta").template get<double>() / e.beta - 1)});
      o.require(err < 1e-12, std::string(e.name) + " relative error " + fmt("%.2e", err));
    }
    return o;
  });

  std::printf("%d criteria failed\n", failures);
  return failures;
}
