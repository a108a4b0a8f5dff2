#include "stacklab_cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "stacklab/asym.hpp"
#include "stacklab/combinat.hpp"
#include "stacklab/errors.hpp"
#include "stacklab/genfun.hpp"
#include "stacklab_cli/cache.hpp"
#include "stacklab_cli/table.hpp"

namespace stacklab::cli {

namespace {

using nlohmann::json;

// Largest series order computed without --unsafe-large.
constexpr long long kSeriesOrderBound = 20000;

constexpr std::array kTableVariants = {Variant::S,  Variant::SS, Variant::G,    Variant::GS, Variant::H, Variant::HS,
                                       Variant::D,  Variant::DM, Variant::FPHI, Variant::F0, Variant::P};

struct Options {
  std::string format = "text";
  std::string out_path;
  std::string cache_dir;
  bool no_cache = false;
  bool force_recompute = false;
  bool unsafe_large = false;

  std::string variant;
  long long n = 0;
  bool oracle = false;
  bool summits = false;

  std::vector<std::string> variants;
  long long max = 0;

  std::string identity;
  long long order = 100;

  std::string partition;
  bool all = false;
  bool check = false;

  std::string target;
  std::vector<long long> n_list = {500, 5000};
  std::vector<double> eps_list;
};

struct Context {
  const Options& opt;
  Format format;
  SeriesCache& cache;
  std::ostringstream body;
};

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  return Format::Text;
}

std::size_t checked_order(long long order, const Options& opt, const char* what) {
  if (order < 0) throw UsageError(std::string(what) + " must be nonnegative");
  if (order > kSeriesOrderBound && !opt.unsafe_large) {
    throw ResourceError(std::string(what) + " = " + std::to_string(order) + " exceeds " +
                        std::to_string(kSeriesOrderBound) + "; pass --unsafe-large to proceed");
  }
  return static_cast<std::size_t>(order);
}

combinat::EnumerationLimits limits(const Options& opt) { return {combinat::kSafetyBound, opt.unsafe_large}; }

void check_enumeration_size(long long n, const Options& opt) {
  if (n > combinat::kSafetyBound && !opt.unsafe_large) {
    throw ResourceError("n = " + std::to_string(n) + " exceeds the enumeration bound " +
                        std::to_string(combinat::kSafetyBound) + "; pass --unsafe-large to proceed");
  }
}

// Brute-force count matching coefficient n of the variant's series.
long long oracle_count(Variant v, int n, const Options& opt) {
  using combinat::StackVariant;
  const auto lim = limits(opt);
  const auto frobenius_split = [&](bool zero_top_row) {
    long long k = 0;
    for (const auto& p : combinat::partitions(n, lim)) {
      if (combinat::has_zero_top_row(combinat::partition_to_frobenius(p)) == zero_top_row) ++k;
    }
    return k;
  };
  switch (v) {
    case Variant::S: return combinat::count(StackVariant::Stack, n, lim);
    case Variant::SS: return combinat::count_with_summits(StackVariant::Stack, n, lim);
    case Variant::G: return combinat::count(StackVariant::Receding, n, lim);
    case Variant::GS: return combinat::count_with_summits(StackVariant::Receding, n, lim);
    case Variant::H: return combinat::count(StackVariant::Shifted, n, lim);
    case Variant::HS: return combinat::count_with_summits(StackVariant::Shifted, n, lim);
    case Variant::D: return combinat::count(StackVariant::Strict, n, lim);
    case Variant::DM: return combinat::count(StackVariant::SemiStrict, n, lim);
    case Variant::FPHI: return frobenius_split(false);
    case Variant::F0: return frobenius_split(true);
    case Variant::P: return static_cast<long long>(combinat::partitions(n, lim).size());
    case Variant::L: break;
  }
  throw UsageError("variant 'l' has no brute-force oracle");
}

Variant with_summits(Variant v) {
  switch (v) {
    case Variant::S: return Variant::SS;
    case Variant::G: return Variant::GS;
    case Variant::H: return Variant::HS;
    case Variant::SS:
    case Variant::GS:
    case Variant::HS: return v;
    default: break;
  }
  throw UsageError("--summits applies to s, g and h only");
}

int cmd_count(Context& ctx) {
  const Options& opt = ctx.opt;
  Variant v = parse_variant(opt.variant);
  if (opt.summits) v = with_summits(v);
  if (opt.n < 1) throw UsageError("n must be >= 1");
  if (opt.oracle) check_enumeration_size(opt.n, opt);
  const std::size_t n = checked_order(opt.n, opt, "n");
  const std::string value = ctx.cache.get(v, n)[n].get_str();

  std::optional<long long> oracle;
  if (opt.oracle) oracle = oracle_count(v, static_cast<int>(opt.n), opt);
  const bool match = !oracle || std::to_string(*oracle) == value;

  if (ctx.format == Format::Text) {
    ctx.body << value;
    if (oracle) ctx.body << " oracle=" << *oracle << (match ? " match" : " MISMATCH");
    ctx.body << '\n';
  } else {
    Table t{{"variant", "n", "count"}, {}};
    std::vector<json> row{std::string(variant_name(v)), opt.n, value};
    if (oracle) {
      t.columns.insert(t.columns.end(), {"oracle", "match"});
      row.insert(row.end(), {std::to_string(*oracle), match});
    }
    t.add(std::move(row));
    ctx.body << t.render(ctx.format);
  }
  return match ? kOk : kVerificationFailed;
}

int cmd_table(Context& ctx) {
  const Options& opt = ctx.opt;
  std::vector<Variant> variants;
  if (opt.variants.empty()) {
    variants.assign(kTableVariants.begin(), kTableVariants.end());
  } else {
    for (const auto& name : opt.variants) variants.push_back(parse_variant(name));
  }
  const std::size_t max = checked_order(opt.max, opt, "--max");
  std::vector<PowerSeries> columns;
  for (Variant v : variants) columns.push_back(ctx.cache.get(v, max));

  Table t;
  t.columns.push_back("n");
  for (Variant v : variants) t.columns.emplace_back(variant_name(v));
  for (std::size_t n = 0; n <= max; ++n) {
    std::vector<json> row{n};
    for (const auto& s : columns) row.emplace_back(s[n].get_str());
    t.add(std::move(row));
  }
  ctx.body << t.render(ctx.format);
  return kOk;
}

int cmd_verify(Context& ctx) {
  const Options& opt = ctx.opt;
  std::vector<IdentityTag> tags;
  if (opt.identity == "all") {
    tags.assign(kAllIdentities.begin(), kAllIdentities.end());
  } else {
    tags.push_back(parse_identity(opt.identity));
  }
  const std::size_t order = checked_order(opt.order, opt, "--order");

  Table t{{"identity", "order", "passed", "exponent", "x_exponent", "left", "right"}, {}};
  bool all_passed = true;
  for (IdentityTag tag : tags) {
    const VerificationReport r = verify_identity(tag, order);
    all_passed = all_passed && r.passed;
    std::vector<json> row{std::string(identity_name(tag)), order, r.passed, nullptr, nullptr, nullptr, nullptr};
    if (r.first_mismatch) {
      const Mismatch& m = *r.first_mismatch;
      row[3] = m.exponent;
      if (m.x_exponent) row[4] = *m.x_exponent;
      row[5] = m.left.get_str();
      row[6] = m.right.get_str();
    }
    if (ctx.format == Format::Text) {
      ctx.body << (r.passed ? "PASS " : "FAIL ") << identity_name(tag) << " (order " << order << ")";
      if (r.first_mismatch) {
        const Mismatch& m = *r.first_mismatch;
        ctx.body << ": first mismatch at q^" << m.exponent;
        if (m.x_exponent) ctx.body << " x^" << *m.x_exponent;
        ctx.body << ", left " << m.left.get_str() << ", right " << m.right.get_str();
      }
      ctx.body << "  [" << identity_description(tag) << "]\n";
    }
    t.add(std::move(row));
  }
  if (ctx.format != Format::Text) ctx.body << t.render(ctx.format);
  return all_passed ? kOk : kVerificationFailed;
}

int cmd_bijection(Context& ctx) {
  const Options& opt = ctx.opt;
  if (opt.n < 1) throw UsageError("n must be >= 1");
  check_enumeration_size(opt.n, opt);
  const int n = static_cast<int>(opt.n);

  std::vector<combinat::Partition> parts;
  if (!opt.partition.empty()) {
    combinat::Partition p = combinat::parse_partition(opt.partition);
    if (p.size() < 1 || p.size() > n) {
      throw UsageError("partition " + combinat::format_partition(p) + " has size " + std::to_string(p.size()) +
                       ", expected 1.." + std::to_string(n));
    }
    parts.push_back(std::move(p));
  } else {
    parts = combinat::partitions(n, limits(opt));
  }

  Table t{{"partition", "frobenius", "receding_summit", "zero_top_row"}, {}};
  long long round_trip_failures = 0;
  long long correspondence_failures = 0;
  long long zero_top_row = 0;
  for (const auto& p : parts) {
    const combinat::FrobeniusSymbol f = combinat::partition_to_frobenius(p);
    const combinat::MarkedStack m = combinat::partition_to_receding_summit(p);
    const bool zero = combinat::has_zero_top_row(f);
    zero_top_row += zero ? 1 : 0;
    if (opt.check) {
      bool ok = combinat::frobenius_to_partition(f) == p;
      try {
        ok = ok && combinat::receding_summit_to_partition(m) == p;
      } catch (const DomainError&) {
        ok = false;
      }
      round_trip_failures += ok ? 0 : 1;
      if (zero != combinat::summit_dominates_tail(m) || zero != combinat::kth_part_is_k(p)) ++correspondence_failures;
    }
    t.add({combinat::format_partition(p), combinat::format_frobenius(f), combinat::format_marked(m), zero});
  }

  if (ctx.format == Format::Text) {
    for (const auto& row : t.rows) {
      ctx.body << row[0].get<std::string>() << "  ->  (" << row[1].get<std::string>() << ")  ->  "
               << row[2].get<std::string>() << '\n';
    }
  } else if (!opt.check || ctx.format == Format::Csv) {
    ctx.body << t.render(ctx.format);
  }
  if (!opt.check) return kOk;

  bool split_ok = true;
  std::optional<std::pair<std::string, std::string>> split;
  if (opt.partition.empty()) {
    const std::string g = ctx.cache.get(Variant::G, n)[n].get_str();
    const std::string gs = ctx.cache.get(Variant::GS, n)[n].get_str();
    const std::string other = Integer(Integer(gs) - Integer(g)).get_str();
    split_ok = std::to_string(zero_top_row) == g &&
               std::to_string(static_cast<long long>(parts.size()) - zero_top_row) == other;
    split = std::pair{g, other};
  }
  const bool ok = round_trip_failures == 0 && correspondence_failures == 0 && split_ok;

  if (ctx.format == Format::Text) {
    ctx.body << "round trips: " << parts.size() - round_trip_failures << "/" << parts.size() << " ok\n"
             << "zero top row <=> summit dominates tail: " << parts.size() - correspondence_failures << "/"
             << parts.size() << " ok\n";
    if (split) {
      ctx.body << "zero top row: " << zero_top_row << " (g(" << n << ") = " << split->first << "), other: "
               << parts.size() - zero_top_row << " (gs(" << n << ") - g(" << n << ") = " << split->second << ")\n";
    }
    ctx.body << (ok ? "check passed" : "check FAILED") << '\n';
  } else if (ctx.format == Format::Json) {
    json summary{{"n", n},
                 {"partitions", parts.size()},
                 {"round_trip_failures", round_trip_failures},
                 {"correspondence_failures", correspondence_failures},
                 {"zero_top_row", zero_top_row},
                 {"passed", ok}};
    if (split) {
      summary["g"] = split->first;
      summary["gs_minus_g"] = split->second;
    }
    ctx.body << json{{"rows", t.to_json()}, {"check", summary}}.dump(2) << '\n';
  }
  return ok ? kOk : kVerificationFailed;
}

int cmd_asym(Context& ctx) {
  const Options& opt = ctx.opt;
  if (opt.target == "catalog") {
    Table t{{"variant", "C", "alpha", "beta", "lambda", "alpha_eps", "A"}, {}};
    for (Variant v : kAllVariants) {
      if (!asym::has_main_term(v)) continue;
      const asym::MainTerm mt = asym::main_term(v);
      std::vector<json> row{std::string(variant_name(v)), mt.C, mt.alpha, mt.beta, nullptr, nullptr, nullptr};
      if (asym::has_eps_asymptotic(v)) {
        const asym::EpsAsym e = asym::eps_asymptotic(v);
        row[4] = e.lambda;
        row[5] = e.alpha;
        row[6] = e.A;
      }
      t.add(std::move(row));
    }
    ctx.body << t.render(ctx.format);
    return kOk;
  }

  std::vector<Variant> variants;
  if (opt.target == "all") {
    for (Variant v : kAllVariants) {
      if (asym::has_main_term(v)) variants.push_back(v);
    }
  } else {
    variants.push_back(parse_variant(opt.target));
    asym::main_term(variants.front());  // UsageError for variants without a main term
  }
  if (opt.n_list.empty()) throw UsageError("--n needs at least one value");
  for (long long n : opt.n_list) {
    if (n < 1) throw UsageError("--n values must be >= 1");
  }
  const std::size_t max = checked_order(*std::max_element(opt.n_list.begin(), opt.n_list.end()), opt, "--n");

  Table t{{"variant", "n", "exact", "main_term", "ratio"}, {}};
  for (Variant v : variants) {
    const PowerSeries s = ctx.cache.get(v, max);
    const asym::MainTerm mt = asym::main_term(v);
    for (long long n : opt.n_list) {
      const auto k = static_cast<std::size_t>(n);
      const LogReal main = asym::main_term_value(mt, static_cast<double>(n));
      json r = nullptr;
      if (sgn(s[k]) > 0) r = asym::coeff_ratio(v, k, s);
      t.add({std::string(variant_name(v)), n, s[k].get_str(), main.scientific(), r});
    }
  }
  ctx.body << t.render(ctx.format);
  return kOk;
}

json log_real_json(const LogReal& x) {
  if (x.is_zero()) return "0";
  return x.scientific();
}

int cmd_eval(Context& ctx) {
  const Options& opt = ctx.opt;
  if (opt.eps_list.empty()) throw UsageError("--eps needs at least one value");

  if (opt.target == "saddle") {
    const asym::SaddleData sd = asym::saddle_data();
    Table t{{"eps", "contour_A", "A_from_H", "A_mainterm", "contour_over_from_H", "contour_over_mainterm",
             "quadrature_rel_change"},
            {}};
    for (double eps : opt.eps_list) {
      const asym::QuadratureReport q = asym::contour_A_report(eps);
      const double from_h = asym::A_from_H(eps);
      const LogReal main = asym::A_mainterm(eps);
      t.add({eps, q.value, from_h, main.scientific(), q.value / from_h, ratio(LogReal::from_double(q.value), main),
             q.relative_change});
    }
    const double phi = asym::kGoldenRatio;
    if (ctx.format == Format::Text) {
      ctx.body << "v = " << format_double(sd.v.real(), 10) << " + " << format_double(sd.v.imag(), 15)
               << "i  (log(phi)/(2 pi) = " << format_double(std::log(phi) / (2 * std::numbers::pi), 15) << ")\n"
               << "f(v) = " << format_double(sd.f_v, 15) << "  (pi^2/30 = "
               << format_double(std::numbers::pi * std::numbers::pi / 30, 15) << ")\n"
               << "f''(v) = " << format_double(sd.fpp_v, 15) << "  (-4 pi^2 sqrt(5) = "
               << format_double(-4 * std::numbers::pi * std::numbers::pi * std::sqrt(5.0), 15) << ")\n"
               << "|f'(v)| = " << format_double(sd.fp_abs, 3) << "\n\n"
               << t.render(ctx.format);
    } else if (ctx.format == Format::Json) {
      const json saddle{{"v_re", sd.v.real()}, {"v_im", sd.v.imag()},          {"f_v", sd.f_v},
                        {"fpp_v", sd.fpp_v},   {"fp_abs", sd.fp_abs},          {"contour_height", sd.contour_height},
                        {"newton_iterations", sd.newton_iterations}};
      ctx.body << json{{"saddle", saddle}, {"rows", t.to_json()}}.dump(2) << '\n';
    } else {
      ctx.body << t.render(ctx.format);
    }
    return kOk;
  }

  if (opt.target == "hsratio") {
    Table t{{"eps", "hs_over_h", "minus_phi"}, {}};
    for (double eps : opt.eps_list) {
      const double r = asym::hs_over_h(eps);
      t.add({eps, r, r - asym::kGoldenRatio});
    }
    ctx.body << t.render(ctx.format);
    return kOk;
  }

  const Variant v = parse_variant(opt.target);
  Table t{{"eps", "log_value", "value", "reference", "ratio"}, {}};
  for (double eps : opt.eps_list) {
    const LogReal value = asym::eval_genfun(v, eps);
    std::optional<LogReal> reference;
    if (asym::has_eps_asymptotic(v)) {
      reference = asym::eps_asymptotic_value(asym::eps_asymptotic(v), eps);
    } else if (v == Variant::L) {
      reference = LogReal::from_double(0.5);
    }
    json log_value = nullptr;
    if (!value.is_zero()) log_value = value.log_magnitude();
    json r = nullptr;
    if (reference && !value.is_zero()) r = ratio(value, *reference);
    t.add({eps, log_value, log_real_json(value), reference ? log_real_json(*reference) : json(nullptr), r});
  }
  ctx.body << t.render(ctx.format);
  return kOk;
}

void build_parser(CLI::App& app, Options& opt) {
  app.name("stacklab");
  app.description("Exact and asymptotic enumeration of unimodal sequences (stacks) and their generating functions");
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "stacklab 0.3.0");
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--out", opt.out_path, "Write results to PATH instead of stdout");
  app.add_option("--cache-dir", opt.cache_dir, "Coefficient cache directory (default $STACKLAB_CACHE)");
  app.add_flag("--no-cache", opt.no_cache, "Neither read nor write the coefficient cache");
  app.add_flag("--force-recompute", opt.force_recompute, "Ignore cached coefficients; rewrite the cache");
  app.add_flag("--unsafe-large", opt.unsafe_large, "Lift the enumeration and series-order safety bounds");

  auto* count = app.add_subcommand("count", "Coefficient n of a variant's generating function");
  count->add_option("variant", opt.variant, "s, ss, g, gs, h, hs, d, dm, fphi, f0, p or l")->required();
  count->add_option("n", opt.n, "Size")->required();
  count->add_flag("--oracle", opt.oracle, "Also count by brute-force enumeration");
  count->add_flag("--summits", opt.summits, "Count with a marked summit (s, g, h)");

  auto* table = app.add_subcommand("table", "Coefficients 0..N of several variants");
  table->add_option("--variants", opt.variants, "Comma-separated variant list")->delimiter(',');
  table->add_option("--max,-N,--order", opt.max, "Largest n")->required();

  auto* verify = app.add_subcommand("verify", "Check series identities coefficient by coefficient");
  verify->add_option("identity", opt.identity, "Identity tag or 'all'")->required();
  verify->add_option("-N,--order", opt.order, "Truncation order")->capture_default_str();

  auto* bijection = app.add_subcommand("bijection", "Partition -> Frobenius symbol -> receding stack with summit");
  bijection->add_option("n", opt.n, "Size (with --partition: upper bound on its size)")->required();
  auto* part = bijection->add_option("--partition", opt.partition, "A single partition, e.g. 4,4,3,3,1");
  auto* all = bijection->add_flag("--all", opt.all, "Every partition of n (the default)");
  part->excludes(all);
  bijection->add_flag("--check", opt.check, "Verify round trips and the zero-top-row correspondence");

  auto* asym_cmd = app.add_subcommand("asym", "Exact coefficients against their main terms");
  asym_cmd->add_option("target", opt.target, "Variant, 'all' or 'catalog'")->required();
  asym_cmd->add_option("--n", opt.n_list, "Comma-separated sizes")->delimiter(',')->capture_default_str();

  auto* eval = app.add_subcommand("eval", "Numeric evaluation at q = exp(-eps)");
  eval->add_option("target", opt.target, "Variant, 'saddle' or 'hsratio'")->required();
  eval->add_option("--eps", opt.eps_list, "Comma-separated eps values")->delimiter(',')->required();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app;
  build_parser(app, opt);
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::optional<std::filesystem::path> cache_dir;
  if (!opt.no_cache) cache_dir = opt.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(opt.cache_dir);
  SeriesCache cache(cache_dir, opt.force_recompute, err);
  Context ctx{opt, parse_format(opt.format), cache, {}};

  int code = kOk;
  try {
    const std::string command = app.get_subcommands().front()->get_name();
    if (command == "count") code = cmd_count(ctx);
    else if (command == "table") code = cmd_table(ctx);
    else if (command == "verify") code = cmd_verify(ctx);
    else if (command == "bijection") code = cmd_bijection(ctx);
    else if (command == "asym") code = cmd_asym(ctx);
    else code = cmd_eval(ctx);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kSafetyBound;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }

  if (opt.out_path.empty()) {
    out << ctx.body.str();
    return code;
  }
  std::ofstream file(opt.out_path, std::ios::binary | std::ios::trunc);
  file << ctx.body.str();
  file.flush();
  if (!file) {
    err << "error: cannot write " << opt.out_path << '\n';
    return kIo;
  }
  return code;
}

}  // namespace stacklab::cli
