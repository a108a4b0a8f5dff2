#include "stacklab/combinat.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

#include "stacklab/errors.hpp"

namespace stacklab::combinat {

namespace {

void check_bound(int n, const EnumerationLimits& limits) {
  if (n > limits.max_size && !limits.override_bound) {
    throw ResourceError("enumeration of size " + std::to_string(n) + " exceeds the safety bound " +
                        std::to_string(limits.max_size) + " (override required)");
  }
}

bool contains_all_below(const std::vector<int>& xs, int c) {
  std::vector<bool> seen(static_cast<std::size_t>(std::max(c, 1)), false);
  for (int x : xs) {
    if (x >= 1 && x < c) seen[static_cast<std::size_t>(x)] = true;
  }
  for (int v = 1; v < c; ++v) {
    if (!seen[static_cast<std::size_t>(v)]) return false;
  }
  return true;
}

// a_j >= a_{j+1} - 1 in reading order
bool steps_up_by_at_most_one(const std::vector<int>& a) {
  for (std::size_t j = 0; j + 1 < a.size(); ++j) {
    if (a[j + 1] - a[j] > 1) return false;
  }
  return true;
}

// b_j <= b_{j+1} + 1 with b stored b_s..b_1
bool steps_down_by_at_most_one(const std::vector<int>& b) {
  for (std::size_t j = 0; j + 1 < b.size(); ++j) {
    if (b[j] - b[j + 1] > 1) return false;
  }
  return true;
}

bool strictly_increasing(const std::vector<int>& xs) {
  return std::adjacent_find(xs.begin(), xs.end(), std::greater_equal<>()) == xs.end();
}

bool strictly_decreasing(const std::vector<int>& xs) {
  return std::adjacent_find(xs.begin(), xs.end(), std::less_equal<>()) == xs.end();
}

bool is_strict_variant(StackVariant v) { return v == StackVariant::Strict || v == StackVariant::SemiStrict; }

// Visits candidate sequences of size n in (c, a, b) lexicographic order. The flank rules
// are the variant's monotonicity and summit constraints; containment conditions of the
// receding and shifted variants are checked afterwards by is_valid.
void visit_candidates(StackVariant variant, int n, const std::function<void(const UnimodalSequence&)>& visit) {
  const bool strict_a = is_strict_variant(variant);
  const bool strict_b = variant == StackVariant::Strict;
  const bool unit_steps_a = variant == StackVariant::Receding || variant == StackVariant::Shifted;

  UnimodalSequence seq;
  std::function<void(int)> grow_b;
  std::function<void(int)> grow_a;

  // b is filled left to right (b_s first); parts < c, weakly or strictly decreasing.
  grow_b = [&](int remaining) {
    if (remaining == 0) {
      if (is_valid(variant, seq)) visit(seq);
      return;
    }
    int cap = seq.b.empty() ? seq.c - 1 : (strict_b ? seq.b.back() - 1 : seq.b.back());
    cap = std::min(cap, remaining);
    for (int part = 1; part <= cap; ++part) {
      seq.b.push_back(part);
      grow_b(remaining - part);
      seq.b.pop_back();
    }
  };

  // Pre-order DFS over a gives lexicographic order of a.
  grow_a = [&](int remaining) {
    grow_b(remaining);
    int lo = seq.a.empty() ? 1 : (strict_a ? seq.a.back() + 1 : seq.a.back());
    int hi = strict_a ? seq.c - 1 : seq.c;
    if (unit_steps_a) hi = std::min(hi, seq.a.empty() ? 1 : seq.a.back() + 1);
    hi = std::min(hi, remaining);
    for (int part = lo; part <= hi; ++part) {
      seq.a.push_back(part);
      grow_a(remaining - part);
      seq.a.pop_back();
    }
  };

  for (int c = 1; c <= n; ++c) {
    seq.c = c;
    grow_a(n - c);
  }
}

void require_positive_size(int n) {
  if (n < 1) throw UsageError("enumeration needs size n >= 1, got " + std::to_string(n));
}

}  // namespace

int UnimodalSequence::size() const {
  return std::accumulate(a.begin(), a.end(), 0) + c + std::accumulate(b.begin(), b.end(), 0);
}

std::vector<int> UnimodalSequence::parts() const {
  std::vector<int> out = a;
  out.push_back(c);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

int UnimodalSequence::summit_multiplicity() const {
  const auto count_c = [this](const std::vector<int>& xs) {
    return static_cast<int>(std::count(xs.begin(), xs.end(), c));
  };
  return count_c(a) + 1 + count_c(b);
}

UnimodalSequence to_unimodal(const std::vector<int>& parts) {
  if (parts.empty()) throw DomainError("to_unimodal: empty sequence");
  if (std::any_of(parts.begin(), parts.end(), [](int x) { return x < 1; })) {
    throw DomainError("to_unimodal: parts must be positive");
  }
  const int top = *std::max_element(parts.begin(), parts.end());
  const auto last = std::find(parts.rbegin(), parts.rend(), top).base() - 1;
  UnimodalSequence seq{{parts.begin(), last}, top, {last + 1, parts.end()}};
  if (!std::is_sorted(seq.a.begin(), seq.a.end()) || !std::is_sorted(seq.b.rbegin(), seq.b.rend())) {
    throw DomainError("to_unimodal: sequence is not unimodal");
  }
  return seq;
}

std::string_view stack_variant_name(StackVariant v) {
  switch (v) {
    case StackVariant::Stack: return "stack";
    case StackVariant::Receding: return "receding";
    case StackVariant::Shifted: return "shifted";
    case StackVariant::Strict: return "strict";
    case StackVariant::SemiStrict: return "semistrict";
  }
  return "?";
}

bool is_valid(StackVariant variant, const UnimodalSequence& seq) {
  const auto& [a, c, b] = seq;
  if (c < 1) return false;
  const auto positive = [](int x) { return x >= 1; };
  if (!std::all_of(a.begin(), a.end(), positive) || !std::all_of(b.begin(), b.end(), positive)) return false;
  if (!std::is_sorted(a.begin(), a.end()) || !std::is_sorted(b.rbegin(), b.rend())) return false;
  if (!a.empty() && a.back() > c) return false;
  if (!b.empty() && b.front() >= c) return false;  // c > b_s in every variant

  switch (variant) {
    case StackVariant::Stack:
      return true;
    case StackVariant::Receding:
      return steps_up_by_at_most_one(a) && steps_down_by_at_most_one(b) && contains_all_below(a, c) &&
             contains_all_below(b, c);
    case StackVariant::Shifted:
      return steps_up_by_at_most_one(a) && contains_all_below(a, c);
    case StackVariant::Strict:
      return strictly_increasing(a) && strictly_decreasing(b) && (a.empty() || a.back() < c);
    case StackVariant::SemiStrict:
      return strictly_increasing(a) && (a.empty() || a.back() < c);
  }
  return false;
}

std::vector<UnimodalSequence> enumerate(StackVariant variant, int n, EnumerationLimits limits) {
  require_positive_size(n);
  check_bound(n, limits);
  std::vector<UnimodalSequence> out;
  visit_candidates(variant, n, [&](const UnimodalSequence& s) { out.push_back(s); });
  return out;
}

long long count(StackVariant variant, int n, EnumerationLimits limits) {
  require_positive_size(n);
  check_bound(n, limits);
  long long total = 0;
  visit_candidates(variant, n, [&](const UnimodalSequence&) { ++total; });
  return total;
}

long long count_with_summits(StackVariant variant, int n, EnumerationLimits limits) {
  if (is_strict_variant(variant)) {
    throw UsageError("count_with_summits: " + std::string(stack_variant_name(variant)) +
                     " stacks have a unique summit");
  }
  require_positive_size(n);
  check_bound(n, limits);
  long long total = 0;
  visit_candidates(variant, n, [&](const UnimodalSequence& s) { total += s.summit_multiplicity(); });
  return total;
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::vector<Partition> partitions(int n, EnumerationLimits limits) {
  if (n < 0) throw UsageError("partitions: negative size");
  check_bound(n, limits);
  std::vector<Partition> out;
  Partition current;
  std::function<void(int, int)> grow = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(cap, remaining); part >= 1; --part) {
      current.parts.push_back(part);
      grow(remaining - part, part);
      current.parts.pop_back();
    }
  };
  grow(n, n);
  return out;
}

int FrobeniusSymbol::size() const {
  return rank() + std::accumulate(alpha.begin(), alpha.end(), 0) + std::accumulate(beta.begin(), beta.end(), 0);
}

namespace {

void require_partition(const Partition& p) {
  if (std::any_of(p.parts.begin(), p.parts.end(), [](int x) { return x < 1; }) ||
      !std::is_sorted(p.parts.rbegin(), p.parts.rend())) {
    throw DomainError("not a partition: parts must be positive and weakly decreasing");
  }
}

std::vector<int> conjugate(const std::vector<int>& parts) {
  std::vector<int> out(parts.empty() ? 0 : static_cast<std::size_t>(parts.front()), 0);
  for (int row : parts) {
    for (int j = 0; j < row; ++j) ++out[static_cast<std::size_t>(j)];
  }
  return out;
}

}  // namespace

FrobeniusSymbol partition_to_frobenius(const Partition& p) {
  require_partition(p);
  if (p.parts.empty()) throw DomainError("partition_to_frobenius: empty partition");
  const std::vector<int> conj = conjugate(p.parts);
  FrobeniusSymbol f;
  for (std::size_t j = 0; j < p.parts.size() && p.parts[j] >= static_cast<int>(j) + 1; ++j) {
    const int diag = static_cast<int>(j) + 1;
    f.alpha.push_back(p.parts[j] - diag);
    f.beta.push_back(conj[j] - diag);
  }
  return f;
}

FrobeniusSymbol validated(const FrobeniusSymbol& f) {
  if (f.alpha.size() != f.beta.size()) throw DomainError("Frobenius symbol rows differ in length");
  const auto row_ok = [](const std::vector<int>& row) {
    return std::all_of(row.begin(), row.end(), [](int x) { return x >= 0; }) && strictly_decreasing(row);
  };
  if (!row_ok(f.alpha) || !row_ok(f.beta)) {
    throw DomainError("Frobenius symbol rows must be strictly decreasing and nonnegative");
  }
  return f;
}

Partition frobenius_to_partition(const FrobeniusSymbol& f) {
  validated(f);
  const int k = f.rank();
  if (k == 0) return {};
  // Row i (1-based) of the diagram: alpha_i + i for i <= k; below the Durfee square,
  // row i has one cell for every column j <= k whose leg reaches it.
  const int rows = f.beta.front() + 1;
  Partition p;
  for (int i = 1; i <= rows; ++i) {
    if (i <= k) {
      p.parts.push_back(f.alpha[static_cast<std::size_t>(i - 1)] + i);
    } else {
      int cells = 0;
      for (int j = 1; j <= k; ++j) {
        if (f.beta[static_cast<std::size_t>(j - 1)] + j >= i) ++cells;
      }
      p.parts.push_back(cells);
    }
  }
  return p;
}

MarkedStack partition_to_receding_summit(const Partition& p) {
  require_partition(p);
  if (p.parts.empty()) throw DomainError("partition_to_receding_summit: empty partition");
  const int rows = static_cast<int>(p.parts.size());
  const int cols = p.parts.front();
  // diagonal d = column - row ranges over [1 - rows, cols - 1]
  std::vector<int> diagonal(static_cast<std::size_t>(rows + cols - 1), 0);
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= p.parts[static_cast<std::size_t>(i - 1)]; ++j) {
      ++diagonal[static_cast<std::size_t>(j - i + rows - 1)];
    }
  }
  return {to_unimodal(diagonal), static_cast<std::size_t>(rows - 1)};
}

Partition receding_summit_to_partition(const MarkedStack& s) {
  if (!is_valid(StackVariant::Receding, s.sequence)) {
    throw DomainError("receding_summit_to_partition: not a receding stack");
  }
  const std::vector<int> seq = s.sequence.parts();
  if (s.marked >= seq.size() || seq[s.marked] != s.sequence.c) {
    throw DomainError("receding_summit_to_partition: mark is not on a largest part");
  }
  const int rows = static_cast<int>(s.marked) + 1;
  std::vector<int> row_len(static_cast<std::size_t>(rows), 0);
  for (std::size_t t = 0; t < seq.size(); ++t) {
    const int d = static_cast<int>(t) - static_cast<int>(s.marked);
    const int first_row = std::max(1, 1 - d);
    for (int i = first_row; i < first_row + seq[t]; ++i) {
      if (i > rows) throw DomainError("receding_summit_to_partition: diagonal leaves the diagram");
      ++row_len[static_cast<std::size_t>(i - 1)];
    }
  }
  Partition p{row_len};
  if (std::any_of(row_len.begin(), row_len.end(), [](int x) { return x < 1; }) ||
      !std::is_sorted(row_len.rbegin(), row_len.rend()) || partition_to_receding_summit(p) != s) {
    throw DomainError("receding_summit_to_partition: diagonals do not form a Ferrers diagram");
  }
  return p;
}

bool has_zero_top_row(const FrobeniusSymbol& f) {
  return std::find(f.alpha.begin(), f.alpha.end(), 0) != f.alpha.end();
}

bool kth_part_is_k(const Partition& p) {
  for (std::size_t k = 1; k <= p.parts.size(); ++k) {
    if (p.parts[k - 1] == static_cast<int>(k)) return true;
  }
  return false;
}

bool summit_dominates_tail(const MarkedStack& s) {
  const std::vector<int> seq = s.sequence.parts();
  return std::none_of(seq.begin() + static_cast<std::ptrdiff_t>(s.marked) + 1, seq.end(),
                      [&](int x) { return x >= s.sequence.c; });
}

namespace {

std::string join_parts(const std::vector<int>& parts, std::size_t marked) {
  const bool wide = std::any_of(parts.begin(), parts.end(), [](int x) { return x >= 10; });
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (wide && i > 0) out += ',';
    const std::string digits = std::to_string(parts[i]);
    out += i == marked ? "(" + digits + ")" : digits;
  }
  return out;
}

}  // namespace

std::string format_sequence(const UnimodalSequence& s) { return join_parts(s.parts(), s.a.size()); }

std::string format_marked(const MarkedStack& s) { return join_parts(s.sequence.parts(), s.marked); }

std::string format_frobenius(const FrobeniusSymbol& f) {
  std::ostringstream os;
  for (std::size_t i = 0; i < f.alpha.size(); ++i) os << (i ? " " : "") << f.alpha[i];
  os << " / ";
  for (std::size_t i = 0; i < f.beta.size(); ++i) os << (i ? " " : "") << f.beta[i];
  return os.str();
}

std::string format_partition(const Partition& p) {
  if (p.parts.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (i) out += '+';
    out += std::to_string(p.parts[i]);
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  Partition p;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = text.find_first_of(",+", pos);
    const std::string_view token = text.substr(pos, end == std::string_view::npos ? text.size() - pos : end - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value < 1) {
      throw UsageError("cannot parse partition '" + std::string(text) + "'");
    }
    p.parts.push_back(value);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  std::sort(p.parts.rbegin(), p.parts.rend());
  return p;
}

}  // namespace stacklab::combinat
