#pragma once

// Brute-force enumeration of unimodal sequences, partitions and Frobenius symbols,
// and the two bijections linking partitions to Frobenius symbols and to receding
// stacks with a marked summit.

#include <cstddef>
#include <string>
#include <vector>

namespace stacklab::combinat {

// Default refusal bound for enumeration; object counts grow like exp(2 pi sqrt(n/3)).
inline constexpr int kSafetyBound = 40;

struct EnumerationLimits {
  int max_size = kSafetyBound;
  bool override_bound = false;
};

// a_1..a_r, c, b_s..b_1 in reading order. Canonical form: c is the last occurrence of
// the maximum, so every entry of b is < c.
struct UnimodalSequence {
  std::vector<int> a;  // weakly increasing
  int c = 0;           // summit value
  std::vector<int> b;  // weakly decreasing, stored left to right after the summit

  int size() const;
  // Full sequence a, c, b.
  std::vector<int> parts() const;
  // Number of occurrences of the maximum part.
  int summit_multiplicity() const;

  friend bool operator==(const UnimodalSequence&, const UnimodalSequence&) = default;
};

// Splits a composition at the last occurrence of its maximum. DomainError if the
// parts are not unimodal or not all positive.
UnimodalSequence to_unimodal(const std::vector<int>& parts);

enum class StackVariant { Stack, Receding, Shifted, Strict, SemiStrict };

std::string_view stack_variant_name(StackVariant v);

// Whether a canonical sequence belongs to the variant.
bool is_valid(StackVariant variant, const UnimodalSequence& seq);

// All sequences of size n of the variant, ordered lexicographically by (c, a, b).
// n >= 1. ResourceError when n exceeds the limit without override.
std::vector<UnimodalSequence> enumerate(StackVariant variant, int n, EnumerationLimits limits = {});

long long count(StackVariant variant, int n, EnumerationLimits limits = {});

// Sum over the variant's sequences of the multiplicity of the maximum part.
// Only Stack, Receding and Shifted have a summit-marked count (UsageError otherwise).
long long count_with_summits(StackVariant variant, int n, EnumerationLimits limits = {});

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  int size() const;
  friend bool operator==(const Partition&, const Partition&) = default;
};

// All partitions of n in reverse lexicographic order (n, n-1+1, ..., 1+...+1).
// partitions(0) is the single empty partition.
std::vector<Partition> partitions(int n, EnumerationLimits limits = {});

struct FrobeniusSymbol {
  std::vector<int> alpha;  // top row, strictly decreasing, >= 0
  std::vector<int> beta;   // bottom row, strictly decreasing, >= 0

  int rank() const { return static_cast<int>(alpha.size()); }
  int size() const;
  friend bool operator==(const FrobeniusSymbol&, const FrobeniusSymbol&) = default;
};

// Durfee-diagonal construction. DomainError for the empty or an unsorted partition.
FrobeniusSymbol partition_to_frobenius(const Partition& p);
// Inverse construction. DomainError for rows of unequal length or not strictly decreasing.
FrobeniusSymbol validated(const FrobeniusSymbol& f);
Partition frobenius_to_partition(const FrobeniusSymbol& f);

// Receding stack with one occurrence of its maximum marked. marked is the 0-based
// position in the full sequence a, c, b.
struct MarkedStack {
  UnimodalSequence sequence;
  std::size_t marked = 0;

  friend bool operator==(const MarkedStack&, const MarkedStack&) = default;
};

// Reads the Ferrers diagram along diagonals, from the bottom-left cell to the top-right
// one. The main diagonal becomes the marked summit.
MarkedStack partition_to_receding_summit(const Partition& p);
// Inverse map. DomainError unless the sequence is a receding stack marked on a maximum.
Partition receding_summit_to_partition(const MarkedStack& s);

bool has_zero_top_row(const FrobeniusSymbol& f);
// True when the k-th largest part equals k for some k >= 1.
bool kth_part_is_k(const Partition& p);
// True when no part after the marked position equals the maximum.
bool summit_dominates_tail(const MarkedStack& s);

// "1123(3)221": parentheses around the marked (or canonical) summit.
std::string format_sequence(const UnimodalSequence& s);
std::string format_marked(const MarkedStack& s);
// "3 2 0 / 4 2 1"
std::string format_frobenius(const FrobeniusSymbol& f);
// "4+4+3+3+1"; "0" for the empty partition.
std::string format_partition(const Partition& p);
// Parses "4,4,3,3,1" or "4+4+3+3+1"; parts are sorted into weakly decreasing order.
// UsageError on malformed input.
Partition parse_partition(std::string_view text);

}  // namespace stacklab::combinat
