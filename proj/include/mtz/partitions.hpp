#pragma once

// Ordered partitions of an exponent vector into consecutive parts, the
// dependent index sets attached to them, and the inflation operator.

#include <span>
#include <vector>

namespace mtz {

enum class PartitionKind { PreFat, Fat };

/// Consecutive split of `source`. `cuts` holds the strictly increasing interior
/// boundaries, so part j covers [cuts[j-1], cuts[j]) with cuts[-1] = 0 and
/// cuts[q-1] = source.size().
struct OrderedPartition {
  std::vector<int> source;
  std::vector<int> cuts;

  int num_parts() const { return static_cast<int>(cuts.size()) + 1; }
  int begin_of(int j) const { return j == 0 ? 0 : cuts[j - 1]; }
  int end_of(int j) const {
    return j + 1 == num_parts() ? static_cast<int>(source.size()) : cuts[j];
  }
  int length(int j) const { return end_of(j) - begin_of(j); }
  std::span<const int> part(int j) const {
    return std::span<const int>(source).subspan(begin_of(j), length(j));
  }
  int weight(int j) const;
};

/// Jagged index r = (r_1, ..., r_q); empty inner vectors are kept.
using IndexAssignment = std::vector<std::vector<int>>;

/// All pre-fat or fat partitions of s, sorted lexicographically by `cuts`.
std::vector<OrderedPartition> enumerate_partitions(std::span<const int> s, PartitionKind kind);

bool is_valid(const OrderedPartition& p, PartitionKind kind);

/// Number of entries of r_j for part j under the given kind.
int index_length(const OrderedPartition& p, int j, PartitionKind kind);

/// Upper bound of r_{j,i} (i is 0-based) given the already fixed r_{j,0..i-1}.
int index_bound(std::span<const int> part, std::span<const int> prefix);

/// Every admissible r, in colex order (the leftmost entry varies fastest).
std::vector<IndexAssignment> index_assignments(const OrderedPartition& p, PartitionKind kind);

/// Inf^t_i(j): entry j_a at position i_a (0-based), 1 elsewhere.
std::vector<int> inflate(std::span<const int> j, std::span<const int> i, int t);

}  // namespace mtz
