#include "mtz/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mtz {

int OrderedPartition::weight(int j) const {
  auto p = part(j);
  return std::accumulate(p.begin(), p.end(), 0);
}

namespace {

void compositions(int pos, int t, PartitionKind kind, std::vector<int>& cuts,
                  std::vector<std::vector<int>>& out) {
  int rest = t - pos;
  // Close the current part at t.
  if (rest >= 2 || (rest == 1 && kind == PartitionKind::PreFat)) out.push_back(cuts);
  for (int next = pos + 2; next < t; ++next) {
    cuts.push_back(next);
    compositions(next, t, kind, cuts, out);
    cuts.pop_back();
  }
}

}  // namespace

std::vector<OrderedPartition> enumerate_partitions(std::span<const int> s, PartitionKind kind) {
  if (s.empty()) throw std::invalid_argument("enumerate_partitions: empty vector");
  int t = static_cast<int>(s.size());
  std::vector<std::vector<int>> all;
  std::vector<int> cuts;
  compositions(0, t, kind, cuts, all);
  std::sort(all.begin(), all.end());
  std::vector<OrderedPartition> res;
  res.reserve(all.size());
  std::vector<int> src(s.begin(), s.end());
  for (auto& c : all) res.push_back({src, std::move(c)});
  return res;
}

bool is_valid(const OrderedPartition& p, PartitionKind kind) {
  int q = p.num_parts();
  int prev = 0;
  for (int c : p.cuts) {
    if (c <= prev || c >= static_cast<int>(p.source.size())) return false;
    prev = c;
  }
  for (int j = 0; j < q; ++j) {
    int l = p.length(j);
    if (l < 1) return false;
    if (l < 2 && (j + 1 < q || kind == PartitionKind::Fat)) return false;
  }
  return true;
}

int index_length(const OrderedPartition& p, int j, PartitionKind kind) {
  int l = p.length(j);
  if (j + 1 == p.num_parts() && kind == PartitionKind::PreFat) return l - 1;
  return l - 2;
}

int index_bound(std::span<const int> part, std::span<const int> prefix) {
  std::size_t i = prefix.size();
  int sigma = 0;
  for (std::size_t a = 0; a <= i; ++a) sigma += part[a];
  int rsum = 0;
  for (int r : prefix) rsum += r;
  return std::max(sigma - 2 * rsum, part[i + 1]) / 2;
}

namespace {

void fill_part(const std::vector<std::span<const int>>& parts, const std::vector<int>& lens,
               std::size_t j, IndexAssignment& cur, std::vector<IndexAssignment>& out) {
  if (j == parts.size()) {
    out.push_back(cur);
    return;
  }
  if (static_cast<int>(cur[j].size()) == lens[j]) {
    fill_part(parts, lens, j + 1, cur, out);
    return;
  }
  int hi = index_bound(parts[j], cur[j]);
  for (int r = 0; r <= hi; ++r) {
    cur[j].push_back(r);
    fill_part(parts, lens, j, cur, out);
    cur[j].pop_back();
  }
}

}  // namespace

std::vector<IndexAssignment> index_assignments(const OrderedPartition& p, PartitionKind kind) {
  if (!is_valid(p, kind)) throw std::invalid_argument("index_assignments: invalid partition");
  int q = p.num_parts();
  std::vector<std::span<const int>> parts;
  std::vector<int> lens;
  for (int j = 0; j < q; ++j) {
    parts.push_back(p.part(j));
    lens.push_back(std::max(0, index_length(p, j, kind)));
  }
  std::vector<IndexAssignment> out;
  IndexAssignment cur(q);
  fill_part(parts, lens, 0, cur, out);
  auto flat_rev = [](const IndexAssignment& r) {
    std::vector<int> f;
    for (auto& v : r) f.insert(f.end(), v.begin(), v.end());
    std::reverse(f.begin(), f.end());
    return f;
  };
  std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return flat_rev(a) < flat_rev(b);
  });
  return out;
}

std::vector<int> inflate(std::span<const int> j, std::span<const int> i, int t) {
  if (j.size() != i.size() || static_cast<int>(i.size()) > t)
    throw std::invalid_argument("inflate: length mismatch");
  std::vector<int> out(t, 1);
  for (std::size_t a = 0; a < i.size(); ++a) {
    if (i[a] < 0 || i[a] >= t) throw std::invalid_argument("inflate: position out of range");
    out[i[a]] = j[a];
  }
  return out;
}

}  // namespace mtz
