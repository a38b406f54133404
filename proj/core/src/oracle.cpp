#include "hkcut/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "hkcut/combinatorics.hpp"

namespace hkcut {

namespace {

void check_guard(const Hypergraph& g, int k) {
  const int n = g.num_vertices();
  if (n > kBruteForceVertexLimit) {
    throw std::invalid_argument("brute-force oracle limited to " +
                                std::to_string(kBruteForceVertexLimit) + " vertices, got " +
                                std::to_string(n));
  }
  if (k < 1 || k > n) {
    throw std::invalid_argument("k must be within [1, n]");
  }
}

// Restricted growth strings with exactly k blocks: labels[0] = 0 and each
// label is at most one past the largest label before it. Branches that can no
// longer reach k blocks are cut off, everything else is the plain RGS order.
template <class Fn>
void for_each_rgs_exact(int n, int k, Fn&& fn) {
  std::vector<int> labels(n, 0);
  auto recurse = [&](auto&& self, int pos, int used) -> void {
    if (pos == n) {
      if (used == k) fn(labels);
      return;
    }
    if (k - used > n - pos) return;  // not enough positions left to open k blocks
    const int top = std::min(used, k - 1);
    for (int label = 0; label <= top; ++label) {
      labels[pos] = label;
      self(self, pos + 1, label == used ? used + 1 : used);
    }
  };
  recurse(recurse, 1, 1);
}

Partition partition_from_labels(const std::vector<int>& labels, int k) {
  std::vector<std::vector<int>> blocks(k);
  for (int v = 0; v < static_cast<int>(labels.size()); ++v) blocks[labels[v]].push_back(v);
  std::vector<VertexSet> parts;
  parts.reserve(k);
  for (auto& b : blocks) parts.push_back(VertexSet(std::move(b)));
  return Partition(std::move(parts));  // blocks indexed by first member: already canonical
}

}  // namespace

void for_each_kpartition(int n, int k, const std::function<void(const Partition&)>& fn) {
  if (n > kBruteForceVertexLimit) {
    throw std::invalid_argument("partition enumeration limited to " +
                                std::to_string(kBruteForceVertexLimit) + " vertices");
  }
  if (k < 1 || k > n) throw std::invalid_argument("k must be within [1, n]");
  for_each_rgs_exact(n, k, [&](const std::vector<int>& labels) {
    fn(partition_from_labels(labels, k));
  });
}

BruteForceResult min_kcut_bruteforce(const Hypergraph& g, int k) {
  check_guard(g, k);
  BruteForceResult result;
  bool first = true;
  for_each_rgs_exact(g.num_vertices(), k, [&](const std::vector<int>& labels) {
    ++result.partitions_enumerated;
    Partition p = partition_from_labels(labels, k);
    const Cost c = g.partition_cost(p);
    if (first || c < result.value) {
      result.value = c;
      result.optima.clear();
      first = false;
    }
    if (c == result.value) result.optima.push_back(std::move(p));
  });
  std::sort(result.optima.begin(), result.optima.end());
  return result;
}

std::vector<DistinguishedPart> maximal_min_kpartitions(const Hypergraph& g, int k) {
  const BruteForceResult opt = min_kcut_bruteforce(g, k);

  std::set<VertexSet> all_parts;
  for (const Partition& p : opt.optima) {
    for (const VertexSet& part : p.parts()) all_parts.insert(part);
  }
  auto is_maximal = [&](const VertexSet& part) {
    for (const VertexSet& other : all_parts) {
      if (part.size() < other.size() && part.subset_of(other)) return false;
    }
    return true;
  };

  std::vector<DistinguishedPart> out;
  for (const Partition& p : opt.optima) {
    for (int i = 0; i < p.k(); ++i) {
      if (!is_maximal(p.part(i))) continue;
      std::vector<VertexSet> rest;
      rest.reserve(p.k() - 1);
      for (int j = 0; j < p.k(); ++j) {
        if (j != i) rest.push_back(p.part(j));
      }
      out.push_back(DistinguishedPart{p.part(i), Partition(std::move(rest)).canonical()});
    }
  }
  std::sort(out.begin(), out.end(), [](const DistinguishedPart& a, const DistinguishedPart& b) {
    return std::tie(a.part, a.rest) < std::tie(b.part, b.rest);
  });
  return out;
}

std::vector<VertexSet> minimal_balanced_splits(const Hypergraph& g, int k) {
  if (k < 2) throw std::invalid_argument("balanced splits need k >= 2");
  const BruteForceResult opt = min_kcut_bruteforce(g, k);
  const int half = k / 2;

  std::set<VertexSet> splits;
  std::vector<int> all(k);
  for (int i = 0; i < k; ++i) all[i] = i;
  for (const Partition& p : opt.optima) {
    for_each_combination(all, half, [&](const VertexSet& chosen) {
      VertexSet side;
      for (int i : chosen) side = side | p.part(i);
      splits.insert(std::move(side));
    });
  }

  std::vector<VertexSet> out;
  for (const VertexSet& u : splits) {
    bool minimal = true;
    for (const VertexSet& other : splits) {
      if (other.size() < u.size() && other.subset_of(u)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(u);
  }
  return out;  // set iteration order is already sorted
}

}  // namespace hkcut
