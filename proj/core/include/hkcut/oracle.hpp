#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hkcut/hypergraph.hpp"

namespace hkcut {

/// Exhaustive enumeration is kept independent of the solver code paths so it
/// can serve as ground truth. Guarded to small vertex counts (Bell-number
/// growth beyond this is pointless at desk scale).
inline constexpr int kBruteForceVertexLimit = 14;

struct BruteForceResult {
  Cost value = 0;
  std::vector<Partition> optima;  // every optimal k-partition, canonical, sorted
  std::uint64_t partitions_enumerated = 0;
};

/// Exact minimum k-partition value and all optima, by enumerating set
/// partitions with exactly k blocks through restricted growth strings.
BruteForceResult min_kcut_bruteforce(const Hypergraph& g, int k);

/// Every set partition of {0..n-1} into exactly k blocks, canonical, in
/// restricted-growth-string order. Same vertex-count guard as the oracle.
void for_each_kpartition(int n, int k, const std::function<void(const Partition&)>& fn);

/// A part of a minimum k-partition that no minimum k-partition strictly
/// extends, together with the remaining parts of one optimum it came from.
struct DistinguishedPart {
  VertexSet part;
  Partition rest;
};

/// All (maximal part, remainder) pairs over the minimum k-partitions, sorted.
std::vector<DistinguishedPart> maximal_min_kpartitions(const Hypergraph& g, int k);

/// Inclusion-minimal unions of floor(k/2) parts of minimum k-partitions,
/// sorted.
std::vector<VertexSet> minimal_balanced_splits(const Hypergraph& g, int k);

}  // namespace hkcut
