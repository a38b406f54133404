#pragma once

#include <cstdint>
#include <string>

#include "hkcut/hypergraph.hpp"

namespace hkcut {

struct SolveStats {
  std::uint64_t terminal_cut_calls = 0;
  std::uint64_t recursion_nodes = 0;
  std::uint64_t candidates_considered = 0;
  double wall_ms = 0.0;
};

struct Solution {
  Partition partition;  // canonical, exactly k parts
  Cost value = 0;       // equals partition_cost(partition)
  SolveStats stats;
};

/// Minimum k-partition by recursion on one recovered part. Candidate source
/// sides are every subset of size at most 2k-3 plus the source-maximal
/// minimum (S,T)-terminal cut for every disjoint pair with |S| = 2k-2 and
/// |T| = k-1; each candidate's complement is solved for k-1 parts and the
/// cheapest concatenation wins, ties broken by canonical order. Candidates
/// whose complement has fewer than k-1 vertices are skipped.
Solution cut_recursive(const Hypergraph& g, int k);

/// Minimum k-partition by splitting into floor(k/2) and ceil(k/2) parts.
/// Candidates are the source-minimal minimum (S,T)-terminal cuts over all
/// disjoint non-empty S, T with both sizes at most 2k-2; a candidate
/// (U, complement) recurses on both sides when each side can still host its
/// share of parts. Each unordered terminal pair costs one max-flow: swapping
/// S and T turns the source-maximal cut into the swapped pair's
/// source-minimal one by complementation. Same optimal value as
/// cut_recursive, possibly a different optimal partition.
Solution cut_divide_conquer(const Hypergraph& g, int k);

enum class Algorithm { kRecursive, kDivideConquer, kBruteForce };

/// Parses "recursive" | "divide-conquer" | "dc" | "brute-force" | "brute".
Algorithm parse_algorithm(const std::string& name);
std::string algorithm_name(Algorithm algo);

/// Dispatching front end. When the hypergraph already has at least k
/// connected components it returns a zero-cost k-partition directly: the
/// smallest-id components stay separate and the remainder merges into the
/// last part.
Solution solve(const Hypergraph& g, int k, Algorithm algo);

}  // namespace hkcut
