#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hkcut/hypergraph.hpp"

namespace hkcut {

/// A partition of the vertex set into p "core" parts plus a shared part and a
/// rest part, the shape produced by uncrossing a family of cut sides.
struct AccountedPartition {
  std::vector<VertexSet> cores;
  VertexSet shared;
  VertexSet rest;

  int core_count() const { return static_cast<int>(cores.size()); }
  Partition as_partition() const;
};

/// How often each term of the doubled crossing-cost bound counts one edge.
struct EdgeAccounting {
  bool crosses = false;          // meets at least two parts of the tuple
  bool in_shared_rest = false;   // lies inside shared ∪ rest and meets both
  bool in_rest_spread = false;   // meets rest and at least two other parts
  bool in_core_spread = false;   // misses rest and meets at least two cores
  int times() const {
    return (crosses ? 1 : 0) + (in_shared_rest ? 1 : 0) + (in_rest_spread ? 1 : 0) +
           (in_core_spread ? 1 : 0);
  }
};

EdgeAccounting classify_edge(const Hyperedge& e, const AccountedPartition& ap);

/// The four crossing-cost terms and their sum. The sum counts every crossing
/// hyperedge twice except those meeting exactly one core and exactly one of
/// {shared, rest}, which it counts once.
struct PartitionAccounting {
  Cost cross_cost = 0;
  Cost shared_rest_cost = 0;
  Cost rest_spread_cost = 0;
  Cost core_spread_cost = 0;
  Cost doubled_total = 0;
};

PartitionAccounting accounting(const Hypergraph& g, const AccountedPartition& ap);

/// Thrown when an exhaustive search refutes a structural guarantee; callers
/// that probe many configurations catch it and record the transcript.
class StructureViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Uncrosses a family of cut sides into an overlap-free partition:
/// cores[i] = sides[i] minus every pairwise overlap, shared = the union of
/// pairwise overlaps, rest = everything outside all sides. Re-checks the set
/// conditions (reserved and reps inside the region, each side containing the
/// region's complement and avoiding the other terminals) but not minimality
/// of the cuts the caller derived the sides from. When those hold, reps[i]
/// lands in cores[i], the region's complement lands in shared, and reserved
/// lands in rest.
AccountedPartition uncross_family(const Hypergraph& g, const VertexSet& region,
                                  const VertexSet& reserved, const std::vector<int>& reps,
                                  const std::vector<VertexSet>& sides);

/// Carves `carve` out of an accounted partition: every core loses its carved
/// vertices to shared, the carved slice of rest becomes a new core. Requires
/// all resulting parts non-empty. The accounting total grows by at most
/// d(carve) - d(shared ∩ carve).
AccountedPartition refine_partition(const AccountedPartition& before, const VertexSet& carve,
                                    int n);

struct AggregationResult {
  std::vector<int> chosen;  // indices of the kept cores, ascending
  Partition partition;      // kept cores plus one part holding everything else
};

/// Picks k-1 cores (first satisfying choice in lexicographic order) such that
/// twice the cost of the resulting k-partition is at most
/// cross_cost + rest_spread_cost + core_spread_cost. Requires at least 2k-2
/// cores; throws StructureViolation when no choice satisfies the bound.
AggregationResult aggregate_parts(const Hypergraph& g, const AccountedPartition& ap, int k);

struct StructureFailure {
  std::string instance;  // serialized hypergraph
  std::string detail;    // failing quantifier assignment
};

struct StructureReport {
  std::uint64_t instances_checked = 0;
  std::vector<StructureFailure> failures;

  bool ok() const { return failures.empty(); }
  void merge(const StructureReport& other);
};

struct WitnessOptions {
  std::uint64_t sample_seed = 0x57afbe11u;
  int exhaustive_limit = 8;  // enumerate every T while the complement is at most this big
  int samples = 50;          // otherwise draw this many T with the fixed seed
};

/// For every maximal minimum k-partition whose distinguished part has at
/// least 2k-2 vertices and every T in the complement hitting all other parts:
/// verifies some source set S of size 2k-2 inside the part recovers it as the
/// source-maximal minimum (S,T)-terminal cut, and that every tested S keeps
/// both extremal cut sides inside the part. instances_checked is 1 when the
/// hypothesis was non-vacuous.
StructureReport check_small_witness(const Hypergraph& g, int k,
                                    const WitnessOptions& opts = {});

/// Verifies the split-recovery guarantees: (a) every 2-partition no more
/// expensive than the minimum k-cut is the source-maximal minimum
/// (S, complement)-terminal cut for some S of size at most 2k-2 inside it;
/// for every minimal balanced split (U, complement) and every u0 in U,
/// (b) some S of size at most 2k-3 avoiding u0 makes (U, complement) the
/// unique minimum (S+u0, complement)-terminal cut, and (c) some such S with
/// some non-empty T of size at most 2k-2 makes it the source-minimal minimum
/// (S+u0, T)-terminal cut. Witness searches run over subset sizes ascending,
/// lexicographic within a size, first witness wins.
StructureReport check_split_recovery(const Hypergraph& g, int k);

/// Samples 4-part partitions (core1, core2, shared, rest) and checks
/// d(core1 ∪ shared) + d(core2 ∪ shared) equals the accounting total, exactly.
StructureReport check_accounting_identity(const Hypergraph& g, std::uint64_t seed, int samples);

/// Samples admissible carve steps and checks the accounting total never grows
/// by more than d(carve) - d(shared ∩ carve), exactly.
StructureReport check_refinement_inequality(const Hypergraph& g, std::uint64_t seed, int samples);

/// Samples admissible families of 2k-2 terminal-cut sides, uncrosses them and
/// checks the accounting total against the cheapest pair of side cuts, then
/// aggregates down to k parts and checks the doubled-cost bound end to end.
StructureReport check_uncross_aggregate(const Hypergraph& g, int k, std::uint64_t seed,
                                        int samples);

/// Searches seeded random families with only 2k-3 sides for an instance where
/// no k-partition keeping the region's complement strictly inside one part
/// costs at most half the cheapest pair sum. Returns a transcript when found;
/// such instances witness that 2k-2 sides are genuinely required.
std::optional<StructureFailure> search_undersized_family(const Hypergraph& g, int k,
                                                         std::uint64_t seed, int attempts);

}  // namespace hkcut
