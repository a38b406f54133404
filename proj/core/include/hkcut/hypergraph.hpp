#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace hkcut {

/// Hyperedge costs are exact 64-bit integers so that min-cut values and flow
/// capacities never lose precision.
using Cost = std::int64_t;

/// Guard on the sum of all hyperedge costs. Capacities derived from the total
/// (see terminal_cut.hpp) must stay clear of signed overflow.
inline constexpr Cost kMaxTotalCost = (Cost{1} << 62) - 1;

/// A set of vertex ids, kept sorted and duplicate-free. Complements are always
/// taken relative to the vertex count of the owning hypergraph.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<int> ids);
  explicit VertexSet(std::vector<int> ids);

  /// {0, 1, ..., n-1}
  static VertexSet range(int n);

  bool contains(int v) const;
  bool empty() const { return ids_.empty(); }
  int size() const { return static_cast<int>(ids_.size()); }
  const std::vector<int>& ids() const { return ids_; }
  int front() const { return ids_.front(); }

  bool subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet operator|(const VertexSet& other) const;
  VertexSet operator&(const VertexSet& other) const;
  VertexSet operator-(const VertexSet& other) const;
  VertexSet complement(int n) const;

  void insert(int v);

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<int> ids_;
};

/// An ordered tuple of disjoint non-empty vertex sets. Validity against a
/// particular hypergraph (parts covering all of its vertices) is checked by
/// the operations that require it.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<VertexSet> parts) : parts_(std::move(parts)) {}

  int k() const { return static_cast<int>(parts_.size()); }
  const std::vector<VertexSet>& parts() const { return parts_; }
  const VertexSet& part(int i) const { return parts_[i]; }

  /// Canonical form: parts ordered by their smallest member. Two partitions
  /// with the same unordered part structure canonicalize identically, and
  /// canonical partitions compare lexicographically part by part (prefix
  /// rule), which is the tie-breaking order used throughout.
  Partition canonical() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<VertexSet> parts_;
};

struct Hyperedge {
  std::vector<int> vertices;  // sorted, duplicate-free
  Cost cost = 0;

  friend auto operator<=>(const Hyperedge&, const Hyperedge&) = default;
};

struct InducedSubgraph;

class Hypergraph {
 public:
  Hypergraph() = default;

  /// Validates and normalizes: vertex ids in range, costs non-negative, total
  /// cost within the overflow guard; vertices within each edge sorted and
  /// deduplicated. Edges keep multiset semantics unless merge_duplicates is
  /// set, in which case identical vertex sets are merged by summing costs.
  static Hypergraph build(int n,
                          std::vector<std::pair<std::vector<int>, Cost>> edges,
                          bool merge_duplicates = false);

  /// Unit-cost convenience.
  static Hypergraph build_unit(int n, std::vector<std::vector<int>> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Hyperedge>& edges() const { return edges_; }
  const Hyperedge& edge(int i) const { return edges_[i]; }

  /// Total number of vertex occurrences over all hyperedges (the
  /// representation size commonly written p).
  std::size_t pin_count() const { return pin_count_; }
  Cost total_cost() const { return total_cost_; }
  VertexSet vertex_set() const { return VertexSet::range(n_); }

  /// Total cost of hyperedges with vertices on both sides of (side, complement).
  /// Symmetric in the two sides. Requires a non-empty proper subset.
  Cost cut_value(const VertexSet& side) const;

  /// Total cost of hyperedges meeting at least two parts. Requires a valid
  /// partition of the full vertex set; zero for a single part.
  Cost partition_cost(const Partition& p) const;

  /// Subhypergraph on `keep`: only hyperedges fully inside `keep` survive,
  /// vertices re-indexed 0..|keep|-1.
  InducedSubgraph induced(const VertexSet& keep) const;

  /// Maximal connected components (a hyperedge connects all its members),
  /// ordered by smallest member.
  std::vector<VertexSet> components() const;

  /// Throws std::invalid_argument when p is not a partition of the vertex set.
  void require_valid_partition(const Partition& p) const;

  friend auto operator<=>(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_ = 0;
  std::vector<Hyperedge> edges_;
  std::size_t pin_count_ = 0;
  Cost total_cost_ = 0;
};

/// Result of restricting a hypergraph to a vertex subset: the subhypergraph
/// with vertices re-indexed 0..|U|-1 and the table mapping new ids back to
/// the parent's ids.
struct InducedSubgraph {
  Hypergraph graph;
  std::vector<int> to_parent;  // to_parent[new_id] == old_id
};

}  // namespace hkcut
