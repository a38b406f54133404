#pragma once

#include <vector>

#include "hkcut/hypergraph.hpp"

namespace hkcut {

/// Exact minimum (S,T)-terminal cut: minimum-cost 2-partition (U, complement)
/// with S inside U and T outside. src_minimal and src_maximal are the
/// inclusion-wise smallest and largest optimal source sides; they are unique
/// because the cut function is submodular.
struct TerminalCutResult {
  Cost value = 0;
  VertexSet src_minimal;
  VertexSet src_maximal;
};

/// True iff the minimum cut is unique, i.e. the extremal optima coincide.
inline bool is_unique_min_cut(const TerminalCutResult& tc) {
  return tc.src_minimal == tc.src_maximal;
}

/// Directed flow network encoding hypergraph terminal cuts. Hypergraph
/// vertices keep their ids; hyperedge i contributes an entry node n+2i and an
/// exit node n+2i+1 joined by an arc of capacity cost(i); each member vertex
/// connects to the entry and from the exit with unbounded capacity. A super
/// source feeds every vertex of S and every vertex of T drains into a super
/// sink, all unbounded. "Unbounded" is total hyperedge cost + 1, which no
/// finite minimum cut can afford. Every arc carries a paired reverse arc for
/// residual bookkeeping.
class FlowNetwork {
 public:
  struct Arc {
    int from = 0;
    int to = 0;
    Cost capacity = 0;
    Cost flow = 0;
  };

  FlowNetwork(const Hypergraph& g, const VertexSet& sources, const VertexSet& sinks);

  /// Runs Dinic's blocking-flow algorithm to completion; integral capacities
  /// make termination exact. Returns the max-flow value.
  Cost max_flow();

  /// Hypergraph vertices reachable from the super source in the residual
  /// network. Call after max_flow.
  VertexSet source_side_minimal() const;

  /// Hypergraph vertices with no residual path to the super sink.
  VertexSet source_side_maximal() const;

  int node_count() const { return node_count_; }
  int source_node() const { return source_; }
  int sink_node() const { return sink_; }
  int edge_entry_node(int edge_index) const { return vertex_count_ + 2 * edge_index; }
  int edge_exit_node(int edge_index) const { return vertex_count_ + 2 * edge_index + 1; }
  Cost unbounded_capacity() const { return unbounded_; }

  /// Forward arcs with their current flow, in insertion order.
  std::vector<Arc> arcs() const;

 private:
  void add_arc(int from, int to, Cost capacity);
  std::vector<char> residual_reach_from(int start, bool forward) const;

  int vertex_count_ = 0;
  int node_count_ = 0;
  int source_ = 0;
  int sink_ = 0;
  Cost unbounded_ = 0;

  // Paired arc storage: arc 2i is forward, 2i+1 its reverse; cap_ holds the
  // remaining (residual) capacity.
  std::vector<int> head_;
  std::vector<Cost> cap_;
  std::vector<Cost> original_cap_;
  std::vector<std::vector<int>> adjacency_;
};

/// Computes the minimum (S,T)-terminal cut of the hypergraph together with
/// both extremal optimal source sides. S and T must be non-empty and disjoint.
TerminalCutResult min_terminal_cut(const Hypergraph& g, const VertexSet& sources,
                                   const VertexSet& sinks);

}  // namespace hkcut
