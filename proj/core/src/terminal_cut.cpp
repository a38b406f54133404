#include "hkcut/terminal_cut.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace hkcut {

FlowNetwork::FlowNetwork(const Hypergraph& g, const VertexSet& sources, const VertexSet& sinks) {
  vertex_count_ = g.num_vertices();
  const int m = g.num_edges();
  node_count_ = vertex_count_ + 2 * m + 2;
  source_ = vertex_count_ + 2 * m;
  sink_ = vertex_count_ + 2 * m + 1;
  unbounded_ = g.total_cost() + 1;
  adjacency_.resize(node_count_);

  head_.reserve(2 * (m + 2 * g.pin_count() + sources.size() + sinks.size()));
  for (int i = 0; i < m; ++i) {
    const Hyperedge& e = g.edge(i);
    add_arc(edge_entry_node(i), edge_exit_node(i), e.cost);
    for (int v : e.vertices) {
      add_arc(v, edge_entry_node(i), unbounded_);
      add_arc(edge_exit_node(i), v, unbounded_);
    }
  }
  for (int s : sources) add_arc(source_, s, unbounded_);
  for (int t : sinks) add_arc(t, sink_, unbounded_);
}

void FlowNetwork::add_arc(int from, int to, Cost capacity) {
  adjacency_[from].push_back(static_cast<int>(head_.size()));
  head_.push_back(to);
  cap_.push_back(capacity);
  adjacency_[to].push_back(static_cast<int>(head_.size()));
  head_.push_back(from);
  cap_.push_back(0);
  original_cap_.push_back(capacity);
  original_cap_.push_back(0);
}

Cost FlowNetwork::max_flow() {
  std::vector<int> level(node_count_);
  std::vector<std::size_t> next(node_count_);
  Cost total = 0;

  auto build_levels = [&]() {
    std::fill(level.begin(), level.end(), -1);
    std::queue<int> queue;
    queue.push(source_);
    level[source_] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int a : adjacency_[u]) {
        const int v = head_[a];
        if (cap_[a] > 0 && level[v] < 0) {
          level[v] = level[u] + 1;
          queue.push(v);
        }
      }
    }
    return level[sink_] >= 0;
  };

  auto push = [&](auto&& self, int u, Cost limit) -> Cost {
    if (u == sink_) return limit;
    for (; next[u] < adjacency_[u].size(); ++next[u]) {
      const int a = adjacency_[u][next[u]];
      const int v = head_[a];
      if (cap_[a] <= 0 || level[v] != level[u] + 1) continue;
      const Cost pushed = self(self, v, std::min(limit, cap_[a]));
      if (pushed > 0) {
        cap_[a] -= pushed;
        cap_[a ^ 1] += pushed;
        return pushed;
      }
    }
    return 0;
  };

  while (build_levels()) {
    std::fill(next.begin(), next.end(), 0);
    while (Cost pushed = push(push, source_, std::numeric_limits<Cost>::max())) {
      total += pushed;
    }
  }
  return total;
}

std::vector<char> FlowNetwork::residual_reach_from(int start, bool forward) const {
  std::vector<char> seen(node_count_, 0);
  std::queue<int> queue;
  queue.push(start);
  seen[start] = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (int a : adjacency_[u]) {
      // Forward: follow residual arcs u -> v. Backward: find v with a residual
      // arc v -> u, i.e. the reverse companion of an arc listed at u.
      const int v = head_[a];
      const Cost residual = forward ? cap_[a] : cap_[a ^ 1];
      if (residual > 0 && !seen[v]) {
        seen[v] = 1;
        queue.push(v);
      }
    }
  }
  return seen;
}

VertexSet FlowNetwork::source_side_minimal() const {
  const std::vector<char> reach = residual_reach_from(source_, true);
  std::vector<int> members;
  for (int v = 0; v < vertex_count_; ++v) {
    if (reach[v]) members.push_back(v);
  }
  return VertexSet(std::move(members));
}

VertexSet FlowNetwork::source_side_maximal() const {
  const std::vector<char> reaches_sink = residual_reach_from(sink_, false);
  std::vector<int> members;
  for (int v = 0; v < vertex_count_; ++v) {
    if (!reaches_sink[v]) members.push_back(v);
  }
  return VertexSet(std::move(members));
}

std::vector<FlowNetwork::Arc> FlowNetwork::arcs() const {
  std::vector<Arc> out;
  out.reserve(head_.size() / 2);
  for (std::size_t a = 0; a < head_.size(); a += 2) {
    out.push_back(Arc{head_[a + 1], head_[a], original_cap_[a], original_cap_[a] - cap_[a]});
  }
  return out;
}

TerminalCutResult min_terminal_cut(const Hypergraph& g, const VertexSet& sources,
                                   const VertexSet& sinks) {
  if (sources.empty() || sinks.empty()) {
    throw std::invalid_argument("terminal cut needs non-empty source and sink sets");
  }
  if (sources.intersects(sinks)) {
    throw std::invalid_argument("terminal sets must be disjoint");
  }
  const int n = g.num_vertices();
  for (int v : sources) {
    if (v < 0 || v >= n) throw std::invalid_argument("source vertex out of range");
  }
  for (int v : sinks) {
    if (v < 0 || v >= n) throw std::invalid_argument("sink vertex out of range");
  }

  FlowNetwork network(g, sources, sinks);
  TerminalCutResult result;
  result.value = network.max_flow();
  result.src_minimal = network.source_side_minimal();
  result.src_maximal = network.source_side_maximal();
  return result;
}

}  // namespace hkcut
