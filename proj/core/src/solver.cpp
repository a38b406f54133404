#include "hkcut/solver.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <set>
#include <stdexcept>

#include "hkcut/combinatorics.hpp"
#include "hkcut/oracle.hpp"
#include "hkcut/terminal_cut.hpp"

namespace hkcut {

namespace {

using Clock = std::chrono::steady_clock;

void check_k(const Hypergraph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (k > g.num_vertices()) {
    throw std::invalid_argument("k exceeds vertex count (k=" + std::to_string(k) +
                                ", n=" + std::to_string(g.num_vertices()) + ")");
  }
}

VertexSet lift(const VertexSet& child, const std::vector<int>& to_parent) {
  std::vector<int> ids;
  ids.reserve(child.size());
  for (int v : child) ids.push_back(to_parent[v]);
  return VertexSet(std::move(ids));
}

// Tracks the cheapest candidate; ties resolved by canonical partition order,
// so the reduction is independent of the order candidates arrive in.
struct Best {
  std::optional<Cost> value;
  Partition partition;

  void offer(Cost cost, Partition p) {
    if (!value || cost < *value || (cost == *value && p < partition)) {
      value = cost;
      partition = std::move(p);
    }
  }
};

struct Context {
  SolveStats stats;
};

// For every disjoint pair (S, T) of the given exact sizes, in lexicographic
// order of the sorted id tuples, S-major.
template <class Fn>
void for_each_terminal_pair(int n, int source_size, int sink_size, Fn&& fn) {
  if (source_size < 1 || sink_size < 1 || source_size + sink_size > n) return;
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  for_each_combination(all, source_size, [&](const VertexSet& sources) {
    const VertexSet remaining = sources.complement(n);
    for_each_combination(remaining.ids(), sink_size, [&](const VertexSet& sinks) {
      fn(sources, sinks);
    });
  });
}

Partition recursive_partition(const Hypergraph& g, int k, Context& ctx) {
  ++ctx.stats.recursion_nodes;
  const int n = g.num_vertices();
  if (k == 1) return Partition({g.vertex_set()});

  std::set<VertexSet> candidates;
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  for_each_subset_sized(all, 1, std::min(2 * k - 3, n - 1), [&](const VertexSet& u) {
    candidates.insert(u);
  });
  for_each_terminal_pair(n, 2 * k - 2, k - 1, [&](const VertexSet& s, const VertexSet& t) {
    ++ctx.stats.terminal_cut_calls;
    candidates.insert(min_terminal_cut(g, s, t).src_maximal);
  });

  Best best;
  for (const VertexSet& side : candidates) {
    const VertexSet remainder = side.complement(n);
    if (remainder.size() < k - 1) continue;
    const InducedSubgraph sub = g.induced(remainder);
    const Partition below = recursive_partition(sub.graph, k - 1, ctx);
    std::vector<VertexSet> parts{side};
    for (const VertexSet& q : below.parts()) parts.push_back(lift(q, sub.to_parent));
    Partition candidate = Partition(std::move(parts)).canonical();
    const Cost cost = g.partition_cost(candidate);
    ++ctx.stats.candidates_considered;
    best.offer(cost, std::move(candidate));
  }
  if (!best.value) throw std::logic_error("no k-partition candidate found");
  return best.partition;
}

Partition divide_conquer_partition(const Hypergraph& g, int k, Context& ctx) {
  ++ctx.stats.recursion_nodes;
  const int n = g.num_vertices();
  if (k == 1) return Partition({g.vertex_set()});

  const int left = k / 2;
  const int right = k - left;

  std::set<VertexSet> candidates;
  const int side_limit = std::min(2 * k - 2, n - 1);
  for (int source_size = 1; source_size <= side_limit; ++source_size) {
    for (int sink_size = 1; sink_size <= std::min(side_limit, n - source_size); ++sink_size) {
      for_each_terminal_pair(n, source_size, sink_size,
                             [&](const VertexSet& s, const VertexSet& t) {
                               // One flow serves the pair and its swap: the
                               // swapped orientation's source-minimal cut is
                               // the complement of this one's source-maximal.
                               if (!(s < t)) return;
                               ++ctx.stats.terminal_cut_calls;
                               const TerminalCutResult tc = min_terminal_cut(g, s, t);
                               candidates.insert(tc.src_minimal);
                               candidates.insert(tc.src_maximal.complement(n));
                             });
    }
  }

  Best best;
  for (const VertexSet& side : candidates) {
    if (side.size() < left || n - side.size() < right) continue;
    const VertexSet remainder = side.complement(n);
    const InducedSubgraph inner = g.induced(side);
    const InducedSubgraph outer = g.induced(remainder);
    const Partition inner_parts = divide_conquer_partition(inner.graph, left, ctx);
    const Partition outer_parts = divide_conquer_partition(outer.graph, right, ctx);
    std::vector<VertexSet> parts;
    parts.reserve(k);
    for (const VertexSet& q : inner_parts.parts()) parts.push_back(lift(q, inner.to_parent));
    for (const VertexSet& q : outer_parts.parts()) parts.push_back(lift(q, outer.to_parent));
    Partition candidate = Partition(std::move(parts)).canonical();
    const Cost cost = g.partition_cost(candidate);
    ++ctx.stats.candidates_considered;
    best.offer(cost, std::move(candidate));
  }
  if (!best.value) throw std::logic_error("no k-partition candidate found");
  return best.partition;
}

template <class Solver>
Solution timed_solution(const Hypergraph& g, int k, Solver&& solver) {
  check_k(g, k);
  Context ctx;
  const auto start = Clock::now();
  Partition p = solver(g, k, ctx);
  ctx.stats.wall_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  const Cost value = g.partition_cost(p);
  return Solution{std::move(p), value, ctx.stats};
}

}  // namespace

Solution cut_recursive(const Hypergraph& g, int k) {
  return timed_solution(g, k, [](const Hypergraph& h, int kk, Context& ctx) {
    return recursive_partition(h, kk, ctx);
  });
}

Solution cut_divide_conquer(const Hypergraph& g, int k) {
  return timed_solution(g, k, [](const Hypergraph& h, int kk, Context& ctx) {
    return divide_conquer_partition(h, kk, ctx);
  });
}

Algorithm parse_algorithm(const std::string& name) {
  if (name == "recursive") return Algorithm::kRecursive;
  if (name == "divide-conquer" || name == "dc") return Algorithm::kDivideConquer;
  if (name == "brute-force" || name == "brute") return Algorithm::kBruteForce;
  throw std::invalid_argument("unknown algorithm selector: " + name);
}

std::string algorithm_name(Algorithm algo) {
  switch (algo) {
    case Algorithm::kRecursive: return "recursive";
    case Algorithm::kDivideConquer: return "divide-conquer";
    case Algorithm::kBruteForce: return "brute-force";
  }
  throw std::logic_error("unreachable");
}

Solution solve(const Hypergraph& g, int k, Algorithm algo) {
  check_k(g, k);
  const std::vector<VertexSet> comps = g.components();
  if (static_cast<int>(comps.size()) >= k) {
    const auto start = Clock::now();
    std::vector<VertexSet> parts(comps.begin(), comps.begin() + (k - 1));
    VertexSet last;
    for (std::size_t i = k - 1; i < comps.size(); ++i) last = last | comps[i];
    parts.push_back(std::move(last));
    Partition p = Partition(std::move(parts)).canonical();
    SolveStats stats;
    stats.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return Solution{std::move(p), 0, stats};
  }
  switch (algo) {
    case Algorithm::kRecursive:
      return cut_recursive(g, k);
    case Algorithm::kDivideConquer:
      return cut_divide_conquer(g, k);
    case Algorithm::kBruteForce: {
      const auto start = Clock::now();
      BruteForceResult r = min_kcut_bruteforce(g, k);
      SolveStats stats;
      stats.candidates_considered = r.partitions_enumerated;
      stats.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
      return Solution{r.optima.front(), r.value, stats};
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace hkcut
