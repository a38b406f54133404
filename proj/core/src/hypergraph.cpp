#include "hkcut/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hkcut {

VertexSet::VertexSet(std::initializer_list<int> ids) : ids_(ids) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet::VertexSet(std::vector<int> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::range(int n) {
  VertexSet s;
  s.ids_.resize(n);
  std::iota(s.ids_.begin(), s.ids_.end(), 0);
  return s;
}

bool VertexSet::contains(int v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

bool VertexSet::subset_of(const VertexSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

bool VertexSet::intersects(const VertexSet& other) const {
  auto a = ids_.begin();
  auto b = other.ids_.begin();
  while (a != ids_.end() && b != other.ids_.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a; else ++b;
  }
  return false;
}

VertexSet VertexSet::operator|(const VertexSet& other) const {
  VertexSet out;
  out.ids_.reserve(ids_.size() + other.ids_.size());
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                 std::back_inserter(out.ids_));
  return out;
}

VertexSet VertexSet::operator&(const VertexSet& other) const {
  VertexSet out;
  std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(out.ids_));
  return out;
}

VertexSet VertexSet::operator-(const VertexSet& other) const {
  VertexSet out;
  std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                      std::back_inserter(out.ids_));
  return out;
}

VertexSet VertexSet::complement(int n) const {
  VertexSet out;
  out.ids_.reserve(n - ids_.size());
  auto it = ids_.begin();
  for (int v = 0; v < n; ++v) {
    if (it != ids_.end() && *it == v) {
      ++it;
    } else {
      out.ids_.push_back(v);
    }
  }
  return out;
}

void VertexSet::insert(int v) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) ids_.insert(it, v);
}

Partition Partition::canonical() const {
  std::vector<VertexSet> parts = parts_;
  std::sort(parts.begin(), parts.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.front() < b.front();
  });
  return Partition(std::move(parts));
}

Hypergraph Hypergraph::build(int n, std::vector<std::pair<std::vector<int>, Cost>> edges,
                             bool merge_duplicates) {
  if (n < 1) throw std::invalid_argument("vertex count must be at least 1");
  Hypergraph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (auto& [vertices, cost] : edges) {
    if (cost < 0) throw std::invalid_argument("negative hyperedge cost " + std::to_string(cost));
    for (int v : vertices) {
      if (v < 0 || v >= n) {
        throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range [0, " +
                                    std::to_string(n - 1) + "]");
      }
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    if (cost > kMaxTotalCost - g.total_cost_) {
      throw std::invalid_argument("total hyperedge cost exceeds the overflow guard");
    }
    g.total_cost_ += cost;
    g.pin_count_ += vertices.size();
    g.edges_.push_back(Hyperedge{std::move(vertices), cost});
  }
  if (merge_duplicates) {
    std::map<std::vector<int>, Cost> merged;
    std::vector<std::vector<int>> order;
    for (auto& e : g.edges_) {
      auto [it, inserted] = merged.try_emplace(e.vertices, 0);
      if (inserted) order.push_back(e.vertices);
      it->second += e.cost;
    }
    g.edges_.clear();
    g.pin_count_ = 0;
    for (auto& vs : order) {
      const Cost cost = merged.at(vs);
      g.pin_count_ += vs.size();
      g.edges_.push_back(Hyperedge{std::move(vs), cost});
    }
  }
  return g;
}

Hypergraph Hypergraph::build_unit(int n, std::vector<std::vector<int>> edges) {
  std::vector<std::pair<std::vector<int>, Cost>> weighted;
  weighted.reserve(edges.size());
  for (auto& e : edges) weighted.emplace_back(std::move(e), 1);
  return build(n, std::move(weighted));
}

Cost Hypergraph::cut_value(const VertexSet& side) const {
  if (side.empty() || side.size() == n_) {
    throw std::invalid_argument("cut side must be a non-empty proper subset");
  }
  std::vector<char> in_side(n_, 0);
  for (int v : side) {
    if (v < 0 || v >= n_) throw std::invalid_argument("cut side contains an out-of-range vertex");
    in_side[v] = 1;
  }
  Cost total = 0;
  for (const Hyperedge& e : edges_) {
    bool inside = false, outside = false;
    for (int v : e.vertices) {
      (in_side[v] ? inside : outside) = true;
      if (inside && outside) break;
    }
    if (inside && outside) total += e.cost;
  }
  return total;
}

void Hypergraph::require_valid_partition(const Partition& p) const {
  if (p.k() < 1) throw std::invalid_argument("partition needs at least one part");
  std::vector<char> seen(n_, 0);
  int covered = 0;
  for (const VertexSet& part : p.parts()) {
    if (part.empty()) throw std::invalid_argument("partition has an empty part");
    for (int v : part) {
      if (v < 0 || v >= n_) throw std::invalid_argument("partition contains an out-of-range vertex");
      if (seen[v]) throw std::invalid_argument("partition parts are not disjoint");
      seen[v] = 1;
      ++covered;
    }
  }
  if (covered != n_) throw std::invalid_argument("partition does not cover all vertices");
}

Cost Hypergraph::partition_cost(const Partition& p) const {
  require_valid_partition(p);
  std::vector<int> label(n_, -1);
  for (int i = 0; i < p.k(); ++i) {
    for (int v : p.part(i)) label[v] = i;
  }
  Cost total = 0;
  for (const Hyperedge& e : edges_) {
    if (e.vertices.empty()) continue;
    const int first = label[e.vertices.front()];
    for (int v : e.vertices) {
      if (label[v] != first) {
        total += e.cost;
        break;
      }
    }
  }
  return total;
}

InducedSubgraph Hypergraph::induced(const VertexSet& keep) const {
  if (keep.empty()) throw std::invalid_argument("induced subhypergraph needs a non-empty vertex set");
  std::vector<int> to_child(n_, -1);
  for (int i = 0; i < keep.size(); ++i) {
    const int v = keep.ids()[i];
    if (v < 0 || v >= n_) throw std::invalid_argument("induced vertex set out of range");
    to_child[v] = i;
  }
  std::vector<std::pair<std::vector<int>, Cost>> kept;
  for (const Hyperedge& e : edges_) {
    std::vector<int> mapped;
    mapped.reserve(e.vertices.size());
    bool all_inside = true;
    for (int v : e.vertices) {
      if (to_child[v] < 0) {
        all_inside = false;
        break;
      }
      mapped.push_back(to_child[v]);
    }
    if (all_inside) kept.emplace_back(std::move(mapped), e.cost);
  }
  return InducedSubgraph{Hypergraph::build(keep.size(), std::move(kept)), keep.ids()};
}

std::vector<VertexSet> Hypergraph::components() const {
  std::vector<int> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (const Hyperedge& e : edges_) {
    for (std::size_t i = 1; i < e.vertices.size(); ++i) {
      parent[find(e.vertices[i - 1])] = find(e.vertices[i]);
    }
  }
  std::map<int, std::vector<int>> groups;  // keyed by smallest member seen first
  for (int v = 0; v < n_; ++v) groups[find(v)].push_back(v);
  std::vector<VertexSet> out;
  out.reserve(groups.size());
  for (auto& [root, members] : groups) out.push_back(VertexSet(std::move(members)));
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.front() < b.front();
  });
  return out;
}

}  // namespace hkcut
