#pragma once

#include <vector>

#include "hkcut/hypergraph.hpp"

namespace hkcut {

/// Calls fn(VertexSet) for every subset of `pool` with exactly `count`
/// members, in lexicographic order of the sorted id tuples.
template <class Fn>
void for_each_combination(const std::vector<int>& pool, int count, Fn&& fn) {
  const int n = static_cast<int>(pool.size());
  if (count < 0 || count > n) return;
  std::vector<int> idx(count);
  for (int i = 0; i < count; ++i) idx[i] = i;
  std::vector<int> picked(count);
  for (;;) {
    for (int i = 0; i < count; ++i) picked[i] = pool[idx[i]];
    fn(VertexSet(picked));
    int i = count - 1;
    while (i >= 0 && idx[i] == n - count + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < count; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Like for_each_combination but stops as soon as fn returns true. Returns
/// whether fn did.
template <class Fn>
bool for_each_combination_until(const std::vector<int>& pool, int count, Fn&& fn) {
  const int n = static_cast<int>(pool.size());
  if (count < 0 || count > n) return false;
  std::vector<int> idx(count);
  for (int i = 0; i < count; ++i) idx[i] = i;
  std::vector<int> picked(count);
  for (;;) {
    for (int i = 0; i < count; ++i) picked[i] = pool[idx[i]];
    if (fn(VertexSet(picked))) return true;
    int i = count - 1;
    while (i >= 0 && idx[i] == n - count + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < count; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Subsets of `pool` with size in [min_size, max_size], sizes ascending,
/// lexicographic within a size.
template <class Fn>
void for_each_subset_sized(const std::vector<int>& pool, int min_size, int max_size, Fn&& fn) {
  const int n = static_cast<int>(pool.size());
  if (max_size > n) max_size = n;
  for (int s = min_size; s <= max_size; ++s) {
    for_each_combination(pool, s, fn);
  }
}

}  // namespace hkcut
