#pragma once

#include <cstdint>
#include <string>

#include "hkcut/hypergraph.hpp"

namespace hkcut {

/// Instance text format (hMETIS-compatible subset):
///   header   "m n"  or  "m n 1"
///   body     one line per hyperedge, "v1 v2 ..." (unit costs) or
///            "w v1 v2 ..." when the header carries the weight flag 1
/// Vertex ids are 1-based on disk, 0-based in memory; '%' comment lines and
/// blank lines are ignored. Vertex-weight header flags (10, 11) are rejected.
Hypergraph parse_instance(const std::string& text);

/// Always emits the weight flag; parse_instance(write_instance(g)) == g.
std::string write_instance(const Hypergraph& g);

struct GenParams {
  int n = 0;
  int m = 0;
  int rank_max = 2;    // largest hyperedge size, in [2, n]
  Cost weight_max = 1; // costs drawn uniformly in [1, weight_max]
  std::uint64_t seed = 0;
};

/// Seeded random instance: per hyperedge, size uniform in [2, rank_max],
/// vertices drawn without replacement (partial Fisher-Yates), cost uniform in
/// [1, weight_max], in that order from one SplitMix64 stream (rng.hpp). The
/// draw order and generator are fixed, so identical params give identical
/// instances everywhere.
Hypergraph gen_random(const GenParams& params);

}  // namespace hkcut
