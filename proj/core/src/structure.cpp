#include "hkcut/structure.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "hkcut/combinatorics.hpp"
#include "hkcut/io.hpp"
#include "hkcut/oracle.hpp"
#include "hkcut/rng.hpp"
#include "hkcut/terminal_cut.hpp"

namespace hkcut {

namespace {

std::string to_string(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int v : s) {
    if (!first) out << ' ';
    out << v;
    first = false;
  }
  out << '}';
  return out.str();
}

std::string to_string(const Partition& p) {
  std::ostringstream out;
  for (int i = 0; i < p.k(); ++i) {
    if (i) out << ' ';
    out << to_string(p.part(i));
  }
  return out.str();
}

Cost cut_or_zero(const Hypergraph& g, const VertexSet& s) {
  if (s.empty() || s.size() == g.num_vertices()) return 0;
  return g.cut_value(s);
}

VertexSet random_subset_of_size(SplitMix64& rng, int n, int size) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (int j = 0; j < size; ++j) {
    const int pick = j + static_cast<int>(rng.below(n - j));
    std::swap(pool[j], pool[pick]);
  }
  return VertexSet(std::vector<int>(pool.begin(), pool.begin() + size));
}

// Random subset by independent fair coins; may be empty or everything.
VertexSet random_subset(SplitMix64& rng, const VertexSet& pool) {
  std::vector<int> picked;
  for (int v : pool) {
    if (rng.coin()) picked.push_back(v);
  }
  return VertexSet(std::move(picked));
}

}  // namespace

Partition AccountedPartition::as_partition() const {
  std::vector<VertexSet> parts = cores;
  parts.push_back(shared);
  parts.push_back(rest);
  return Partition(std::move(parts));
}

EdgeAccounting classify_edge(const Hyperedge& e, const AccountedPartition& ap) {
  int cores_touched = 0;
  for (const VertexSet& core : ap.cores) {
    for (int v : e.vertices) {
      if (core.contains(v)) {
        ++cores_touched;
        break;
      }
    }
    if (cores_touched >= 2) break;
  }
  bool shared_touched = false, rest_touched = false;
  for (int v : e.vertices) {
    shared_touched = shared_touched || ap.shared.contains(v);
    rest_touched = rest_touched || ap.rest.contains(v);
  }
  EdgeAccounting out;
  const int parts_touched = cores_touched + (shared_touched ? 1 : 0) + (rest_touched ? 1 : 0);
  out.crosses = parts_touched >= 2;
  out.in_shared_rest = cores_touched == 0 && shared_touched && rest_touched;
  out.in_rest_spread = rest_touched && (cores_touched + (shared_touched ? 1 : 0)) >= 2;
  out.in_core_spread = !rest_touched && cores_touched >= 2;
  return out;
}

PartitionAccounting accounting(const Hypergraph& g, const AccountedPartition& ap) {
  g.require_valid_partition(ap.as_partition());
  PartitionAccounting acc;
  for (const Hyperedge& e : g.edges()) {
    const EdgeAccounting cls = classify_edge(e, ap);
    if (cls.crosses) acc.cross_cost += e.cost;
    if (cls.in_shared_rest) acc.shared_rest_cost += e.cost;
    if (cls.in_rest_spread) acc.rest_spread_cost += e.cost;
    if (cls.in_core_spread) acc.core_spread_cost += e.cost;
  }
  acc.doubled_total =
      acc.cross_cost + acc.shared_rest_cost + acc.rest_spread_cost + acc.core_spread_cost;
  return acc;
}

AccountedPartition uncross_family(const Hypergraph& g, const VertexSet& region,
                                  const VertexSet& reserved, const std::vector<int>& reps,
                                  const std::vector<VertexSet>& sides) {
  const int n = g.num_vertices();
  const int p = static_cast<int>(reps.size());
  if (p < 2 || sides.size() != reps.size()) {
    throw std::invalid_argument("need at least two sides, one per representative");
  }
  if (reserved.empty() || !reserved.subset_of(region) || reserved.size() >= region.size()) {
    throw std::invalid_argument("reserved must be a non-empty proper subset of the region");
  }
  if (region.size() >= n) {
    throw std::invalid_argument("region must be a proper subset of the vertices");
  }
  const VertexSet rep_set{std::vector<int>(reps)};
  if (rep_set.size() != p) throw std::invalid_argument("representatives must be distinct");
  if (!rep_set.subset_of(region) || rep_set.intersects(reserved)) {
    throw std::invalid_argument("representatives must lie in the region minus reserved");
  }
  const VertexSet outside = region.complement(n);
  for (int i = 0; i < p; ++i) {
    if (!outside.subset_of(sides[i])) {
      throw std::invalid_argument("side " + std::to_string(i) +
                                  " does not contain the region's complement");
    }
    if (!sides[i].contains(reps[i])) {
      throw std::invalid_argument("side " + std::to_string(i) +
                                  " misses its own representative");
    }
    if (sides[i].intersects(reserved)) {
      throw std::invalid_argument("side " + std::to_string(i) + " meets the reserved set");
    }
    for (int j = 0; j < p; ++j) {
      if (j != i && sides[j].contains(reps[i])) {
        throw std::invalid_argument("representative " + std::to_string(reps[i]) +
                                    " appears in side " + std::to_string(j));
      }
    }
  }

  VertexSet shared;
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) shared = shared | (sides[i] & sides[j]);
  }
  VertexSet covered;
  for (const VertexSet& side : sides) covered = covered | side;
  AccountedPartition ap;
  ap.shared = shared;
  ap.rest = covered.complement(n);
  ap.cores.reserve(p);
  for (const VertexSet& side : sides) ap.cores.push_back(side - shared);

  for (const VertexSet& core : ap.cores) {
    if (core.empty()) throw std::invalid_argument("uncrossing produced an empty core");
  }
  if (ap.shared.empty() || ap.rest.empty()) {
    throw std::invalid_argument("uncrossing produced an empty shared or rest part");
  }
  g.require_valid_partition(ap.as_partition());
  return ap;
}

AccountedPartition refine_partition(const AccountedPartition& before, const VertexSet& carve,
                                    int n) {
  AccountedPartition after;
  after.cores.reserve(before.cores.size() + 1);
  for (const VertexSet& core : before.cores) {
    VertexSet trimmed = core - carve;
    if (trimmed.empty()) {
      throw std::invalid_argument("carve swallows core " + to_string(core));
    }
    after.cores.push_back(std::move(trimmed));
  }
  VertexSet new_core = carve & before.rest;
  if (new_core.empty()) throw std::invalid_argument("carve misses the rest part");
  VertexSet new_rest = before.rest - carve;
  if (new_rest.empty()) throw std::invalid_argument("carve swallows the rest part");
  VertexSet new_shared = before.shared | (carve - before.rest);
  if (new_shared.empty()) throw std::invalid_argument("refined shared part is empty");
  (void)n;
  after.cores.push_back(std::move(new_core));
  after.shared = std::move(new_shared);
  after.rest = std::move(new_rest);
  return after;
}

AggregationResult aggregate_parts(const Hypergraph& g, const AccountedPartition& ap, int k) {
  if (k < 2) throw std::invalid_argument("aggregation needs k >= 2");
  const int p = ap.core_count();
  if (p < 2 * k - 2) {
    throw std::invalid_argument("aggregation needs at least 2k-2 cores, got " +
                                std::to_string(p));
  }
  const PartitionAccounting acc = accounting(g, ap);
  const Cost bound = acc.cross_cost + acc.rest_spread_cost + acc.core_spread_cost;
  const int n = g.num_vertices();
  const int pick = k - 1;

  std::vector<int> idx(pick);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    VertexSet chosen_union;
    for (int i : idx) chosen_union = chosen_union | ap.cores[i];
    std::vector<VertexSet> parts;
    parts.reserve(k);
    for (int i : idx) parts.push_back(ap.cores[i]);
    parts.push_back(chosen_union.complement(n));
    Partition candidate(std::move(parts));
    if (2 * g.partition_cost(candidate) <= bound) {
      return AggregationResult{idx, std::move(candidate)};
    }
    int i = pick - 1;
    while (i >= 0 && idx[i] == p - pick + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < pick; ++j) idx[j] = idx[j - 1] + 1;
  }
  throw StructureViolation("no choice of " + std::to_string(pick) +
                           " cores satisfies the doubled-cost bound " + std::to_string(bound));
}

void StructureReport::merge(const StructureReport& other) {
  instances_checked += other.instances_checked;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

namespace {

// All subsets of `pool` meeting every part of `parts`, sizes ascending; when
// the pool is larger than the exhaustive limit, a fixed-seed sample instead.
std::vector<VertexSet> transversals(const VertexSet& pool, const Partition& parts,
                                    const WitnessOptions& opts) {
  auto hits_all = [&](const VertexSet& t) {
    for (const VertexSet& part : parts.parts()) {
      if (!t.intersects(part)) return false;
    }
    return true;
  };
  std::vector<VertexSet> out;
  if (pool.size() <= opts.exhaustive_limit) {
    for_each_subset_sized(pool.ids(), 1, pool.size(), [&](const VertexSet& t) {
      if (hits_all(t)) out.push_back(t);
    });
    return out;
  }
  SplitMix64 rng(opts.sample_seed);
  std::set<VertexSet> seen;
  int drawn = 0;
  for (long attempt = 0; attempt < 400L * opts.samples && drawn < opts.samples; ++attempt) {
    VertexSet t = random_subset(rng, pool);
    if (t.empty() || !hits_all(t)) continue;
    ++drawn;
    if (seen.insert(t).second) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

StructureReport check_small_witness(const Hypergraph& g, int k, const WitnessOptions& opts) {
  if (k < 2) throw std::invalid_argument("witness check needs k >= 2");
  StructureReport report;
  const int n = g.num_vertices();
  const std::vector<DistinguishedPart> pairs = maximal_min_kpartitions(g, k);
  const std::string instance = write_instance(g);
  const int witness_size = 2 * k - 2;
  bool contributed = false;

  for (const DistinguishedPart& dp : pairs) {
    if (dp.part.size() < witness_size) continue;
    contributed = true;
    const VertexSet comp = dp.part.complement(n);
    for (const VertexSet& t : transversals(comp, dp.rest, opts)) {
      bool witnessed = false;
      for_each_combination_until(dp.part.ids(), witness_size, [&](const VertexSet& s) {
        const TerminalCutResult tc = min_terminal_cut(g, s, t);
        if (!tc.src_minimal.subset_of(dp.part) || !tc.src_maximal.subset_of(dp.part)) {
          report.failures.push_back(StructureFailure{
              instance, "containment breach: part=" + to_string(dp.part) +
                            " T=" + to_string(t) + " S=" + to_string(s) +
                            " min=" + to_string(tc.src_minimal) +
                            " max=" + to_string(tc.src_maximal)});
        }
        if (tc.src_maximal == dp.part) {
          witnessed = true;
          return true;
        }
        return false;
      });
      if (!witnessed) {
        report.failures.push_back(StructureFailure{
            instance, "no source set of size " + std::to_string(witness_size) +
                          " recovers part=" + to_string(dp.part) + " rest=" +
                          to_string(dp.rest) + " against T=" + to_string(t)});
      }
    }
  }
  report.instances_checked = contributed ? 1 : 0;
  return report;
}

StructureReport check_split_recovery(const Hypergraph& g, int k) {
  if (k < 2) throw std::invalid_argument("split recovery check needs k >= 2");
  StructureReport report;
  const int n = g.num_vertices();
  const Cost opt = min_kcut_bruteforce(g, k).value;
  const std::string instance = write_instance(g);

  // (a) every 2-partition at most as expensive as the optimum is the
  // source-maximal minimum cut for some small source set inside it
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  for_each_subset_sized(all, 1, n - 1, [&](const VertexSet& side) {
    if (g.cut_value(side) > opt) return;
    const VertexSet comp = side.complement(n);
    bool witnessed = false;
    for (int size = 1; size <= std::min(2 * k - 2, side.size()) && !witnessed; ++size) {
      witnessed = for_each_combination_until(side.ids(), size, [&](const VertexSet& s) {
        return min_terminal_cut(g, s, comp).src_maximal == side;
      });
    }
    if (!witnessed) {
      report.failures.push_back(StructureFailure{
          instance, "cheap side " + to_string(side) +
                        " not source-maximal recoverable with at most " +
                        std::to_string(2 * k - 2) + " sources"});
    }
  });

  // (b) + (c) for every minimal balanced split and every anchor vertex in it
  for (const VertexSet& split : minimal_balanced_splits(g, k)) {
    const VertexSet comp = split.complement(n);
    for (int anchor : split) {
      const std::vector<int> others = (split - VertexSet{anchor}).ids();
      const int s_limit = std::min(2 * k - 3, static_cast<int>(others.size()));

      bool unique_found = false;
      for (int size = 0; size <= s_limit && !unique_found; ++size) {
        unique_found = for_each_combination_until(others, size, [&](const VertexSet& s) {
          VertexSet sources = s;
          sources.insert(anchor);
          const TerminalCutResult tc = min_terminal_cut(g, sources, comp);
          return is_unique_min_cut(tc) && tc.src_minimal == split;
        });
      }
      if (!unique_found) {
        report.failures.push_back(StructureFailure{
            instance, "split " + to_string(split) + " anchor " + std::to_string(anchor) +
                          ": no source set makes it the unique minimum cut"});
      }

      bool minimal_found = false;
      for (int s_size = 0; s_size <= s_limit && !minimal_found; ++s_size) {
        minimal_found = for_each_combination_until(others, s_size, [&](const VertexSet& s) {
          VertexSet sources = s;
          sources.insert(anchor);
          for (int t_size = 1; t_size <= std::min(2 * k - 2, comp.size()); ++t_size) {
            const bool hit =
                for_each_combination_until(comp.ids(), t_size, [&](const VertexSet& t) {
                  return min_terminal_cut(g, sources, t).src_minimal == split;
                });
            if (hit) return true;
          }
          return false;
        });
      }
      if (!minimal_found) {
        report.failures.push_back(StructureFailure{
            instance, "split " + to_string(split) + " anchor " + std::to_string(anchor) +
                          ": no (S,T) makes it the source-minimal minimum cut"});
      }
    }
  }
  report.instances_checked = 1;
  return report;
}

StructureReport check_accounting_identity(const Hypergraph& g, std::uint64_t seed, int samples) {
  StructureReport report;
  const int n = g.num_vertices();
  if (n < 4) return report;
  SplitMix64 rng(seed);
  const std::string instance = write_instance(g);
  for (long attempt = 0; attempt < 400L * samples &&
                         report.instances_checked < static_cast<std::uint64_t>(samples);
       ++attempt) {
    std::vector<std::vector<int>> blocks(4);
    for (int v = 0; v < n; ++v) blocks[rng.below(4)].push_back(v);
    if (std::any_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.empty(); })) {
      continue;
    }
    AccountedPartition ap;
    ap.cores = {VertexSet(blocks[0]), VertexSet(blocks[1])};
    ap.shared = VertexSet(blocks[2]);
    ap.rest = VertexSet(blocks[3]);
    const Cost lhs =
        g.cut_value(ap.cores[0] | ap.shared) + g.cut_value(ap.cores[1] | ap.shared);
    const PartitionAccounting acc = accounting(g, ap);
    ++report.instances_checked;
    if (lhs != acc.doubled_total) {
      report.failures.push_back(StructureFailure{
          instance, "pair identity broke on " + to_string(ap.as_partition()) + ": sides sum " +
                        std::to_string(lhs) + " vs total " + std::to_string(acc.doubled_total)});
    }
  }
  return report;
}

StructureReport check_refinement_inequality(const Hypergraph& g, std::uint64_t seed,
                                            int samples) {
  StructureReport report;
  const int n = g.num_vertices();
  if (n < 4) return report;
  SplitMix64 rng(seed);
  const std::string instance = write_instance(g);
  const VertexSet everything = VertexSet::range(n);
  for (long attempt = 0; attempt < 400L * samples &&
                         report.instances_checked < static_cast<std::uint64_t>(samples);
       ++attempt) {
    const int cores = 1 + static_cast<int>(rng.below(std::min(3, n - 3)));
    const int parts = cores + 2;
    std::vector<std::vector<int>> blocks(parts);
    for (int v = 0; v < n; ++v) blocks[rng.below(parts)].push_back(v);
    if (std::any_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.empty(); })) {
      continue;
    }
    AccountedPartition before;
    for (int i = 0; i < cores; ++i) before.cores.push_back(VertexSet(blocks[i]));
    before.shared = VertexSet(blocks[cores]);
    before.rest = VertexSet(blocks[cores + 1]);

    const VertexSet carve = random_subset(rng, everything);
    AccountedPartition after;
    try {
      after = refine_partition(before, carve, n);
    } catch (const std::invalid_argument&) {
      continue;  // inadmissible carve
    }
    const Cost before_total = accounting(g, before).doubled_total;
    const Cost after_total = accounting(g, after).doubled_total;
    const Cost allowance = cut_or_zero(g, carve) - cut_or_zero(g, before.shared & carve);
    ++report.instances_checked;
    if (after_total > before_total + allowance) {
      report.failures.push_back(StructureFailure{
          instance, "refinement grew the total by more than the allowance: before " +
                        to_string(before.as_partition()) + " carve " + to_string(carve) +
                        " totals " + std::to_string(before_total) + " -> " +
                        std::to_string(after_total) + " allowance " +
                        std::to_string(allowance)});
    }
  }
  return report;
}

namespace {

struct FamilyDraw {
  VertexSet region;
  VertexSet reserved;
  std::vector<int> reps;
  std::vector<VertexSet> sides;
  Cost cheapest_pair = 0;
};

// Draws a region, an anchor set and p representatives, computes the p
// terminal-cut sides and accepts the draw when every representative lands in
// its own side (it can never land in another: it is a source terminal there).
std::optional<FamilyDraw> draw_family(const Hypergraph& g, int p, SplitMix64& rng) {
  const int n = g.num_vertices();
  if (n < p + 2) return std::nullopt;
  FamilyDraw draw;
  const int region_size = rng.int_in(p + 1, n - 1);
  draw.region = random_subset_of_size(rng, n, region_size);
  std::vector<int> pool = draw.region.ids();
  for (std::size_t j = 0; j + 1 < pool.size(); ++j) {
    const std::size_t pick = j + rng.below(pool.size() - j);
    std::swap(pool[j], pool[pick]);
  }
  draw.reps.assign(pool.begin(), pool.begin() + p);
  draw.reserved = VertexSet{pool[p]};
  const VertexSet outside = draw.region.complement(n);

  for (int i = 0; i < p; ++i) {
    VertexSet terminals = draw.reserved;
    for (int j = 0; j < p; ++j) {
      if (j != i) terminals.insert(draw.reps[j]);
    }
    const TerminalCutResult tc = min_terminal_cut(g, terminals, outside);
    if (tc.src_minimal.contains(draw.reps[i])) return std::nullopt;
    draw.sides.push_back(tc.src_minimal.complement(n));
  }
  bool first = true;
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      const Cost pair = g.cut_value(draw.sides[i]) + g.cut_value(draw.sides[j]);
      if (first || pair < draw.cheapest_pair) draw.cheapest_pair = pair;
      first = false;
    }
  }
  return draw;
}

std::string family_transcript(const FamilyDraw& draw) {
  std::ostringstream out;
  out << "region=" << to_string(draw.region) << " reserved=" << to_string(draw.reserved)
      << " reps=";
  for (std::size_t i = 0; i < draw.reps.size(); ++i) {
    out << (i ? "," : "") << draw.reps[i];
  }
  out << " sides=";
  for (std::size_t i = 0; i < draw.sides.size(); ++i) {
    out << (i ? " " : "") << to_string(draw.sides[i]);
  }
  out << " cheapest_pair=" << draw.cheapest_pair;
  return out.str();
}

}  // namespace

StructureReport check_uncross_aggregate(const Hypergraph& g, int k, std::uint64_t seed,
                                        int samples) {
  if (k < 2) throw std::invalid_argument("uncross check needs k >= 2");
  StructureReport report;
  const int p = 2 * k - 2;
  if (g.num_vertices() < p + 2) return report;
  SplitMix64 rng(seed);
  const std::string instance = write_instance(g);
  for (long attempt = 0; attempt < 600L * samples &&
                         report.instances_checked < static_cast<std::uint64_t>(samples);
       ++attempt) {
    const std::optional<FamilyDraw> draw = draw_family(g, p, rng);
    if (!draw) continue;
    const AccountedPartition ap =
        uncross_family(g, draw->region, draw->reserved, draw->reps, draw->sides);
    ++report.instances_checked;
    const PartitionAccounting acc = accounting(g, ap);
    if (acc.doubled_total > draw->cheapest_pair) {
      report.failures.push_back(
          StructureFailure{instance, "uncrossed total " + std::to_string(acc.doubled_total) +
                                         " exceeds cheapest pair: " + family_transcript(*draw)});
      continue;
    }
    try {
      const AggregationResult agg = aggregate_parts(g, ap, k);
      const Cost cost = g.partition_cost(agg.partition);
      if (2 * cost > draw->cheapest_pair) {
        report.failures.push_back(StructureFailure{
            instance, "aggregated cost " + std::to_string(cost) +
                          " exceeds half the cheapest pair: " + family_transcript(*draw)});
      }
      const VertexSet outside = draw->region.complement(g.num_vertices());
      const VertexSet& last = agg.partition.part(agg.partition.k() - 1);
      if (!outside.subset_of(last) || outside == last) {
        report.failures.push_back(StructureFailure{
            instance, "aggregated remainder does not strictly contain the complement: " +
                          family_transcript(*draw)});
      }
    } catch (const StructureViolation& violation) {
      report.failures.push_back(StructureFailure{
          instance, std::string(violation.what()) + ": " + family_transcript(*draw)});
    }
  }
  return report;
}

std::optional<StructureFailure> search_undersized_family(const Hypergraph& g, int k,
                                                         std::uint64_t seed, int attempts) {
  if (k < 3) return std::nullopt;  // with k=2 a family of 2k-3 sides has no pairs
  const int p = 2 * k - 3;
  const int n = g.num_vertices();
  if (n < p + 2 || n > kBruteForceVertexLimit) return std::nullopt;
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    const std::optional<FamilyDraw> draw = draw_family(g, p, rng);
    if (!draw) continue;
    const VertexSet outside = draw->region.complement(n);
    bool any = false;
    Cost best = 0;
    for_each_kpartition(n, k, [&](const Partition& part) {
      for (int i = 0; i < part.k(); ++i) {
        if (outside.size() < part.part(i).size() && outside.subset_of(part.part(i))) {
          const Cost c = g.partition_cost(part);
          if (!any || c < best) best = c;
          any = true;
          return;
        }
      }
    });
    if (!any) continue;
    if (2 * best > draw->cheapest_pair) {
      return StructureFailure{
          write_instance(g),
          "undersized family beats every k-partition: best=" + std::to_string(best) + " " +
              family_transcript(*draw)};
    }
  }
  return std::nullopt;
}

}  // namespace hkcut
