#include "hkcut/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "hkcut/io.hpp"
#include "hkcut/oracle.hpp"
#include "hkcut/rng.hpp"
#include "hkcut/solver.hpp"

namespace hkcut {

namespace {

Hypergraph draw_instance(SplitMix64& rng, int lo_n, int hi_n) {
  GenParams params;
  params.n = rng.int_in(lo_n, hi_n);
  params.m = rng.int_in(0, 12);
  params.rank_max = rng.int_in(2, std::min(5, params.n));
  params.weight_max = rng.coin() ? 1 : 5;
  params.seed = rng.next();
  return gen_random(params);
}

void check_solution(const Hypergraph& g, int k, const Solution& solution, Cost expected,
                    const std::string& label, StructureReport& report) {
  const std::string instance = write_instance(g);
  if (solution.partition.k() != k) {
    report.failures.push_back(
        StructureFailure{instance, label + ": returned " + std::to_string(solution.partition.k()) +
                                       " parts instead of " + std::to_string(k)});
    return;
  }
  Cost recomputed = 0;
  try {
    recomputed = g.partition_cost(solution.partition);
  } catch (const std::invalid_argument& bad) {
    report.failures.push_back(
        StructureFailure{instance, label + ": invalid partition: " + bad.what()});
    return;
  }
  if (recomputed != solution.value) {
    report.failures.push_back(StructureFailure{
        instance, label + ": stated value " + std::to_string(solution.value) +
                      " differs from recomputed " + std::to_string(recomputed)});
  }
  if (solution.value != expected) {
    report.failures.push_back(StructureFailure{
        instance, label + ": value " + std::to_string(solution.value) +
                      " differs from brute-force optimum " + std::to_string(expected)});
  }
}

}  // namespace

VerifyOutcome run_verify(const VerifyParams& params) {
  if (params.k < 2) throw std::invalid_argument("verify needs k >= 2");
  if (params.trials < 1) throw std::invalid_argument("verify needs at least one trial");
  if (params.max_n < params.k + 1) {
    throw std::invalid_argument("max_n must be at least k+1");
  }
  if (params.max_n > kBruteForceVertexLimit) {
    throw std::invalid_argument("max_n must stay within the oracle guard of " +
                                std::to_string(kBruteForceVertexLimit));
  }

  VerifyOutcome outcome;
  SplitMix64 master(params.seed);
  const int k = params.k;
  // The witness hypothesis needs parts of size 2k-2, so the structural suites
  // draw from the upper end of the size range.
  const int structural_lo = std::min(std::max(k + 1, 2 * k), params.max_n);

  for (int trial = 0; trial < params.trials; ++trial) {
    const Hypergraph g = draw_instance(master, k + 1, params.max_n);
    const Cost expected = min_kcut_bruteforce(g, k).value;
    ++outcome.oracle_equivalence.instances_checked;
    check_solution(g, k, cut_recursive(g, k), expected, "cut_recursive",
                   outcome.oracle_equivalence);
    check_solution(g, k, cut_divide_conquer(g, k), expected, "cut_divide_conquer",
                   outcome.oracle_equivalence);

    const Hypergraph s = draw_instance(master, structural_lo, params.max_n);
    outcome.small_witness.merge(check_small_witness(s, k));
    outcome.split_recovery.merge(check_split_recovery(s, k));
    outcome.accounting_checks.merge(check_accounting_identity(s, master.next(), 5));
    outcome.accounting_checks.merge(check_refinement_inequality(s, master.next(), 5));
    outcome.accounting_checks.merge(check_uncross_aggregate(s, k, master.next(), 2));
  }
  return outcome;
}

namespace {

nlohmann::json report_json(const StructureReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const StructureFailure& f : report.failures) {
    failures.push_back({{"instance", f.instance}, {"detail", f.detail}});
  }
  return {{"instances_checked", report.instances_checked}, {"failures", failures}};
}

}  // namespace

std::string verify_report_json(const VerifyParams& params, const VerifyOutcome& outcome) {
  nlohmann::json doc = {
      {"format_version", 1},
      {"command", "verify"},
      {"params",
       {{"k", params.k},
        {"trials", params.trials},
        {"seed", params.seed},
        {"max_n", params.max_n}}},
      {"suites",
       {{"oracle_equivalence", report_json(outcome.oracle_equivalence)},
        {"small_witness", report_json(outcome.small_witness)},
        {"split_recovery", report_json(outcome.split_recovery)},
        {"accounting", report_json(outcome.accounting_checks)}}},
      {"passed", outcome.passed()},
  };
  return doc.dump(2) + "\n";
}

}  // namespace hkcut
