#pragma once

#include <cstdint>
#include <string>

#include "hkcut/structure.hpp"

namespace hkcut {

struct VerifyParams {
  int k = 2;
  int trials = 20;
  std::uint64_t seed = 1;
  int max_n = 8;
};

struct VerifyOutcome {
  StructureReport oracle_equivalence;
  StructureReport small_witness;
  StructureReport split_recovery;
  StructureReport accounting_checks;

  bool passed() const {
    return oracle_equivalence.ok() && small_witness.ok() && split_recovery.ok() &&
           accounting_checks.ok();
  }
};

/// Runs the solver-vs-oracle equivalence suite and the structural suites over
/// a seeded stream of random instances. Fully deterministic in the params:
/// no timing enters the outcome.
VerifyOutcome run_verify(const VerifyParams& params);

/// Deterministic JSON rendering of a verify run (same params, same bytes).
std::string verify_report_json(const VerifyParams& params, const VerifyOutcome& outcome);

}  // namespace hkcut
