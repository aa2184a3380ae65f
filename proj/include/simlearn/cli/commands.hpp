#pragma once

#include <iosfwd>

#include "simlearn/cli/config.hpp"

namespace simlearn {

/// Full experiment grid; artifacts under config.out.
/// Returns 0, or 1 if any trial breached its substitution error budget.
int cmd_run(const ExperimentConfig& config, std::ostream& out);

/// Property suites (detour properties, clustering invariants, cover lower
/// bound, uncorrelated-similarity band, rare-mass cases, ledger dedup).
/// Prints one PASS/FAIL line per suite; returns 0 only if all pass.
int cmd_verify(const ExperimentConfig& config, std::ostream& out);

/// Rare-mass estimates per group and delta; writes rare.json.
int cmd_rare(const ExperimentConfig& config, std::ostream& out);

/// Scale of the cross-group similarity over fresh pairs; writes
/// sigma_scan.json.
int cmd_sigma_scan(const ExperimentConfig& config, std::ostream& out);

/// Synthetic two-group dataset + schema, ingestible by real mode; writes
/// dataset.csv, schema.json and a ready real_config.json.
int cmd_gen_data(const ExperimentConfig& config, std::ostream& out);

}  // namespace simlearn
