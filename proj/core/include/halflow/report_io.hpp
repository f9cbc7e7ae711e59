#ifndef HALFLOW_REPORT_IO_HPP
#define HALFLOW_REPORT_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "halflow/flow.hpp"
#include "halflow/lab.hpp"

namespace halflow {

/// FNV-1a 64-bit digest, used to fingerprint configs in manifests.
uint64_t fnv1a64(const std::string& data);

/// Writes to a temporary file in the same directory, then renames into
/// place, so readers never observe a partial file.
void atomic_write(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

/// JSON serialization of a ratio report (name, params, seed, per-sample
/// table, verdict).
std::string ratio_report_json(const RatioReport& rep, uint64_t seed,
                              const std::string& params);

/// CSV with header t,energy,dissipation,sphere_drift,orth_residual,
/// harmonic_residual,eps_R.
std::string diagnostics_csv(const std::vector<DiagnosticsRecord>& records);

/// JSON snapshot list: grid size, components, node values per snapshot.
std::string snapshots_json(const std::vector<Snapshot>& snapshots);

/// One line per report: name,verdict,max_ratio,violations,samples.
std::string summary_csv(const std::vector<RatioReport>& reports);

} // namespace halflow

#endif
