#ifndef HALFLOW_TOOLS_VERIFY_HPP
#define HALFLOW_TOOLS_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "halflow/lab.hpp"

namespace halflow {

/// Runs the verification suite and writes one JSON artifact per check plus
/// summary.csv into out_dir (created if absent). fast: N <= 512; full:
/// acceptance-scale resolutions. Deterministic for a fixed seed.
std::vector<RatioReport> run_verify_suite(bool full, uint64_t seed,
                                          const std::string& out_dir);

} // namespace halflow

#endif
