#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "polyafreq/growth.hpp"
#include "polyafreq/pipelines.hpp"
#include "polyafreq/proximate_order.hpp"
#include "polyafreq/sequence.hpp"
#include "polyafreq/verify.hpp"

namespace polyafreq {

inline constexpr const char* kToolVersion = "0.1.0";

/// Coefficient files are JSON lines: {"k":int,"v":"p/q"} for exact values,
/// {"k":int,"log10_abs":float,"sign":1|-1} for log-scale values.
void write_coefficients(const std::string& path, const CoefficientSequence& s,
                        std::int64_t count);
/// Exact prefix followed by log-scale values from exact_upto to count-1.
void write_coefficients_mixed(const std::string& path, const CoefficientSequence& exact,
                              std::int64_t exact_upto, const CoefficientSequence& log_seq,
                              std::int64_t count);
CoefficientSequence read_coefficients(const std::string& path);

nlohmann::json po_to_json(const ProximateOrder& po);
ProximateOrder po_from_json(const nlohmann::json& j);

nlohmann::json verdict_to_json(const PFVerdict& v);
nlohmann::json estimate_to_json(const GrowthEstimate& g);
nlohmann::json report_to_json(const PipelineReport& r);

/// FNV-1a hash of the canonical run-configuration string; embedded in every
/// output for reproducibility.
std::string config_hash(const nlohmann::json& config);

/// Wraps a payload with the config hash and tool version.
nlohmann::json with_envelope(nlohmann::json payload, const nlohmann::json& config);

}  // namespace polyafreq
