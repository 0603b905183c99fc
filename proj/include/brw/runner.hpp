#pragma once

#include "brw/config.hpp"
#include "brw/report.hpp"

namespace brw {

inline constexpr const char* k_version = "brw 0.1.0";

struct RunManifest {
  std::uint64_t config_hash = 0;
  std::string version;
  std::string timestamp;  // empty unless config.timestamps
  std::vector<CheckResult> checks;
  bool all_pass = true;

  Json to_json() const;
};

/// Execute the requested checks in dependency order, write one JSON report
/// per check plus the configured CSV/SVG artifacts and a manifest, and return
/// the manifest. A failing check is recorded and independent checks continue.
RunManifest run_scenario(const ExperimentConfig& config);

}  // namespace brw
