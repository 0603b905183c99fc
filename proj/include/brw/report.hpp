#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace brw {

using Json = nlohmann::ordered_json;

/// One executed check: verdict plus a JSON payload and the files it emitted.
struct CheckResult {
  std::string name;
  bool pass = false;
  bool diagnostic = false;  // diagnostic checks never fail the run
  std::string error;        // nonempty when the check aborted
  Json payload;
  std::vector<std::string> files;  // paths relative to the output directory
};

/// Write text to a file below the output directory, creating it as needed;
/// returns the relative path and registers it on the check.
std::string emit_file(const std::string& out_dir, const std::string& rel_path,
                      const std::string& contents, CheckResult& check);

std::string csv_cell(double x);

}  // namespace brw
