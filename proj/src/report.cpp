#include "brw/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace brw {

std::string emit_file(const std::string& out_dir, const std::string& rel_path,
                      const std::string& contents, CheckResult& check) {
  std::filesystem::path full = std::filesystem::path(out_dir) / rel_path;
  std::filesystem::create_directories(full.parent_path());
  std::ofstream os(full, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + full.string());
  os << contents;
  check.files.push_back(rel_path);
  return rel_path;
}

std::string csv_cell(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace brw
