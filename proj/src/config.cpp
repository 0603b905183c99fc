#include "brw/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "brw/rng.hpp"

namespace brw {

namespace {

std::string trim(std::string s) {
  auto issp = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  std::size_t b = 0, e = s.size();
  while (b < e && issp(s[b])) ++b;
  while (e > b && issp(s[e - 1])) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      cur = trim(cur);
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  cur = trim(cur);
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i];
  }
  return out;
}

template <class T>
std::string join_num(const std::vector<T>& v) {
  std::string out;
  char buf[64];
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    if constexpr (std::is_floating_point_v<T>)
      std::snprintf(buf, sizeof buf, "%.17g", static_cast<double>(v[i]));
    else
      std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(v[i]));
    out += buf;
  }
  return out;
}

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double to_double(const std::string& s) {
  try {
    return std::stod(s);
  } catch (...) {
    throw std::invalid_argument("not a number: " + s);
  }
}

long long to_int(const std::string& s) {
  try {
    return std::stoll(s);
  } catch (...) {
    throw std::invalid_argument("not an integer: " + s);
  }
}

bool to_bool(const std::string& s) {
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw std::invalid_argument("not a boolean: " + s);
}

}  // namespace

std::vector<std::pair<int, double>> parse_law_atoms(const std::string& law) {
  std::vector<std::pair<int, double>> atoms;
  for (const std::string& part : split(law, ',')) {
    auto kv = split(part, ':');
    if (kv.size() != 2) throw std::invalid_argument("bad offspring atom: " + part);
    atoms.emplace_back(static_cast<int>(to_int(kv[0])), to_double(kv[1]));
  }
  return atoms;
}

std::string ExperimentConfig::serialize() const {
  std::ostringstream os;
  os << "[group]\n";
  os << "preset = " << preset << "\n";
  if (!generators.empty()) os << "generators = " << join(generators) << "\n";
  if (!relators.empty()) os << "relators = " << join(relators) << "\n";
  if (!planar_order.empty()) os << "planar_order = " << join(planar_order) << "\n";
  os << "ball_radius = " << ball_radius << "\n";
  os << "\n[walk]\n";
  os << "identity_mass = " << fmt_double(identity_mass) << "\n";
  os << "green_r = " << fmt_double(green_r) << "\n";
  os << "green_truncation = " << green_truncation << "\n";
  os << "decay_d_min = " << decay_d_min << "\n";
  os << "decay_d_max = " << decay_d_max << "\n";
  os << "r_grid_points = " << r_grid_points << "\n";
  os << "ancona_pairs = " << ancona_pairs << "\n";
  os << "ancona_y_per_pair = " << ancona_y_per_pair << "\n";
  os << "\n[branching]\n";
  os << "law = " << law << "\n";
  os << "flavor = " << flavor << "\n";
  os << "depth = " << depth << "\n";
  os << "population_cap = " << population_cap << "\n";
  os << "confine_to_ball = " << (confine_to_ball ? "true" : "false") << "\n";
  os << "\n[analysis]\n";
  os << "radii = " << join_num(radii) << "\n";
  os << "window = " << window << "\n";
  os << "horizon = " << horizon << "\n";
  os << "trifurcation_diameter = " << trifurcation_diameter << "\n";
  os << "trifurcation_budget = " << trifurcation_budget << "\n";
  os << "k_sweep = " << join_num(k_sweep) << "\n";
  os << "mtp_horizon = " << mtp_horizon << "\n";
  os << "target_radius = " << target_radius << "\n";
  os << "trailing_window = " << trailing_window << "\n";
  os << "\n[run]\n";
  os << "checks = " << join(checks) << "\n";
  os << "seed = " << seed << "\n";
  os << "runs = " << runs << "\n";
  os << "samples = " << samples << "\n";
  os << "jobs = " << jobs << "\n";
  os << "out = " << out_dir << "\n";
  os << "formats = " << join(formats) << "\n";
  os << "m_grid = " << join_num(m_grid) << "\n";
  os << "timestamps = " << (timestamps ? "true" : "false") << "\n";
  return os.str();
}

ExperimentConfig ExperimentConfig::parse_string(const std::string& text) {
  std::istringstream is(text);
  return parse(is);
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  return parse(in);
}

ExperimentConfig ExperimentConfig::parse(std::istream& in) {
  ExperimentConfig c;
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash_pos = line.find('#');
    if (hash_pos != std::string::npos) line = line.substr(0, hash_pos);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']') {
      section = line.substr(1, line.size() - 2);
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    const std::string qualified = section + "." + key;

    if (qualified == "group.preset") c.preset = value;
    else if (qualified == "group.generators") c.generators = split(value, ',');
    else if (qualified == "group.relators") c.relators = split(value, ',');
    else if (qualified == "group.planar_order") c.planar_order = split(value, ',');
    else if (qualified == "group.ball_radius") c.ball_radius = static_cast<int>(to_int(value));
    else if (qualified == "walk.identity_mass") c.identity_mass = to_double(value);
    else if (qualified == "walk.green_r") c.green_r = to_double(value);
    else if (qualified == "walk.green_truncation") c.green_truncation = static_cast<int>(to_int(value));
    else if (qualified == "walk.decay_d_min") c.decay_d_min = static_cast<int>(to_int(value));
    else if (qualified == "walk.decay_d_max") c.decay_d_max = static_cast<int>(to_int(value));
    else if (qualified == "walk.r_grid_points") c.r_grid_points = static_cast<int>(to_int(value));
    else if (qualified == "walk.ancona_pairs") c.ancona_pairs = static_cast<int>(to_int(value));
    else if (qualified == "walk.ancona_y_per_pair") c.ancona_y_per_pair = static_cast<int>(to_int(value));
    else if (qualified == "branching.law") c.law = value;
    else if (qualified == "branching.flavor") c.flavor = value;
    else if (qualified == "branching.depth") c.depth = static_cast<int>(to_int(value));
    else if (qualified == "branching.population_cap") c.population_cap = static_cast<std::uint64_t>(to_int(value));
    else if (qualified == "branching.confine_to_ball") c.confine_to_ball = to_bool(value);
    else if (qualified == "analysis.radii") {
      c.radii.clear();
      for (auto& s : split(value, ',')) c.radii.push_back(static_cast<int>(to_int(s)));
    } else if (qualified == "analysis.window") c.window = static_cast<int>(to_int(value));
    else if (qualified == "analysis.horizon") c.horizon = static_cast<int>(to_int(value));
    else if (qualified == "analysis.trifurcation_diameter") c.trifurcation_diameter = static_cast<int>(to_int(value));
    else if (qualified == "analysis.trifurcation_budget") c.trifurcation_budget = static_cast<std::uint64_t>(to_int(value));
    else if (qualified == "analysis.k_sweep") {
      c.k_sweep.clear();
      for (auto& s : split(value, ',')) c.k_sweep.push_back(static_cast<int>(to_int(s)));
    } else if (qualified == "analysis.mtp_horizon") c.mtp_horizon = static_cast<int>(to_int(value));
    else if (qualified == "analysis.target_radius") c.target_radius = static_cast<int>(to_int(value));
    else if (qualified == "analysis.trailing_window") c.trailing_window = static_cast<int>(to_int(value));
    else if (qualified == "run.checks") c.checks = split(value, ',');
    else if (qualified == "run.seed") c.seed = static_cast<std::uint64_t>(to_int(value));
    else if (qualified == "run.runs") c.runs = static_cast<int>(to_int(value));
    else if (qualified == "run.samples") c.samples = static_cast<std::uint64_t>(to_int(value));
    else if (qualified == "run.jobs") c.jobs = static_cast<int>(to_int(value));
    else if (qualified == "run.out") c.out_dir = value;
    else if (qualified == "run.formats") c.formats = split(value, ',');
    else if (qualified == "run.m_grid") {
      c.m_grid.clear();
      for (auto& s : split(value, ',')) c.m_grid.push_back(to_double(s));
    } else if (qualified == "run.timestamps") c.timestamps = to_bool(value);
    else
      throw std::invalid_argument("unknown config key: " + qualified);
  }
  return c;
}

void ExperimentConfig::validate() const {
  if (preset != "free_rank2" && preset != "surface_genus2" && preset != "custom")
    throw std::invalid_argument("unknown preset: " + preset);
  if (preset == "custom" && generators.empty())
    throw std::invalid_argument("custom preset needs generators");
  if (ball_radius < 0) throw std::invalid_argument("ball_radius must be nonnegative");
  if (identity_mass < 0.0 || identity_mass >= 1.0)
    throw std::invalid_argument("identity_mass must lie in [0,1)");
  if (flavor != "gw" && flavor != "ugw") throw std::invalid_argument("flavor must be gw or ugw");
  for (std::size_t i = 1; i < radii.size(); ++i)
    if (radii[i] <= radii[i - 1]) throw std::invalid_argument("radii must be strictly increasing");
  if (!radii.empty() && window > static_cast<int>(radii.size()))
    throw std::invalid_argument("window exceeds the radii schedule");
  if (depth < 1) throw std::invalid_argument("depth must be positive");
  static const char* known[] = {"ball", "rho",  "green", "decay",        "ancona", "brw",
                                "ends", "trifurcation", "mtp",   "prop32", "phase"};
  for (const auto& chk : checks) {
    bool ok = false;
    for (const char* k : known) ok = ok || chk == k;
    if (!ok) throw std::invalid_argument("unknown check: " + chk);
  }
}

std::uint64_t ExperimentConfig::hash() const {
  // execution facets (worker count, output directory, timestamp opt-in) do
  // not change the experiment; the hash covers the semantic configuration so
  // reruns with different --jobs produce byte-identical manifests
  ExperimentConfig semantic = *this;
  semantic.jobs = 0;
  semantic.out_dir.clear();
  semantic.timestamps = false;
  return fnv1a64(semantic.serialize());
}

}  // namespace brw
