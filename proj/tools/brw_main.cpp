#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "brw/runner.hpp"

namespace {

const std::vector<std::string> k_all_checks = {"ball", "rho",          "green", "decay",
                                               "ancona", "brw",        "ends",  "trifurcation",
                                               "mtp",   "prop32",      "phase"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"branching random walks on planar hyperbolic Cayley graphs"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::string preset;
  std::string format;
  long long seed = -1;
  int jobs = -1;
  int radius = -1;
  int depth = -1;
  int runs = -1;
  long long samples = -1;
  std::string law;
  bool timestamps = false;

  app.add_option("--config", config_path, "configuration file (INI sections: [group] [walk] [branching] [analysis] [run])");
  app.add_option("--seed", seed, "master seed");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--jobs", jobs, "worker threads (0 = library default)");
  app.add_option("--format", format, "comma-separated output formats: json,csv,svg");
  app.add_option("--preset", preset, "group preset: free_rank2 | surface_genus2 | custom");
  app.add_option("--radius", radius, "ball radius");
  app.add_option("--depth", depth, "branching depth");
  app.add_option("--runs", runs, "ensemble size");
  app.add_option("--samples", samples, "sample count for sampling checks");
  app.add_option("--law", law, "offspring law, e.g. 1:0.5,2:0.5 or mean:1.3");
  app.add_flag("--timestamps", timestamps, "include wall-clock timestamps (breaks byte reproducibility)");

  for (const auto& name : k_all_checks)
    app.add_subcommand(name, "run the " + name + " check");
  app.add_subcommand("all", "run every check");

  CLI11_PARSE(app, argc, argv);

  brw::ExperimentConfig config;
  try {
    if (!config_path.empty()) config = brw::ExperimentConfig::load(config_path);
    auto* sub = app.get_subcommands().front();
    if (sub->get_name() == "all")
      config.checks = k_all_checks;
    else
      config.checks = {sub->get_name()};
    if (seed >= 0) config.seed = static_cast<std::uint64_t>(seed);
    if (!out_dir.empty()) config.out_dir = out_dir;
    if (jobs >= 0) config.jobs = jobs;
    if (!preset.empty()) config.preset = preset;
    if (radius >= 0) config.ball_radius = radius;
    if (depth >= 0) config.depth = depth;
    if (runs >= 0) config.runs = runs;
    if (samples >= 0) config.samples = static_cast<std::uint64_t>(samples);
    if (!law.empty()) config.law = law;
    if (timestamps) config.timestamps = true;
    if (!format.empty()) {
      config.formats.clear();
      std::string cur;
      for (char c : format + ",") {
        if (c == ',') {
          if (!cur.empty()) config.formats.push_back(cur);
          cur.clear();
        } else {
          cur += c;
        }
      }
    }

    auto manifest = brw::run_scenario(config);
    for (const auto& check : manifest.checks)
      std::printf("%-14s %s%s\n", check.name.c_str(), check.pass ? "PASS" : "FAIL",
                  check.error.empty() ? "" : ("  (" + check.error + ")").c_str());
    std::printf("manifest: %s/manifest.json\n", config.out_dir.c_str());
    return manifest.all_pass ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
