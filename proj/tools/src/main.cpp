#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "config.hpp"
#include "tomatomp/error.hpp"
#include "tomatomp/parallel.hpp"

namespace {

struct Flag {
  const char* name;
  const char* help;
};

// Valued flags; every one maps to the key of the same name in --config files.
const std::vector<Flag> kFlags = {
    {"input", "input file"},
    {"kind", "points-csv | grid-image-csv | off-mesh | graph-csv"},
    {"fields-file", "per-vertex field table for off-mesh and graph-csv"},
    {"field", "field column name(s), comma separated"},
    {"coords", "coordinate columns of a points csv (default: the rest)"},
    {"connectivity", "grid connectivity, 4 or 8"},
    {"tau", "prominence threshold"},
    {"n-lines", "number of diagonal lines"},
    {"q", "matching exponent (>= 1, or inf)"},
    {"delta", "neighborhood radius for point clouds"},
    {"delta-max", "largest scale for graph-free clustering"},
    {"outlier-quantile", "fraction of vertices made robust"},
    {"tuple-size", "rank tuples of this size"},
    {"top-variance", "rank only the fields with the largest variances"},
    {"quantile", "level of the multi-parameter ranking criterion"},
    {"coss", "sum-of-squares | square-of-sum"},
    {"pair-score", "multiparameter | jaccard"},
    {"truth-labels", "vertex_id,label csv for ari/ami"},
    {"truth-ranking", "id,score csv for pearson/tophits"},
    {"top-k", "k for tophits"},
    {"a", "first diagram.json (match)"},
    {"b", "second diagram.json (match)"},
    {"d1", "lower edge of the highlighted prominence band"},
    {"d2", "upper edge of the highlighted prominence band"},
    {"out", "output directory"},
    {"seed", "recorded for reproducibility; no step is randomized"},
};

const std::vector<std::pair<const char*, const char*>> kCommands = {
    {"cluster", "single-parameter ToMATo"},
    {"cluster-mp", "multi-parameter clustering over all given fields"},
    {"graph-free", "clustering without a fixed neighborhood scale"},
    {"outlier-robust", "clustering robust to spike outliers"},
    {"rank", "rank fields or tuples of fields by cluster structure"},
    {"diagram", "persistence diagram of one field"},
    {"match", "q-distance and optimal matching between two diagrams"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-parameter topological mode clustering"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tomatomp 0.1.0");

  std::map<std::string, std::string> values;
  std::string config_path;
  bool rescale = false;
  std::size_t threads = 0;

  for (const auto& [name, help] : kCommands) {
    CLI::App* sub = app.add_subcommand(name, help);
    for (const Flag& f : kFlags) sub->add_option(std::string("--") + f.name, values[f.name], f.help);
    sub->add_flag("--rescale", rescale, "rescale every field onto [0, 1]");
    sub->add_option("--config", config_path, "key=value file; its settings override flags");
    sub->add_option("--threads", threads, "worker threads (default: TOMATOMP_THREADS or all cores)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  tomatomp::cli::RunConfig cfg;
  try {
    cfg.command = app.get_subcommands().front()->get_name();
    for (const auto& [key, value] : values) {
      if (app.get_subcommands().front()->count("--" + key) > 0) {
        tomatomp::cli::apply_setting(cfg, key, value);
      }
    }
    cfg.rescale = rescale;
    if (!config_path.empty()) tomatomp::cli::apply_config_file(cfg, config_path);
    if (threads > 0) tomatomp::set_thread_limit(threads);

    const tomatomp::cli::Outputs out = tomatomp::cli::run(cfg);
    tomatomp::cli::write_outputs(cfg.out, out);
    for (const auto& [name, content] : out) std::cout << "wrote " << name << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
