// Command-line front end. Exit status: 0 on success, 2 on usage errors,
// 3 when the library rejects the data.

#include "sphere/analysis.hpp"
#include "sphere/catalog.hpp"
#include "sphere/energy.hpp"
#include "sphere/error.hpp"
#include "sphere/io.hpp"
#include "sphere/search.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <iterator>
#include <map>
#include <string>
#include <vector>

using namespace sphere;

namespace {

constexpr int kUsageError = 2;
constexpr int kDataError = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  return read_text(path);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") std::cout << text;
  else write_text(text, path);
}

std::map<std::string, double> parse_params(const std::vector<std::string>& items) {
  std::map<std::string, double> out;
  for (const std::string& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects key=value, got '" + item + "'");
    try {
      std::size_t used = 0;
      const double v = std::stod(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
      out[item.substr(0, eq)] = v;
    } catch (const std::logic_error&) {
      throw UsageError("--param value is not a number in '" + item + "'");
    }
  }
  return out;
}

PotentialSpec parse_potential(const std::string& text) {
  try {
    return PotentialSpec::parse(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy minimization and analysis of point configurations on spheres"};
  app.require_subcommand(1);
  bool full = false;
  app.add_flag("--full", full, "print 17 significant digits instead of 12 decimals");

  // build
  auto* build = app.add_subcommand("build", "write a catalog configuration");
  std::string entry;
  std::vector<std::string> params;
  std::string build_out;
  bool list = false;
  build->add_option("entry", entry, "catalog entry name");
  build->add_option("--param", params, "parameter override key=value");
  build->add_option("-o,--output", build_out, "output file (default stdout)");
  build->add_flag("--list", list, "list catalog entries");

  // search
  auto* search = app.add_subcommand("search", "random-restart search for local minima");
  int n = 0, N = 0, trials = 100, threads = 0;
  std::string potential_name = "harmonic";
  std::uint64_t seed = 1;
  double tolerance = default_search_settings().gradient_tolerance;
  std::string report_out, configs_dir;
  bool no_analyze = false;
  search->add_option("-n", n, "ambient dimension")->required();
  search->add_option("-N", N, "number of points")->required();
  search->add_option("--potential", potential_name, "harmonic, log, power:<s> or trunc:<k>");
  search->add_option("--trials", trials, "number of random starts");
  search->add_option("--seed", seed, "master seed");
  search->add_option("--tolerance", tolerance, "descent gradient tolerance before Newton polishing");
  search->add_option("--threads", threads, "worker threads (0 = OpenMP default)");
  search->add_option("-o,--output", report_out, "report file (default stdout)");
  search->add_option("--configs", configs_dir, "directory for representative configurations");
  search->add_flag("--no-analyze", no_analyze, "skip parameter counts and symmetry of the records");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "structure of a configuration");
  std::string analyze_in = "-";
  bool a_balanced = false, a_params = false, a_symmetry = false, a_design = false, a_spectrum = false,
       a_recognize = false;
  std::string analyze_potential = "harmonic";
  analyze->add_option("file", analyze_in, "configuration file (default stdin)");
  analyze->add_flag("--balanced", a_balanced, "balance test with a witness on failure");
  analyze->add_flag("--params", a_params, "parameter count");
  analyze->add_flag("--symmetry", a_symmetry, "automorphism group order, chirality and orbits");
  analyze->add_flag("--design", a_design, "spherical design strength");
  analyze->add_flag("--spectrum", a_spectrum, "distance classes");
  analyze->add_flag("--recognize", a_recognize, "exact form of the maximal cosine");
  analyze->add_option("--potential", analyze_potential, "potential for the reported energy");

  // screen
  auto* screen = app.add_subcommand("screen", "search (4-r)^k for configurations below a candidate");
  std::string screen_in;
  int kmax = 10, screen_trials = 200;
  std::uint64_t screen_seed = 1;
  screen->add_option("file", screen_in, "candidate configuration")->required();
  screen->add_option("--kmax", kmax);
  screen->add_option("--trials", screen_trials, "trials per k");
  screen->add_option("--seed", screen_seed);

  // compare
  auto* compare = app.add_subcommand("compare", "rank configurations by energy");
  std::vector<std::string> compare_in;
  std::string compare_potential = "harmonic";
  compare->add_option("files", compare_in)->required();
  compare->add_option("--potential", compare_potential);

  // project
  auto* project = app.add_subcommand("project", "SVG projection onto a random plane");
  std::string project_in, project_out;
  std::uint64_t project_seed = 1;
  project->add_option("file", project_in)->required();
  project->add_option("--seed", project_seed);
  project->add_option("-o,--output", project_out);

  // gaps
  auto* gaps = app.add_subcommand("gaps", "large gaps between energy levels");
  std::string gaps_in;
  double threshold = kDefaultGapThreshold;
  gaps->add_option("report", gaps_in, "search report or level table")->required();
  gaps->add_option("--threshold", threshold, "flag gaps larger than this multiple of the median");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  auto num = [&](double x) { return format_number(x, full); };

  try {
    if (*build) {
      if (list) {
        for (const CatalogEntry& e : catalog()) {
          std::cout << e.name << " n=" << e.n << " N=" << e.N;
          for (const auto& [k, v] : e.parameters) std::cout << " " << k << "=" << v;
          std::cout << "  " << e.rule << "\n";
        }
        return 0;
      }
      if (entry.empty()) throw UsageError("build needs an entry name (see build --list)");
      emit(format_config(build_catalog(entry, parse_params(params))), build_out);
    } else if (*search) {
      const PotentialSpec f = parse_potential(potential_name);
      DescentSettings settings = default_search_settings();
      settings.gradient_tolerance = tolerance;
      SearchOptions options;
      options.analyze = !no_analyze;
      options.threads = threads;
      const SearchReport report = run_search(n, N, f, trials, seed, scaled_descent_settings(f, settings), options);
      emit(format_report({report, full}), report_out);
      if (!configs_dir.empty()) {
        std::filesystem::create_directories(configs_dir);
        for (std::size_t i = 0; i < report.records.size(); ++i) {
          write_config(report.records[i].config, configs_dir + "/record_" + std::to_string(i) + ".conf");
        }
      }
    } else if (*analyze) {
      const PointConfig c = parse_config(read_input(analyze_in));
      const bool all = !(a_balanced || a_params || a_symmetry || a_design || a_spectrum || a_recognize);
      const PotentialSpec f = parse_potential(analyze_potential);
      std::cout << "n: " << c.dimension() << "\nN: " << c.size() << "\n";
      std::cout << "energy: " << num(energy(c, f)) << " (" << f.name() << ")\n";
      std::cout << "max_cosine: " << num(c.max_inner_product()) << "\n";
      if (all || a_balanced) {
        const BalanceResult b = is_balanced(c);
        std::cout << "balanced: " << yes_no(b.balanced) << "\n";
        if (!b.balanced) std::cout << "witness: point " << b.point << ", class " << b.distance_class << "\n";
      }
      if (all || a_params) std::cout << "parameters: " << parameter_count(c) << "\n";
      if (all || a_symmetry) {
        const SymmetryReport s = automorphism_group(c);
        std::cout << "order: " << s.order << ", chiral: " << (s.chiral ? yes_no(*s.chiral) : "n/a") << "\n";
        std::cout << "orbits: " << s.orbit_count << "\n";
      }
      if (all || a_design) std::cout << "design_strength: " << design_strength(c, 12) << "\n";
      if (all || a_spectrum) {
        const DistanceSpectrum s = distance_spectrum(c);
        std::cout << "distance_classes: " << s.classes.size() << (s.ambiguous ? " (ambiguous)" : "") << "\n";
        for (const DistanceClass& d : s.classes) {
          std::cout << "  cosine " << num(d.inner_product()) << " pairs " << d.multiplicity;
          if (a_recognize || all) {
            const ExactValue v = recognize_value(d.inner_product());
            if (v.kind != ExactValue::Kind::Unrecognized) std::cout << " = " << v.to_string();
          }
          std::cout << "\n";
        }
      }
      if (all || a_recognize) {
        const ExactValue v = recognize_value(c.max_inner_product());
        std::cout << "max_cosine_exact: " << v.to_string() << "\n";
      }
    } else if (*screen) {
      const PointConfig c = parse_config(read_input(screen_in));
      const ScreenReport r = universality_screen(c, kmax, screen_trials, screen_seed);
      for (const ScreenLevel& l : r.levels) {
        std::cout << "k " << l.k << " candidate " << num(l.candidate_energy) << " best "
                  << (l.found ? num(l.best_energy) : std::string("none")) << " " << to_string(l.verdict)
                  << " unconverged " << l.unconverged << "\n";
      }
      std::cout << "verdict: "
                << (r.counterexample ? "counterexample found" : "consistent with universal optimality") << "\n";
    } else if (*compare) {
      std::vector<PointConfig> configs;
      for (const std::string& path : compare_in) configs.push_back(read_config(path));
      const PotentialSpec f = parse_potential(compare_potential);
      int rank = 1;
      for (const RankedConfig& r : compare_candidates(configs, f)) {
        std::cout << rank++ << " " << num(r.energy) << " " << compare_in[r.index] << "\n";
      }
    } else if (*project) {
      emit(project_svg(read_config(project_in), project_seed), project_out);
    } else if (*gaps) {
      std::vector<double> levels;
      for (const LevelRow& row : parse_levels(read_input(gaps_in))) levels.push_back(row.energy);
      const GapSummary g = gap_statistics(levels, threshold);
      std::cout << "levels: " << g.levels.size() << "\nmedian_spacing: " << num(g.median_spacing)
                << "\nthreshold: " << num(g.threshold) << "\n";
      for (int i : g.flagged) {
        std::cout << "gap " << num(g.levels[i]) << " " << num(g.levels[i + 1]) << " ratio " << num(g.ratios[i]) << "\n";
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kDataError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDataError;
  }
  return 0;
}
