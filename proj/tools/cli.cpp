#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bosegas/backends.hpp"
#include "bosegas/combinatorics.hpp"
#include "bosegas/physical.hpp"
#include "bosegas/thermo.hpp"

namespace bosegas::cli {

namespace {

struct RunConfig {
  int n = 0;
  double rho_min = 0.5;
  double rho_max = 3.5;
  int points = 300;
  std::string spacing = "linear";
  std::string backend = "auto";
  std::string output;
  unsigned threads = 1;

  int coarse_points = 200;
  double search_tolerance = 1e-6;

  std::optional<double> q1;
  std::optional<double> rho_lambda3;
  double equivalence_tolerance = 1e-9;

  double mass = 0.0;
  double temperature = 0.0;
  double volume = 0.0;

  int cap = kDefaultCycleTypeCap;
};

/// Thrown for flag combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BackendPolicy policy_of(const RunConfig& cfg) {
  if (auto p = parse_backend_policy(cfg.backend)) return *p;
  throw UsageError("unknown backend '" + cfg.backend +
                   "' (expected auto, matsubara, landsberg or park_kim)");
}

std::string row(std::initializer_list<std::string> fields) {
  std::string line;
  for (const std::string& f : fields) {
    if (!line.empty()) line += ',';
    line += f;
  }
  line += '\n';
  return line;
}

std::string cmd_curve(const RunConfig& cfg) {
  GridSpec grid{cfg.rho_min, cfg.rho_max, cfg.points,
                cfg.spacing == "log" ? GridSpacing::log : GridSpacing::linear};
  if (cfg.spacing != "log" && cfg.spacing != "linear") {
    throw UsageError("--spacing must be linear or log");
  }
  const HeatCurve curve = heat_curve(cfg.n, grid, policy_of(cfg), cfg.threads);

  std::string csv = "q1,rho_lambda3,c_over_nkb,backend\n";
  for (const HeatSample& s : curve.samples) {
    csv += row({format_number(s.q1), format_number(s.rho_lambda3), format_number(s.c_over_nkb),
                std::string(to_string(s.backend))});
  }
  return csv;
}

std::string cmd_critical(const RunConfig& cfg) {
  CriticalSearchConfig search;
  search.rho_lambda3_min = cfg.rho_min;
  search.rho_lambda3_max = cfg.rho_max;
  search.coarse_points = cfg.coarse_points;
  search.tolerance = cfg.search_tolerance;
  search.policy = policy_of(cfg);
  search.threads = cfg.threads;

  const CriticalPoint cp = critical_point(cfg.n, search);
  return "n,rho_lambda3_c,c_max_over_nkb,q1_c,tolerance\n" +
         row({std::to_string(cp.n), format_number(cp.rho_lambda3_c),
              format_number(cp.c_max_over_nkb), format_number(cp.q1_c),
              format_number(cp.search_tolerance)});
}

std::string cmd_compare(const RunConfig& cfg, std::ostream& err, int& status) {
  if (cfg.q1.has_value() == cfg.rho_lambda3.has_value()) {
    throw UsageError("compare needs exactly one of --q1 or --rho-lambda3");
  }
  const Q1Value q1(cfg.q1 ? *cfg.q1 : cfg.n / *cfg.rho_lambda3);

  std::vector<ZEval> evals;
  if (cfg.n <= cfg.cap) evals.push_back(eval_matsubara(cfg.n, q1, cfg.cap));
  evals.push_back(eval_landsberg(cfg.n, q1));
  evals.push_back(eval_park_kim(cfg.n, q1));

  double deviation = 0.0;
  for (std::size_t i = 0; i < evals.size(); ++i) {
    for (std::size_t j = i + 1; j < evals.size(); ++j) {
      deviation = std::max(deviation, max_relative_deviation(evals[i], evals[j]));
    }
  }

  std::string csv = "backend,log_z,ratio1,ratio2,c_over_nkb,max_rel_deviation\n";
  for (const ZEval& z : evals) {
    csv += row({std::string(to_string(z.backend)), format_number(z.log_z), format_number(z.ratio1),
                format_number(z.ratio2), format_number(specific_heat(z)),
                format_number(deviation)});
  }
  if (deviation > cfg.equivalence_tolerance) {
    err << "bosegas compare: backends disagree at n = " << cfg.n << ", q1 = "
        << format_number(q1.value()) << ": max relative deviation " << format_number(deviation)
        << " exceeds " << format_number(cfg.equivalence_tolerance) << '\n';
    status = kNumericFailure;
  }
  return csv;
}

std::string cmd_physical(const RunConfig& cfg) {
  const PhysicalParams params(cfg.mass, cfg.temperature, cfg.volume);
  return "lambda_m,q1\n" + row({format_number(thermal_wavelength(params)),
                                format_number(q1_from_physical(params).value())});
}

std::string cmd_partitions(const RunConfig& cfg) {
  std::string csv = "parts,g,count,cj_over_nfact\n";
  for (const CycleType& ct : enumerate_cycle_types(cfg.n, cfg.cap)) {
    std::string parts, mult;
    for (const Part& p : ct.parts()) {
      if (!parts.empty()) {
        parts += ';';
        mult += ';';
      }
      parts += std::to_string(p.size);
      mult += std::to_string(p.multiplicity);
    }
    const MatsubaraCoefficient c = matsubara_coefficient(ct);
    csv += row({parts, mult, c.cycle_count.str(), format_number(std::exp(c.normalized_log))});
  }
  return csv;
}

void emit(const RunConfig& cfg, const std::string& csv, std::ostream& out) {
  if (cfg.output.empty() || cfg.output == "-") {
    out << csv;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + cfg.output);
  file << csv;
}

}  // namespace

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Canonical-ensemble thermodynamics of the ideal Bose gas", "bosegas"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool backend) {
    sub->add_option("--n", cfg.n, "Particle number")->required()->check(CLI::PositiveNumber);
    sub->add_option("-o,--output", cfg.output, "Write CSV here instead of standard output");
    if (backend) {
      sub->add_option("--backend", cfg.backend, "auto, matsubara, landsberg or park_kim")
          ->capture_default_str();
      sub->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)")
          ->capture_default_str();
    }
  };

  CLI::App* curve = app.add_subcommand("curve", "Specific heat over a rho*Lambda^3 grid");
  add_common(curve, true);
  curve->add_option("--min", cfg.rho_min, "Smallest rho*Lambda^3")->capture_default_str();
  curve->add_option("--max", cfg.rho_max, "Largest rho*Lambda^3")->capture_default_str();
  curve->add_option("--points", cfg.points, "Grid size")->capture_default_str();
  curve->add_option("--spacing", cfg.spacing, "linear or log")->capture_default_str();

  CLI::App* critical = app.add_subcommand("critical", "Locate the specific-heat maximum");
  add_common(critical, true);
  critical->add_option("--min", cfg.rho_min, "Bracket low end")->capture_default_str();
  critical->add_option("--max", cfg.rho_max, "Bracket high end")->capture_default_str();
  critical->add_option("--coarse-points", cfg.coarse_points, "Coarse scan size")
      ->capture_default_str();
  critical->add_option("--tol", cfg.search_tolerance, "Final bracket width in rho*Lambda^3")
      ->capture_default_str();

  CLI::App* compare = app.add_subcommand("compare", "Evaluate every applicable backend");
  add_common(compare, false);
  compare->add_option("--q1", cfg.q1, "Single-particle partition function");
  compare->add_option("--rho-lambda3", cfg.rho_lambda3, "Phase-space density; q1 = n / value");
  compare->add_option("--tol", cfg.equivalence_tolerance, "Allowed relative deviation")
      ->capture_default_str();
  compare->add_option("--cap", cfg.cap, "Cycle-type cap for the matsubara backend")
      ->capture_default_str();

  CLI::App* physical = app.add_subcommand("physical", "Thermal wavelength and Q1 from SI inputs");
  physical->add_option("--mass", cfg.mass, "Particle mass [kg]")->required();
  physical->add_option("--temperature", cfg.temperature, "Temperature [K]")->required();
  physical->add_option("--volume", cfg.volume, "Volume [m^3]")->required();
  physical->add_option("-o,--output", cfg.output, "Write CSV here instead of standard output");

  CLI::App* partitions = app.add_subcommand("partitions", "Dump cycle types of n as CSV");
  add_common(partitions, false);
  partitions->add_option("--cap", cfg.cap, "Largest n accepted")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    int status = kSuccess;
    std::string csv;
    if (name == "curve") {
      csv = cmd_curve(cfg);
    } else if (name == "critical") {
      csv = cmd_critical(cfg);
    } else if (name == "compare") {
      csv = cmd_compare(cfg, err, status);
    } else if (name == "physical") {
      csv = cmd_physical(cfg);
    } else {
      csv = cmd_partitions(cfg);
    }
    emit(cfg, csv, out);
    return status;
  } catch (const UsageError& e) {
    err << "bosegas " << name << ": " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "bosegas " << name << ": " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "bosegas " << name << ": " << e.what() << '\n';
    return kNumericFailure;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"bosegas"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace bosegas::cli
