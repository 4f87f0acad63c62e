#pragma once

#include <map>
#include <string>

#include "scgl/dynamics.hpp"

// The experiment harness: every quantitative law checkable at desk scale,
// emitted as CSV tables with a JSON metadata header. Experiments are pure
// functions of (config, seed); re-runs reproduce table bodies byte for byte
// (volatile fields live only in the header).

namespace scgl {

struct ExperimentConfig {
  Params params;
  RunConfig run;

  std::vector<int> n_list{8, 16, 32, 64};
  std::vector<double> dt_list{1e-3, 5e-4, 2.5e-4};
  std::vector<std::array<int, 2>> jpairs{{1, 0}, {1, 1}, {2, 1}};
  int seeds = 32;
  uint64_t seed = 1;
  double horizon = 0.5;  // time horizon for object statistics
  int samples = 16;      // time samples for L^q_T norms
  int threads = 0;       // 0 = hardware concurrency
  bool force = false;
  std::string out_dir = "out";

  std::string serialize() const;                      // canonical sectioned text
  static ExperimentConfig parse(const std::string&);  // lossless round-trip
};

struct Table {
  std::string name;  // experiment tag, also the output file stem
  std::string law;   // machine-readable tag of the tested law
  std::map<std::string, double> stats;  // fitted slopes, medians, flags
  std::string config_echo;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::string to_csv(bool with_timestamp = true) const;
  // non-header lines only (determinism checks)
  std::string body() const;
};

void write_table(const Table& t, const std::string& out_dir);

Table cmd_sigma_law(const ExperimentConfig& cfg);
Table cmd_wick_convergence(const ExperimentConfig& cfg);
Table cmd_tails(const ExperimentConfig& cfg);
Table cmd_consistency(const ExperimentConfig& cfg);
Table cmd_gwp_monitor(const ExperimentConfig& cfg);
Table cmd_green_check(const ExperimentConfig& cfg);
Table cmd_weyl_check(const ExperimentConfig& cfg);
Table cmd_bernstein_check(const ExperimentConfig& cfg);
Table cmd_simulate(const ExperimentConfig& cfg);

// least-squares slope of y against x
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);
double median(std::vector<double> v);

}  // namespace scgl
