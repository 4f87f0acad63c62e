#include <charconv>
#include <sstream>

#include "scgl/experiments.hpp"

// Flat sectioned key/value config text (one nesting level):
//   [params]
//   alpha1 = 1.0
//   ...
// Lists are comma separated; order pairs use j1:j2.

namespace scgl {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

double to_double(const std::string& s) {
  size_t pos = 0;
  const double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("config: bad number '" + s + "'");
  return v;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

InitKind init_from_string(const std::string& s) {
  if (s == "zero") return InitKind::kZero;
  if (s == "given") return InitKind::kGiven;
  if (s == "rough") return InitKind::kRough;
  throw std::invalid_argument("config: init must be zero|given|rough");
}

const char* init_to_string(InitKind k) {
  switch (k) {
    case InitKind::kZero: return "zero";
    case InitKind::kGiven: return "given";
    case InitKind::kRough: return "rough";
  }
  return "zero";
}

}  // namespace

std::string ExperimentConfig::serialize() const {
  std::ostringstream os;
  os << "[params]\n";
  os << "alpha1 = " << fmt(params.alpha1) << "\n";
  os << "alpha2 = " << fmt(params.alpha2) << "\n";
  os << "beta1 = " << fmt(params.beta1) << "\n";
  os << "beta2 = " << fmt(params.beta2) << "\n";
  os << "gamma = " << fmt(params.gamma) << "\n";
  os << "m = " << params.m << "\n";
  os << "a1 = " << fmt(params.a.a1) << "\n";
  os << "a2 = " << fmt(params.a.a2) << "\n";
  os << "[run]\n";
  os << "N = " << run.N << "\n";
  os << "n_grid = " << run.n_grid << "\n";
  os << "dt = " << fmt(run.dt) << "\n";
  os << "t_final = " << fmt(run.t_final) << "\n";
  os << "init = " << init_to_string(run.init) << "\n";
  os << "init_norm = " << fmt(run.init_norm) << "\n";
  os << "s0 = " << fmt(run.s0) << "\n";
  os << "epsilon = " << fmt(run.epsilon) << "\n";
  os << "p = " << fmt(run.p_monitor) << "\n";
  os << "q = " << run.q_time << "\n";
  os << "noise_dt = " << fmt(run.noise_dt) << "\n";
  os << "record_stride = " << run.record_stride << "\n";
  os << "blowup_threshold = " << fmt(run.blowup_threshold) << "\n";
  os << "cn_constant = " << (run.cn_constant ? 1 : 0) << "\n";
  os << "[sweep]\n";
  os << "n_list = ";
  for (size_t i = 0; i < n_list.size(); ++i) os << (i ? "," : "") << n_list[i];
  os << "\ndt_list = ";
  for (size_t i = 0; i < dt_list.size(); ++i) os << (i ? "," : "") << fmt(dt_list[i]);
  os << "\njpairs = ";
  for (size_t i = 0; i < jpairs.size(); ++i)
    os << (i ? "," : "") << jpairs[i][0] << ":" << jpairs[i][1];
  os << "\nseeds = " << seeds << "\n";
  os << "seed = " << seed << "\n";
  os << "horizon = " << fmt(horizon) << "\n";
  os << "samples = " << samples << "\n";
  os << "[output]\n";
  os << "out_dir = " << out_dir << "\n";
  os << "threads = " << threads << "\n";
  os << "force = " << (force ? 1 : 0) << "\n";
  return os.str();
}

ExperimentConfig ExperimentConfig::parse(const std::string& text) {
  ExperimentConfig cfg;
  std::istringstream is(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    if (line.front() == '[' && line.back() == ']') {
      section = line.substr(1, line.size() - 2);
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: line " + std::to_string(lineno) + " has no '='");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    auto bad_key = [&]() {
      throw std::invalid_argument("config: unknown key '" + section + "." + key + "'");
    };
    if (section == "params") {
      if (key == "alpha1") cfg.params.alpha1 = to_double(val);
      else if (key == "alpha2") cfg.params.alpha2 = to_double(val);
      else if (key == "beta1") cfg.params.beta1 = to_double(val);
      else if (key == "beta2") cfg.params.beta2 = to_double(val);
      else if (key == "gamma") cfg.params.gamma = to_double(val);
      else if (key == "m") cfg.params.m = static_cast<int>(to_double(val));
      else if (key == "a1") cfg.params.a.a1 = to_double(val);
      else if (key == "a2") cfg.params.a.a2 = to_double(val);
      else bad_key();
    } else if (section == "run") {
      if (key == "N") cfg.run.N = static_cast<int>(to_double(val));
      else if (key == "n_grid") cfg.run.n_grid = static_cast<int>(to_double(val));
      else if (key == "dt") cfg.run.dt = to_double(val);
      else if (key == "t_final") cfg.run.t_final = to_double(val);
      else if (key == "init") cfg.run.init = init_from_string(val);
      else if (key == "init_norm") cfg.run.init_norm = to_double(val);
      else if (key == "s0") cfg.run.s0 = to_double(val);
      else if (key == "epsilon") cfg.run.epsilon = to_double(val);
      else if (key == "p") cfg.run.p_monitor = to_double(val);
      else if (key == "q") cfg.run.q_time = static_cast<int>(to_double(val));
      else if (key == "noise_dt") cfg.run.noise_dt = to_double(val);
      else if (key == "record_stride") cfg.run.record_stride = static_cast<int>(to_double(val));
      else if (key == "blowup_threshold") cfg.run.blowup_threshold = to_double(val);
      else if (key == "cn_constant") cfg.run.cn_constant = to_double(val) != 0.0;
      else bad_key();
    } else if (section == "sweep") {
      if (key == "n_list") {
        cfg.n_list.clear();
        for (const auto& s : split(val, ',')) cfg.n_list.push_back(static_cast<int>(to_double(s)));
      } else if (key == "dt_list") {
        cfg.dt_list.clear();
        for (const auto& s : split(val, ',')) cfg.dt_list.push_back(to_double(s));
      } else if (key == "jpairs") {
        cfg.jpairs.clear();
        for (const auto& s : split(val, ',')) {
          const auto parts = split(s, ':');
          if (parts.size() != 2) throw std::invalid_argument("config: jpairs entries are j1:j2");
          cfg.jpairs.push_back({static_cast<int>(to_double(parts[0])),
                                static_cast<int>(to_double(parts[1]))});
        }
      } else if (key == "seeds") cfg.seeds = static_cast<int>(to_double(val));
      else if (key == "seed") cfg.seed = static_cast<uint64_t>(to_double(val));
      else if (key == "horizon") cfg.horizon = to_double(val);
      else if (key == "samples") cfg.samples = static_cast<int>(to_double(val));
      else bad_key();
    } else if (section == "output") {
      if (key == "out_dir") cfg.out_dir = val;
      else if (key == "threads") cfg.threads = static_cast<int>(to_double(val));
      else if (key == "force") cfg.force = to_double(val) != 0.0;
      else bad_key();
    } else {
      throw std::invalid_argument("config: unknown section '" + section + "'");
    }
  }
  return cfg;
}

}  // namespace scgl
