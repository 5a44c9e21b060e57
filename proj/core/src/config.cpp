#include "tubal/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "tubal/errors.hpp"

namespace tubal {

std::string to_string(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::phase: return "phase";
    case ExperimentKind::table: return "table";
    case ExperimentKind::image: return "image";
    case ExperimentKind::rip: return "rip";
    case ExperimentKind::budget: return "budget";
  }
  return "?";
}

ExperimentKind kind_from_string(const std::string& s) {
  if (s == "phase") return ExperimentKind::phase;
  if (s == "table") return ExperimentKind::table;
  if (s == "image") return ExperimentKind::image;
  if (s == "rip") return ExperimentKind::rip;
  if (s == "budget") return ExperimentKind::budget;
  throw InvalidConfig("unknown experiment kind: " + s);
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& s) {
  double v;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw InvalidConfig("bad numeric value: '" + s + "'");
  return v;
}

std::int64_t parse_int(const std::string& s) {
  std::int64_t v;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw InvalidConfig("bad integer value: '" + s + "'");
  return v;
}

std::uint64_t parse_uint(const std::string& s) {
  std::uint64_t v;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw InvalidConfig("bad unsigned value: '" + s + "'");
  return v;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::vector<double> parse_doubles(const std::string& s) {
  std::vector<double> out;
  for (const auto& t : split_ws(s)) out.push_back(parse_double(t));
  return out;
}

std::vector<std::int64_t> parse_ints(const std::string& s) {
  std::vector<std::int64_t> out;
  for (const auto& t : split_ws(s)) out.push_back(parse_int(t));
  return out;
}

bool parse_switch(const std::string& s) {
  if (s == "on" || s == "true" || s == "1") return true;
  if (s == "off" || s == "false" || s == "0") return false;
  throw InvalidConfig("expected on/off, got '" + s + "'");
}

template <typename T>
std::string join(const std::vector<T>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    if constexpr (std::is_same_v<T, double>)
      out += format_double(v[i]);
    else
      out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (trials < 1) throw InvalidConfig("trials must be >= 1");
  if (noise_sigma < 0.0) throw InvalidConfig("noise_sigma must be >= 0");
  if (samples < 1) throw InvalidConfig("samples must be >= 1");
  if (repetitions < 1) throw InvalidConfig("repetitions must be >= 1");
  if (dims.n1 < 1 || dims.n2 < 1 || dims.n3 < 1)
    throw InvalidConfig("dims must be positive");
  solver.validate();
  switch (kind) {
    case ExperimentKind::phase:
      if (sampling_rates.empty()) throw InvalidConfig("phase: sampling_rates empty");
      if (ranks.empty()) throw InvalidConfig("phase: ranks empty");
      break;
    case ExperimentKind::table:
      if (n_list.empty()) throw InvalidConfig("table: n_list empty");
      if (rho_list.empty()) throw InvalidConfig("table: rho_list empty");
      if (rank_fractions.empty()) throw InvalidConfig("table: rank_fractions empty");
      break;
    case ExperimentKind::image:
      if (image_path.empty()) throw InvalidConfig("image: image_path empty");
      if (m_grid.empty()) throw InvalidConfig("image: m_grid empty");
      break;
    case ExperimentKind::rip:
      if (m_grid.empty()) throw InvalidConfig("rip: m_grid empty");
      if (ranks.empty()) throw InvalidConfig("rip: ranks empty");
      break;
    case ExperimentKind::budget:
      if (ranks.empty()) throw InvalidConfig("budget: ranks empty");
      if (!(delta > 0.0) || delta > 1.0) throw InvalidConfig("budget: delta in (0,1]");
      if (!(epsilon > 0.0) || epsilon >= 1.0)
        throw InvalidConfig("budget: epsilon in (0,1)");
      if (!(c_const > 0.0)) throw InvalidConfig("budget: c_const > 0");
      break;
  }
}

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig cfg;
  std::istringstream in(text);
  std::string line;
  std::string section;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']') {
      section = trim(line.substr(1, line.size() - 2));
      if (section != "solver")
        throw InvalidConfig("unknown config section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InvalidConfig("expected 'key = value', got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));

    if (section == "solver") {
      if (key == "lambda") cfg.solver.lambda = parse_double(val);
      else if (key == "max_iters") cfg.solver.max_iters = static_cast<int>(parse_int(val));
      else if (key == "tol") cfg.solver.tol = parse_double(val);
      else if (key == "step_scale") cfg.solver.step_scale = parse_double(val);
      else if (key == "acceleration") cfg.solver.acceleration = parse_switch(val);
      else if (key == "continuation") cfg.solver.continuation = parse_switch(val);
      else if (key == "continuation_stages")
        cfg.solver.continuation_stages = static_cast<int>(parse_int(val));
      else throw InvalidConfig("unknown solver key: " + key);
      continue;
    }

    if (key == "kind") cfg.kind = kind_from_string(val);
    else if (key == "dims") {
      const auto d = parse_ints(val);
      if (d.size() != 3) throw InvalidConfig("dims needs three integers");
      cfg.dims = {d[0], d[1], d[2]};
    }
    else if (key == "ranks") cfg.ranks = parse_ints(val);
    else if (key == "distribution") cfg.distribution = distribution_from_string(val);
    else if (key == "sampling_rates") cfg.sampling_rates = parse_doubles(val);
    else if (key == "rho_list") cfg.rho_list = parse_doubles(val);
    else if (key == "m_grid") cfg.m_grid = parse_ints(val);
    else if (key == "n_list") cfg.n_list = parse_ints(val);
    else if (key == "rank_fractions") cfg.rank_fractions = parse_doubles(val);
    else if (key == "trials") cfg.trials = static_cast<int>(parse_int(val));
    else if (key == "noise_sigma") cfg.noise_sigma = parse_double(val);
    else if (key == "samples") cfg.samples = static_cast<int>(parse_int(val));
    else if (key == "repetitions") cfg.repetitions = static_cast<int>(parse_int(val));
    else if (key == "delta") cfg.delta = parse_double(val);
    else if (key == "epsilon") cfg.epsilon = parse_double(val);
    else if (key == "c_const") cfg.c_const = parse_double(val);
    else if (key == "master_seed") cfg.master_seed = parse_uint(val);
    else if (key == "output_path") cfg.output_path = val;
    else if (key == "image_path") cfg.image_path = val;
    else if (key == "truncate_rank") cfg.truncate_rank = parse_int(val);
    else throw InvalidConfig("unknown config key: " + key);
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidConfig("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string emit_config(const ExperimentConfig& cfg) {
  std::ostringstream out;
  out << "kind = " << to_string(cfg.kind) << '\n';
  out << "dims = " << cfg.dims.n1 << ' ' << cfg.dims.n2 << ' ' << cfg.dims.n3 << '\n';
  out << "ranks = " << join(cfg.ranks) << '\n';
  out << "distribution = " << to_string(cfg.distribution) << '\n';
  if (!cfg.sampling_rates.empty())
    out << "sampling_rates = " << join(cfg.sampling_rates) << '\n';
  if (!cfg.rho_list.empty()) out << "rho_list = " << join(cfg.rho_list) << '\n';
  if (!cfg.m_grid.empty()) out << "m_grid = " << join(cfg.m_grid) << '\n';
  if (!cfg.n_list.empty()) out << "n_list = " << join(cfg.n_list) << '\n';
  out << "rank_fractions = " << join(cfg.rank_fractions) << '\n';
  out << "trials = " << cfg.trials << '\n';
  out << "noise_sigma = " << format_double(cfg.noise_sigma) << '\n';
  out << "samples = " << cfg.samples << '\n';
  out << "repetitions = " << cfg.repetitions << '\n';
  out << "delta = " << format_double(cfg.delta) << '\n';
  out << "epsilon = " << format_double(cfg.epsilon) << '\n';
  out << "c_const = " << format_double(cfg.c_const) << '\n';
  out << "master_seed = " << cfg.master_seed << '\n';
  out << "output_path = " << cfg.output_path << '\n';
  if (!cfg.image_path.empty()) out << "image_path = " << cfg.image_path << '\n';
  out << "truncate_rank = " << cfg.truncate_rank << '\n';
  out << "\n[solver]\n";
  out << "lambda = " << format_double(cfg.solver.lambda) << '\n';
  out << "max_iters = " << cfg.solver.max_iters << '\n';
  out << "tol = " << format_double(cfg.solver.tol) << '\n';
  out << "step_scale = " << format_double(cfg.solver.step_scale) << '\n';
  out << "acceleration = " << (cfg.solver.acceleration ? "on" : "off") << '\n';
  out << "continuation = " << (cfg.solver.continuation ? "on" : "off") << '\n';
  out << "continuation_stages = " << cfg.solver.continuation_stages << '\n';
  return out.str();
}

}  // namespace tubal
