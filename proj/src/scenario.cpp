#include "wecfarm/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace wecfarm {

namespace {

constexpr double kGravity = 9.81;  // m/s^2

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Next non-comment, non-blank line.
bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    return true;
  }
  return false;
}

std::vector<double> parse_numbers(const std::string& text, const std::string& what) {
  std::istringstream ss(text);
  std::vector<double> out;
  double v;
  while (ss >> v) out.push_back(v);
  std::string rest;
  if (ss.clear(), ss >> rest) throw scenario_error("bad number in " + what + ": " + rest);
  return out;
}

}  // namespace

double wavenumber(double omega) {
  if (!(omega > 0.0)) throw scenario_error("wavenumber requires omega > 0");
  return omega * omega / kGravity;
}

WaveScenario WaveScenario::monochromatic(double omega, double theta_deg, double amplitude) {
  WaveScenario s;
  s.name = "mono";
  s.directions_deg = Eigen::VectorXd::Constant(1, theta_deg);
  s.frequencies = Eigen::VectorXd::Constant(1, omega);
  s.weights = Eigen::MatrixXd::Constant(1, 1, 1.0);
  s.amplitude = amplitude;
  validate_scenario(s);
  return s;
}

void validate_scenario(WaveScenario& s) {
  const auto nd = s.directions_deg.size();
  const auto nf = s.frequencies.size();
  if (nd < 1 || nf < 1) throw scenario_error("scenario needs at least one direction and one frequency");
  if (s.weights.rows() != nd || s.weights.cols() != nf)
    throw scenario_error("weight table shape does not match axes");
  if (!std::isfinite(s.amplitude) || s.amplitude <= 0.0)
    throw scenario_error("amplitude must be positive");

  for (Eigen::Index i = 0; i < nd; ++i) {
    const double d = s.directions_deg[i];
    if (!(d >= 0.0 && d < 360.0)) throw scenario_error("direction out of [0, 360)");
    if (i > 0 && !(d > s.directions_deg[i - 1])) throw scenario_error("directions not strictly increasing");
  }
  for (Eigen::Index i = 0; i < nf; ++i) {
    const double w = s.frequencies[i];
    if (!(w > 0.0)) throw scenario_error("frequencies must be positive");
    if (i > 0 && !(w > s.frequencies[i - 1])) throw scenario_error("frequencies not strictly increasing");
  }

  double sum = 0.0;
  for (Eigen::Index i = 0; i < nd; ++i)
    for (Eigen::Index j = 0; j < nf; ++j) {
      const double w = s.weights(i, j);
      if (!(w >= 0.0) || !std::isfinite(w)) throw scenario_error("weights must be finite and nonnegative");
      sum += w;
    }
  if (std::fabs(sum - 1.0) > 1e-6)
    throw scenario_error("weights sum to " + format_full(sum) + ", expected 1 within 1e-6");
  if (sum != 1.0) s.weights /= sum;
}

WaveScenario parse_scenario(std::istream& in) {
  WaveScenario s;
  std::string line;

  if (!next_content_line(in, line)) throw scenario_error("empty scenario file");
  {
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag != "scenario") throw scenario_error("expected 'scenario <name> amplitude=<float>' header");
    if (!(ss >> s.name)) throw scenario_error("scenario header missing name");
    std::string field;
    while (ss >> field) {
      if (field.rfind("amplitude=", 0) == 0) {
        try {
          s.amplitude = std::stod(field.substr(10));
        } catch (const std::exception&) {
          throw scenario_error("bad amplitude value: " + field);
        }
      } else {
        throw scenario_error("unknown header field: " + field);
      }
    }
  }

  if (!next_content_line(in, line)) throw scenario_error("missing directions line");
  if (line.rfind("directions:", 0) != 0) throw scenario_error("expected 'directions:' line");
  const auto dirs = parse_numbers(line.substr(11), "directions");
  if (!next_content_line(in, line)) throw scenario_error("missing frequencies line");
  if (line.rfind("frequencies:", 0) != 0) throw scenario_error("expected 'frequencies:' line");
  const auto freqs = parse_numbers(line.substr(12), "frequencies");

  s.directions_deg = Eigen::Map<const Eigen::VectorXd>(dirs.data(), static_cast<Eigen::Index>(dirs.size()));
  s.frequencies = Eigen::Map<const Eigen::VectorXd>(freqs.data(), static_cast<Eigen::Index>(freqs.size()));
  s.weights.resize(s.directions_deg.size(), s.frequencies.size());

  for (Eigen::Index i = 0; i < s.directions_deg.size(); ++i) {
    if (!next_content_line(in, line))
      throw scenario_error("missing weight row " + std::to_string(i + 1));
    const auto row = parse_numbers(line, "weight row " + std::to_string(i + 1));
    if (static_cast<Eigen::Index>(row.size()) != s.frequencies.size())
      throw scenario_error("weight row " + std::to_string(i + 1) + " has " + std::to_string(row.size()) +
                           " entries, expected " + std::to_string(s.frequencies.size()));
    for (Eigen::Index j = 0; j < s.frequencies.size(); ++j) s.weights(i, j) = row[static_cast<size_t>(j)];
  }
  if (next_content_line(in, line)) throw scenario_error("trailing content after weight table");

  validate_scenario(s);
  return s;
}

WaveScenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw scenario_error("cannot open scenario file: " + path);
  try {
    return parse_scenario(in);
  } catch (const scenario_error& e) {
    throw scenario_error(path + ": " + e.what());
  }
}

void write_scenario(std::ostream& out, const WaveScenario& s) {
  if (s.name.find_first_of(" \t") != std::string::npos)
    throw scenario_error("scenario name must not contain whitespace");
  out << "scenario " << s.name << " amplitude=" << format_full(s.amplitude) << "\n";
  out << "directions:";
  for (Eigen::Index i = 0; i < s.directions_deg.size(); ++i) out << ' ' << format_full(s.directions_deg[i]);
  out << "\nfrequencies:";
  for (Eigen::Index j = 0; j < s.frequencies.size(); ++j) out << ' ' << format_full(s.frequencies[j]);
  out << '\n';
  for (Eigen::Index i = 0; i < s.directions_deg.size(); ++i) {
    for (Eigen::Index j = 0; j < s.frequencies.size(); ++j) {
      if (j > 0) out << ' ';
      out << format_full(s.weights(i, j));
    }
    out << '\n';
  }
}

void write_scenario_file(const std::string& path, const WaveScenario& s) {
  std::ofstream out(path);
  if (!out) throw scenario_error("cannot write scenario file: " + path);
  write_scenario(out, s);
}

}  // namespace wecfarm
