#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace wecfarm {

struct scenario_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A site wave climate: a (direction x frequency) grid of probability
/// weights plus a single significant-amplitude scale. Immutable after
/// load; safe to share across threads.
struct WaveScenario {
  std::string name;
  Eigen::VectorXd directions_deg;  // strictly increasing, each in [0, 360)
  Eigen::VectorXd frequencies;     // rad/s, strictly increasing, > 0
  Eigen::MatrixXd weights;         // directions x frequencies, >= 0, sums to 1
  double amplitude = 1.0;          // meters

  Eigen::Index direction_count() const { return directions_deg.size(); }
  Eigen::Index frequency_count() const { return frequencies.size(); }
  Eigen::Index cell_count() const { return directions_deg.size() * frequencies.size(); }

  /// Single-cell climate, handy for tests and focused studies.
  static WaveScenario monochromatic(double omega, double theta_deg, double amplitude = 1.0);
};

/// Deep-water dispersion: k = omega^2 / g. Throws scenario_error for
/// omega <= 0.
double wavenumber(double omega);

/// Validates invariants and renormalizes the weight table. A weight sum
/// farther than 1e-6 from one is rejected rather than silently fixed.
void validate_scenario(WaveScenario& scenario);

WaveScenario parse_scenario(std::istream& in);
WaveScenario load_scenario(const std::string& path);

/// Full-precision text form; load_scenario(write_scenario(s)) == s.
void write_scenario(std::ostream& out, const WaveScenario& scenario);
void write_scenario_file(const std::string& path, const WaveScenario& scenario);

}  // namespace wecfarm
