#pragma once

#include <Eigen/Dense>
#include <limits>
#include <stdexcept>
#include <string>

#include "wecfarm/layout.hpp"
#include "wecfarm/scenario.hpp"

namespace wecfarm {

struct hydro_error : std::runtime_error {
  hydro_error(const std::string& msg, double omega_, double theta_deg_)
      : std::runtime_error(msg), omega(omega_), theta_deg(theta_deg_) {}
  double omega;
  double theta_deg;
};

/// Heave-mode hydrodynamic surrogate for an array of identical submerged
/// absorbers. Per buoy: constant added mass, a radiation-damping spectrum
/// b(omega) peaked at peak_omega, J0-kernel damping coupling between
/// buoys, and plane-wave excitation phasing.
struct HydroModel {
  Eigen::VectorXd mass;       // kg, one entry per buoy
  double added_mass = 0.0;    // kg
  double damping_scale = 0.0; // N*s/m, single-buoy damping at peak_omega
  double peak_omega = 1.0;    // rad/s
  double excitation_scale = 0.0;  // N per meter of wave amplitude

  int size() const { return static_cast<int>(mass.size()); }

  /// Default desk-scale parameters; the PTO spring box nearly brackets the
  /// resonant stiffness (mass + added_mass) * peak_omega^2.
  static HydroModel standard(int buoys);

  /// Sub-model for one buoy of this model.
  HydroModel isolated(int buoy) const;
  /// Sub-model for the first `count` buoys (sequential placement).
  HydroModel head(int count) const;
};

/// Hydrodynamic coefficients of one (frequency, direction) sea state.
struct FrequencyCase {
  double omega = 0.0;      // rad/s
  double theta_deg = 0.0;  // propagation direction
  Eigen::MatrixXd added_mass;      // symmetric, kg
  Eigen::MatrixXd radiation;       // symmetric PSD, N*s/m
  Eigen::VectorXcd excitation;     // force phasors, N

  int size() const { return static_cast<int>(excitation.size()); }
};

struct EvaluationResult {
  double total_power = 0.0;            // W
  Eigen::VectorXd per_buoy_power;      // W, PTO-absorbed decomposition
  double q_factor = std::numeric_limits<double>::quiet_NaN();
  Eigen::MatrixXd cell_power;          // optional (direction x frequency) retention
};

/// Radiation damping spectrum b(omega): positive, peaked at peak_omega,
/// vanishing at 0 and infinity.
double radiation_damping(const HydroModel& model, double omega);

/// Builds the frequency case for a layout's positions. Coupling damping is
/// B_ij = b(omega) * J0(k d_ij); excitation phases follow the plane wave
/// exp(-j k (x cos(theta) + y sin(theta))).
FrequencyCase coefficients(const HydroModel& model, const PointTable& positions, double omega,
                           double theta_deg, double amplitude);

/// Solves the impedance system Z v = f_exc with
/// Z = j omega (M + A) + B + D - j K / omega. Residual is checked against
/// 1e-9 |f|; an ill-conditioned system raises hydro_error.
Eigen::VectorXcd solve_motion(const FrequencyCase& fcase, const HydroModel& model, const PointTable& ptos);

/// Absorbed power of one solved case: total from the excitation/radiation
/// balance, per-buoy from the PTO decomposition (1/2) D_i |v_i|^2. The two
/// agree to solver precision when v solves the case.
std::pair<double, Eigen::VectorXd> case_power(const FrequencyCase& fcase, const Eigen::VectorXcd& velocity,
                                              const PointTable& ptos);

struct PowerOptions {
  bool with_q = true;
  bool keep_cells = false;
};

/// Weighted mean power over all scenario cells, reduced in fixed
/// direction-major, frequency-minor order. q is the ratio of farm power to
/// the summed isolated single-buoy powers.
EvaluationResult farm_power(const HydroModel& model, const WaveScenario& scenario, const FarmLayout& layout,
                            const PowerOptions& options = {});

}  // namespace wecfarm
