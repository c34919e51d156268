#include "wecfarm/hydro.hpp"

#include <Eigen/LU>
#include <cmath>
#include <complex>

#include "wecfarm/bessel.hpp"

namespace wecfarm {

namespace {

constexpr double kDegToRad = M_PI / 180.0;
constexpr double kResidualTolerance = 1e-9;
constexpr double kConditionLimit = 1e12;

using Complex = std::complex<double>;

Eigen::MatrixXcd impedance(const FrequencyCase& fc, const HydroModel& model, const PointTable& ptos) {
  const int n = fc.size();
  Eigen::MatrixXcd z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      z(i, j) = Complex(fc.radiation(i, j),
                        fc.omega * (((i == j) ? model.mass[i] : 0.0) + fc.added_mass(i, j)));
  for (int i = 0; i < n; ++i) z(i, i) += Complex(ptos(i, 1), -ptos(i, 0) / fc.omega);
  return z;
}

Eigen::VectorXcd solve_case(const Eigen::MatrixXcd& z, const FrequencyCase& fc) {
  const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(z);
  const Eigen::VectorXcd v = lu.solve(fc.excitation);
  const double fnorm = fc.excitation.norm();
  const double residual = (z * v - fc.excitation).norm();
  if (!v.allFinite() || residual > kResidualTolerance * fnorm) {
    double cond = std::numeric_limits<double>::infinity();
    if (v.allFinite()) {
      const Eigen::MatrixXcd inv = lu.inverse();
      if (inv.allFinite())
        cond = z.cwiseAbs().rowwise().sum().maxCoeff() * inv.cwiseAbs().rowwise().sum().maxCoeff();
    }
    throw hydro_error("impedance solve failed (condition estimate " + std::to_string(cond) +
                          ", limit " + std::to_string(kConditionLimit) + ") at omega=" +
                          std::to_string(fc.omega) + " theta=" + std::to_string(fc.theta_deg),
                      fc.omega, fc.theta_deg);
  }
  return v;
}

}  // namespace

HydroModel HydroModel::standard(int buoys) {
  HydroModel m;
  m.mass = Eigen::VectorXd::Constant(buoys, 3.76e5);
  m.added_mass = 1.88e5;
  m.damping_scale = 9.0e4;
  m.peak_omega = 1.0;
  m.excitation_scale = 1.0e5;
  return m;
}

HydroModel HydroModel::isolated(int buoy) const {
  HydroModel m = *this;
  m.mass = Eigen::VectorXd::Constant(1, mass[buoy]);
  return m;
}

HydroModel HydroModel::head(int count) const {
  HydroModel m = *this;
  m.mass = mass.head(count).eval();
  return m;
}

double radiation_damping(const HydroModel& model, double omega) {
  const double r = omega / model.peak_omega;
  return model.damping_scale * r * r * r * std::exp(1.5 * (1.0 - r * r));
}

FrequencyCase coefficients(const HydroModel& model, const PointTable& positions, double omega,
                           double theta_deg, double amplitude) {
  const int n = static_cast<int>(positions.rows());
  if (!(omega > 0.0)) throw hydro_error("omega must be positive", omega, theta_deg);

  FrequencyCase fc;
  fc.omega = omega;
  fc.theta_deg = theta_deg;
  fc.added_mass = Eigen::MatrixXd::Zero(n, n);
  fc.added_mass.diagonal().setConstant(model.added_mass);

  const double b = radiation_damping(model, omega);
  const double k = wavenumber(omega);
  fc.radiation.resize(n, n);
  for (int i = 0; i < n; ++i) {
    fc.radiation(i, i) = b;
    for (int j = i + 1; j < n; ++j) {
      const double dx = positions(i, 0) - positions(j, 0);
      const double dy = positions(i, 1) - positions(j, 1);
      const double d = std::sqrt(dx * dx + dy * dy);
      if (d <= 0.0) throw hydro_error("coincident buoy positions", omega, theta_deg);
      fc.radiation(i, j) = fc.radiation(j, i) = b * bessel_j0(k * d);
    }
  }

  const double theta = theta_deg * kDegToRad;
  const double cos_t = std::cos(theta);
  const double sin_t = std::sin(theta);
  const double magnitude = amplitude * model.excitation_scale * std::sqrt(b / model.damping_scale);
  fc.excitation.resize(n);
  for (int i = 0; i < n; ++i) {
    const double phase = -k * (positions(i, 0) * cos_t + positions(i, 1) * sin_t);
    fc.excitation[i] = magnitude * Complex(std::cos(phase), std::sin(phase));
  }
  return fc;
}

Eigen::VectorXcd solve_motion(const FrequencyCase& fcase, const HydroModel& model, const PointTable& ptos) {
  return solve_case(impedance(fcase, model, ptos), fcase);
}

std::pair<double, Eigen::VectorXd> case_power(const FrequencyCase& fc, const Eigen::VectorXcd& v,
                                              const PointTable& ptos) {
  const Complex fh_v = fc.excitation.dot(v);
  const Complex vh_f = v.dot(fc.excitation);
  const Complex vh_bv = v.dot(fc.radiation * v);
  const double total = 0.25 * (fh_v + vh_f).real() - 0.5 * vh_bv.real();
  Eigen::VectorXd per_buoy(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) per_buoy[i] = 0.5 * ptos(i, 1) * std::norm(v[i]);
  return {total, per_buoy};
}

EvaluationResult farm_power(const HydroModel& model, const WaveScenario& scenario, const FarmLayout& layout,
                            const PowerOptions& options) {
  const int n = layout.size();
  if (model.size() != n) throw layout_error("hydro model size does not match layout");
  const auto nd = scenario.direction_count();
  const auto nf = scenario.frequency_count();

  Eigen::MatrixXd cell_total(nd, nf);
  Eigen::MatrixXd cell_buoy(nd * nf, n);

  // The impedance depends on frequency only, so one factorization serves
  // all directions at that frequency. Bitwise identical to factoring per
  // cell because the matrix is the same.
  for (Eigen::Index jf = 0; jf < nf; ++jf) {
    const double omega = scenario.frequencies[jf];
    FrequencyCase fc = coefficients(model, layout.positions, omega, scenario.directions_deg[0],
                                    scenario.amplitude);
    const Eigen::MatrixXcd z = impedance(fc, model, layout.ptos);
    const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(z);

    const double k = wavenumber(omega);
    const double magnitude =
        scenario.amplitude * model.excitation_scale *
        std::sqrt(radiation_damping(model, omega) / model.damping_scale);

    for (Eigen::Index jd = 0; jd < nd; ++jd) {
      fc.theta_deg = scenario.directions_deg[jd];
      const double theta = fc.theta_deg * kDegToRad;
      const double cos_t = std::cos(theta);
      const double sin_t = std::sin(theta);
      for (int i = 0; i < n; ++i) {
        const double phase = -k * (layout.positions(i, 0) * cos_t + layout.positions(i, 1) * sin_t);
        fc.excitation[i] = magnitude * Complex(std::cos(phase), std::sin(phase));
      }
      Eigen::VectorXcd v = lu.solve(fc.excitation);
      const double residual = (z * v - fc.excitation).norm();
      if (!v.allFinite() || residual > kResidualTolerance * fc.excitation.norm()) {
        v = solve_case(z, fc);  // re-solve for the diagnostic path
      }
      const auto [total, per_buoy] = case_power(fc, v, layout.ptos);
      cell_total(jd, jf) = total;
      cell_buoy.row(jd * nf + jf) = per_buoy.transpose();
    }
  }

  EvaluationResult result;
  result.per_buoy_power = Eigen::VectorXd::Zero(n);
  for (Eigen::Index jd = 0; jd < nd; ++jd) {
    for (Eigen::Index jf = 0; jf < nf; ++jf) {
      const double w = scenario.weights(jd, jf);
      result.total_power += w * cell_total(jd, jf);
      result.per_buoy_power += w * cell_buoy.row(jd * nf + jf).transpose();
    }
  }
  if (options.keep_cells) result.cell_power = cell_total;

  if (options.with_q) {
    double isolated_sum = 0.0;
    for (int i = 0; i < n; ++i) {
      FarmLayout single;
      single.positions = layout.positions.row(i);
      single.ptos = layout.ptos.row(i);
      isolated_sum += farm_power(model.isolated(i), scenario, single, {false, false}).total_power;
    }
    result.q_factor = result.total_power / isolated_sum;
  }
  return result;
}

}  // namespace wecfarm
