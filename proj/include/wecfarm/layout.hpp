#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "wecfarm/rng.hpp"

namespace wecfarm {

struct layout_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One row per buoy.
using PointTable = Eigen::Matrix<double, Eigen::Dynamic, 2>;

/// Search-space box and PTO parameter bounds for an n-buoy farm.
/// The square allocates 20000 m^2 per buoy.
struct FarmBounds {
  int buoys = 0;
  double size = 0.0;    // x and y upper bound; lower bounds are 0
  double safety = 50.0; // minimum inter-buoy distance, meters
  double spring_min = 1.0;
  double spring_max = 5.5e5;  // N/m
  double damper_min = 5.0e4;
  double damper_max = 4.0e5;  // N*s/m

  static FarmBounds standard(int buoys);
};

/// Decision vector: buoy positions plus per-buoy PTO (spring, damper)
/// pairs. PTOs are clamped into bounds at construction; positions may be
/// infeasible (the penalty handles that) but are always finite.
struct FarmLayout {
  PointTable positions;  // meters
  PointTable ptos;       // col 0 spring, col 1 damper

  int size() const { return static_cast<int>(positions.rows()); }
};

/// The only construction path that enforces the layout invariants.
FarmLayout make_layout(PointTable positions, PointTable ptos, const FarmBounds& bounds);

Eigen::Vector2d clamp_pto(const Eigen::Vector2d& pto, const FarmBounds& bounds);

enum class PenaltyMode {
  standard,       // positive violation magnitudes, penalty (sum+1)^20 - 1
  paper_literal,  // signed (dist - safety) terms, penalty (sum+1)^20
};

struct ViolationReport {
  double sum_violation = 0.0;  // meters
  double penalty = 0.0;        // watts
};

/// Inter-buoy safety-distance shortfalls plus Euclidean out-of-box
/// shortfalls, accumulated pairwise (i<j ascending) then per buoy.
ViolationReport distance_penalty(const PointTable& positions, const FarmBounds& bounds,
                                 PenaltyMode mode = PenaltyMode::standard);

bool in_box(const Eigen::Vector2d& p, const FarmBounds& bounds);

/// True when `candidate` lies in the box and keeps the safety distance to
/// the first `placed_count` rows of `placed`.
bool position_feasible(const Eigen::Vector2d& candidate, const PointTable& placed, int placed_count,
                       const FarmBounds& bounds);

/// Uniform box draw, rejection-resampled against the already placed buoys.
/// Throws layout_error when max_draws rejections are exhausted.
Eigen::Vector2d random_feasible_position(const PointTable& placed, int placed_count, const FarmBounds& bounds,
                                         Rng& rng, int max_draws = 10000);

/// Uniform positions at pairwise distance >= safety (per-buoy rejection,
/// whole-layout restart on a stuck buoy), uniform PTOs in bounds.
FarmLayout random_feasible_layout(const FarmBounds& bounds, Rng& rng);

/// Affine map between layouts and unit-cube vectors used by the search
/// methods. Decoding clamps PTO coordinates; positions pass through.
class LayoutCodec {
 public:
  explicit LayoutCodec(const FarmBounds& bounds) : b_(bounds) {}

  int dims() const { return 4 * b_.buoys; }
  Eigen::VectorXd encode(const FarmLayout& layout) const;
  FarmLayout decode(const Eigen::VectorXd& u) const;

  Eigen::VectorXd encode_positions(const PointTable& positions) const;
  PointTable decode_positions(const Eigen::VectorXd& u) const;
  Eigen::VectorXd encode_ptos(const PointTable& ptos) const;
  PointTable decode_ptos(const Eigen::VectorXd& u) const;

  const FarmBounds& bounds() const { return b_; }

 private:
  FarmBounds b_;
};

struct LoadedLayout {
  FarmLayout layout;
  std::string scenario;
};

void write_layout(std::ostream& out, const FarmLayout& layout, const std::string& scenario_name);
void write_layout_file(const std::string& path, const FarmLayout& layout, const std::string& scenario_name);
LoadedLayout read_layout(std::istream& in);
LoadedLayout read_layout_file(const std::string& path);

}  // namespace wecfarm
