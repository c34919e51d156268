#pragma once

#include <chrono>
#include <exception>
#include <mutex>
#include <vector>

#include "wecfarm/hydro.hpp"
#include "wecfarm/layout.hpp"
#include "wecfarm/scenario.hpp"

namespace wecfarm {

/// Raised when the evaluation budget (or the optional wall-clock cap) is
/// gone. Search methods treat it as a stop condition, distinct from an
/// evaluation failure.
struct budget_exhausted : std::exception {
  const char* what() const noexcept override { return "evaluation budget exhausted"; }
};

struct TracePoint {
  long evaluation;  // 1-based count at which the best improved
  double fitness;
};

struct FitnessOutcome {
  double fitness = 0.0;
  EvaluationResult result;
  long evaluation = 0;
  bool failed = false;
};

/// Budget-accounted fitness function shared by every search method:
/// fitness = farm power - distance penalty. Counts every call (penalized,
/// rejected and failed ones included), tracks the best-so-far record and
/// the improvement trace. Safe for concurrent calls; the trace is ordered
/// by counter value.
class Evaluator {
 public:
  Evaluator(HydroModel model, WaveScenario scenario, FarmBounds bounds, long budget,
            PenaltyMode penalty_mode = PenaltyMode::standard, double wall_limit_seconds = 0.0);

  /// Layouts may have fewer buoys than the bounds (sequential placement
  /// evaluates partial farms). With reject_infeasible set, any nonzero
  /// position violation scores -inf without touching the hydro model —
  /// placement methods must not lean on the penalty.
  FitnessOutcome fitness(const FarmLayout& layout, bool reject_infeasible = false);

  long evaluations() const;
  long budget() const { return budget_; }
  double best_fitness() const;
  FarmLayout best_layout() const;
  EvaluationResult best_result() const;
  long best_evaluation() const;
  std::vector<TracePoint> trace() const;

  const HydroModel& model() const { return model_; }
  const WaveScenario& scenario() const { return scenario_; }
  const FarmBounds& bounds() const { return bounds_; }
  PenaltyMode penalty_mode() const { return penalty_mode_; }

  /// Test hook: keep the fitness of every call, in counter order.
  void enable_call_log(bool on);
  std::vector<double> call_log() const;

 private:
  HydroModel model_;
  WaveScenario scenario_;
  FarmBounds bounds_;
  long budget_;
  PenaltyMode penalty_mode_;
  double wall_limit_seconds_;
  std::chrono::steady_clock::time_point start_;

  mutable std::mutex mutex_;
  long count_ = 0;
  double best_fitness_;
  FarmLayout best_layout_;
  EvaluationResult best_result_;
  long best_evaluation_ = 0;
  std::vector<TracePoint> trace_;
  bool log_calls_ = false;
  std::vector<double> call_log_;
};

}  // namespace wecfarm
