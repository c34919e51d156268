#include "wecfarm/layout.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace wecfarm {

namespace {

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

FarmBounds FarmBounds::standard(int buoys) {
  FarmBounds b;
  b.buoys = buoys;
  b.size = std::sqrt(static_cast<double>(buoys) * 20000.0);
  return b;
}

Eigen::Vector2d clamp_pto(const Eigen::Vector2d& pto, const FarmBounds& b) {
  return {std::min(std::max(pto[0], b.spring_min), b.spring_max),
          std::min(std::max(pto[1], b.damper_min), b.damper_max)};
}

FarmLayout make_layout(PointTable positions, PointTable ptos, const FarmBounds& b) {
  if (positions.rows() != ptos.rows()) throw layout_error("positions/ptos row count mismatch");
  if (!positions.allFinite() || !ptos.allFinite()) throw layout_error("layout contains non-finite values");
  for (Eigen::Index i = 0; i < ptos.rows(); ++i) ptos.row(i) = clamp_pto(ptos.row(i), b).transpose();
  return {std::move(positions), std::move(ptos)};
}

ViolationReport distance_penalty(const PointTable& pos, const FarmBounds& b, PenaltyMode mode) {
  const auto n = pos.rows();
  const double sign = mode == PenaltyMode::standard ? 1.0 : -1.0;
  double sum = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double dx = pos(i, 0) - pos(j, 0);
      const double dy = pos(i, 1) - pos(j, 1);
      const double dist = std::sqrt(dx * dx + dy * dy);
      if (dist < b.safety) sum += sign * (b.safety - dist);
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    const double x = pos(i, 0), y = pos(i, 1);
    const double dx = x < 0.0 ? -x : (x > b.size ? x - b.size : 0.0);
    const double dy = y < 0.0 ? -y : (y > b.size ? y - b.size : 0.0);
    if (dx > 0.0 || dy > 0.0) sum += sign * std::sqrt(dx * dx + dy * dy);
  }
  ViolationReport r;
  r.sum_violation = sum;
  r.penalty = mode == PenaltyMode::standard ? std::pow(sum + 1.0, 20.0) - 1.0 : std::pow(sum + 1.0, 20.0);
  return r;
}

bool in_box(const Eigen::Vector2d& p, const FarmBounds& b) {
  return p[0] >= 0.0 && p[0] <= b.size && p[1] >= 0.0 && p[1] <= b.size;
}

bool position_feasible(const Eigen::Vector2d& c, const PointTable& placed, int placed_count,
                       const FarmBounds& b) {
  if (!in_box(c, b)) return false;
  for (int i = 0; i < placed_count; ++i) {
    const double dx = c[0] - placed(i, 0);
    const double dy = c[1] - placed(i, 1);
    if (std::sqrt(dx * dx + dy * dy) < b.safety) return false;
  }
  return true;
}

Eigen::Vector2d random_feasible_position(const PointTable& placed, int placed_count, const FarmBounds& b,
                                         Rng& rng, int max_draws) {
  for (int t = 0; t < max_draws; ++t) {
    const Eigen::Vector2d c{rng.uniform(0.0, b.size), rng.uniform(0.0, b.size)};
    if (position_feasible(c, placed, placed_count, b)) return c;
  }
  throw layout_error("could not draw a feasible position");
}

FarmLayout random_feasible_layout(const FarmBounds& b, Rng& rng) {
  constexpr int kPerBuoyCap = 10000;
  constexpr int kRestartCap = 100;
  PointTable pos(b.buoys, 2);
  for (int restart = 0; restart < kRestartCap; ++restart) {
    bool ok = true;
    for (int i = 0; i < b.buoys && ok; ++i) {
      ok = false;
      for (int t = 0; t < kPerBuoyCap; ++t) {
        const Eigen::Vector2d c{rng.uniform(0.0, b.size), rng.uniform(0.0, b.size)};
        if (position_feasible(c, pos, i, b)) {
          pos.row(i) = c.transpose();
          ok = true;
          break;
        }
      }
    }
    if (!ok) continue;
    PointTable ptos(b.buoys, 2);
    for (int i = 0; i < b.buoys; ++i) {
      ptos(i, 0) = rng.uniform(b.spring_min, b.spring_max);
      ptos(i, 1) = rng.uniform(b.damper_min, b.damper_max);
    }
    return make_layout(std::move(pos), std::move(ptos), b);
  }
  throw layout_error("box cannot fit the requested buoy count at the safety distance");
}

Eigen::VectorXd LayoutCodec::encode(const FarmLayout& layout) const {
  Eigen::VectorXd u(4 * layout.size());
  for (int i = 0; i < layout.size(); ++i) {
    u[4 * i + 0] = layout.positions(i, 0) / b_.size;
    u[4 * i + 1] = layout.positions(i, 1) / b_.size;
    u[4 * i + 2] = (layout.ptos(i, 0) - b_.spring_min) / (b_.spring_max - b_.spring_min);
    u[4 * i + 3] = (layout.ptos(i, 1) - b_.damper_min) / (b_.damper_max - b_.damper_min);
  }
  return u;
}

FarmLayout LayoutCodec::decode(const Eigen::VectorXd& u) const {
  const int n = static_cast<int>(u.size()) / 4;
  PointTable pos(n, 2), ptos(n, 2);
  for (int i = 0; i < n; ++i) {
    pos(i, 0) = u[4 * i + 0] * b_.size;
    pos(i, 1) = u[4 * i + 1] * b_.size;
    ptos(i, 0) = b_.spring_min + u[4 * i + 2] * (b_.spring_max - b_.spring_min);
    ptos(i, 1) = b_.damper_min + u[4 * i + 3] * (b_.damper_max - b_.damper_min);
  }
  return make_layout(std::move(pos), std::move(ptos), b_);
}

Eigen::VectorXd LayoutCodec::encode_positions(const PointTable& positions) const {
  Eigen::VectorXd u(2 * positions.rows());
  for (Eigen::Index i = 0; i < positions.rows(); ++i) {
    u[2 * i + 0] = positions(i, 0) / b_.size;
    u[2 * i + 1] = positions(i, 1) / b_.size;
  }
  return u;
}

PointTable LayoutCodec::decode_positions(const Eigen::VectorXd& u) const {
  const auto n = u.size() / 2;
  PointTable p(n, 2);
  for (Eigen::Index i = 0; i < n; ++i) {
    p(i, 0) = u[2 * i + 0] * b_.size;
    p(i, 1) = u[2 * i + 1] * b_.size;
  }
  return p;
}

Eigen::VectorXd LayoutCodec::encode_ptos(const PointTable& ptos) const {
  Eigen::VectorXd u(2 * ptos.rows());
  for (Eigen::Index i = 0; i < ptos.rows(); ++i) {
    u[2 * i + 0] = (ptos(i, 0) - b_.spring_min) / (b_.spring_max - b_.spring_min);
    u[2 * i + 1] = (ptos(i, 1) - b_.damper_min) / (b_.damper_max - b_.damper_min);
  }
  return u;
}

PointTable LayoutCodec::decode_ptos(const Eigen::VectorXd& u) const {
  const auto n = u.size() / 2;
  PointTable p(n, 2);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Vector2d raw{b_.spring_min + u[2 * i + 0] * (b_.spring_max - b_.spring_min),
                              b_.damper_min + u[2 * i + 1] * (b_.damper_max - b_.damper_min)};
    p.row(i) = clamp_pto(raw, b_).transpose();
  }
  return p;
}

void write_layout(std::ostream& out, const FarmLayout& layout, const std::string& scenario_name) {
  out << "layout n=" << layout.size() << " scenario=" << scenario_name << "\n";
  for (int i = 0; i < layout.size(); ++i) {
    out << format_full(layout.positions(i, 0)) << ' ' << format_full(layout.positions(i, 1)) << ' '
        << format_full(layout.ptos(i, 0)) << ' ' << format_full(layout.ptos(i, 1)) << '\n';
  }
}

void write_layout_file(const std::string& path, const FarmLayout& layout, const std::string& scenario_name) {
  std::ofstream out(path);
  if (!out) throw layout_error("cannot write layout file: " + path);
  write_layout(out, layout, scenario_name);
}

LoadedLayout read_layout(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw layout_error("empty layout file");
  std::istringstream header(line);
  std::string tag, nfield, sfield;
  header >> tag >> nfield;
  if (tag != "layout" || nfield.rfind("n=", 0) != 0)
    throw layout_error("expected 'layout n=<n> scenario=<name>' header");
  int n = 0;
  try {
    n = std::stoi(nfield.substr(2));
  } catch (const std::exception&) {
    throw layout_error("bad buoy count in layout header");
  }
  std::string scenario;
  if (header >> sfield) {
    if (sfield.rfind("scenario=", 0) != 0) throw layout_error("unknown layout header field: " + sfield);
    scenario = sfield.substr(9);
  }

  PointTable pos(n, 2), ptos(n, 2);
  for (int i = 0; i < n; ++i) {
    if (!std::getline(in, line)) throw layout_error("layout file truncated at buoy " + std::to_string(i + 1));
    std::istringstream row(line);
    if (!(row >> pos(i, 0) >> pos(i, 1) >> ptos(i, 0) >> ptos(i, 1)))
      throw layout_error("bad layout row " + std::to_string(i + 1));
  }
  const auto bounds = FarmBounds::standard(n);
  return {make_layout(std::move(pos), std::move(ptos), bounds), scenario};
}

LoadedLayout read_layout_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw layout_error("cannot open layout file: " + path);
  return read_layout(in);
}

}  // namespace wecfarm
