#include "rdbe/score_grid.hpp"

#include <cmath>
#include <cstdio>

#include "rdbe/errors.hpp"

namespace rdbe {

ScoreGrid::ScoreGrid() : ScoreGrid(1.0, 5.0, 0.5) {}

ScoreGrid::ScoreGrid(double lo, double hi, double step) {
  if (!(std::isfinite(lo) && std::isfinite(hi) && std::isfinite(step)) ||
      step <= 0.0 || hi <= lo) {
    throw Error(ErrorCategory::data, "score grid: invalid (lo, hi, step)");
  }
  long n = std::lround((hi - lo) / step) + 1;
  values_.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) values_.push_back(lo + static_cast<double>(i) * step);
}

bool ScoreGrid::contains(double v) const {
  for (double g : values_) {
    if (g == v) return true;
  }
  return false;
}

double nearest_grid_score(double x, const ScoreGrid& grid) {
  if (!std::isfinite(x)) {
    throw Error(ErrorCategory::data, "nearest_grid_score: non-finite input");
  }
  double best = grid.values().front();
  double best_d = std::fabs(x - best);
  for (double g : grid.values()) {
    double d = std::fabs(x - g);
    if (d < best_d) {  // strict: ties keep the lower value
      best = g;
      best_d = d;
    }
  }
  return best;
}

long score_to_tenths(double v) { return std::lround(v * 10.0); }

bool is_tenths_value(double v) {
  if (!std::isfinite(v)) return false;
  return std::fabs(v * 10.0 - static_cast<double>(std::lround(v * 10.0))) < 1e-6;
}

std::string format_score(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", v);
  return buf;
}

}  // namespace rdbe
