#ifndef RDBE_SCORE_GRID_HPP
#define RDBE_SCORE_GRID_HPP

#include <string>
#include <vector>

namespace rdbe {

// The admissible per-rubric scores: 1.0, 1.5, ..., 5.0. Totals of three
// rubric scores live on the 0.5-step lattice [3.0, 15.0].
class ScoreGrid {
 public:
  // Default grid: 9 values from 1.0 to 5.0 in 0.5 steps.
  ScoreGrid();
  ScoreGrid(double lo, double hi, double step);

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double lo() const { return values_.front(); }
  double hi() const { return values_.back(); }

  bool contains(double v) const;

 private:
  std::vector<double> values_;
};

// Nearest grid value to x; ties break toward the lower value, values past
// the extremes clamp. Throws Error(data) on non-finite input.
double nearest_grid_score(double x, const ScoreGrid& grid);

// Scores are carried as doubles but compared in integer tenths so that the
// 0.5-step grid and the one-decimal rendering stay exact.
long score_to_tenths(double v);
bool is_tenths_value(double v);

// Renders a score with exactly one decimal place: 4 -> "4.0", 4.5 -> "4.5".
std::string format_score(double v);

}  // namespace rdbe

#endif
