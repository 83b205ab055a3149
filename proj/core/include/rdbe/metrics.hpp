#ifndef RDBE_METRICS_HPP
#define RDBE_METRICS_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace rdbe {

// Two rating sequences over k ordered categories, indexed 0..k-1.
struct RatingPair {
  std::vector<int> gold;
  std::vector<int> pred;
  int k = 0;
};

struct QwkResult {
  double value = 0.0;
  // Both sequences constant: chance agreement is undefined (0/0 when the
  // constants coincide). Value follows the pinned convention: 1.0 on equal
  // constants, 0.0 otherwise.
  bool degenerate = false;
};

// Maps values on the (lo, hi, step) lattice to category indices
// round((v - lo) / step). Throws Error(data) on off-lattice values.
// Rubric scores use (1.0, 5.0, 0.5) -> k=9; totals (3.0, 15.0, 0.5) -> k=25.
std::vector<int> bin_scores(const std::vector<double>& values, double lo,
                            double hi, double step);

// w[i][j] = (i-j)^2 / (k-1)^2. Requires k >= 2.
std::vector<std::vector<double>> quadratic_weights(int k);

// Quadratic weighted kappa: 1 - sum(w*O)/sum(w*E) with O the normalized
// joint count matrix and E the outer product of the two marginals.
QwkResult qwk(const RatingPair& pair);

struct EvalReport {
  double qwk_content = 0.0;
  double qwk_organization = 0.0;
  double qwk_language = 0.0;
  double qwk_total = 0.0;
  bool degenerate_content = false;
  bool degenerate_organization = false;
  bool degenerate_language = false;
  bool degenerate_total = false;
  double fallback_rate = 0.0;
  std::size_t n_test = 0;
  nlohmann::json metadata;

  nlohmann::json to_json() const;
  // Plain-text table: one QWK column per rubric plus Total.
  std::string render_table() const;
};

}  // namespace rdbe

#endif
