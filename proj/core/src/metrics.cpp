#include "rdbe/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "rdbe/errors.hpp"

namespace rdbe {

std::vector<int> bin_scores(const std::vector<double>& values, double lo,
                            double hi, double step) {
  if (step <= 0.0 || hi <= lo) {
    throw Error(ErrorCategory::data, "bin_scores: invalid lattice");
  }
  int k = static_cast<int>(std::lround((hi - lo) / step)) + 1;
  std::vector<int> out;
  out.reserve(values.size());
  for (double v : values) {
    double pos = (v - lo) / step;
    long idx = std::lround(pos);
    if (!std::isfinite(v) || std::fabs(pos - static_cast<double>(idx)) > 1e-6 ||
        idx < 0 || idx >= k) {
      throw Error(ErrorCategory::data,
                  "bin_scores: value off lattice: " + std::to_string(v));
    }
    out.push_back(static_cast<int>(idx));
  }
  return out;
}

std::vector<std::vector<double>> quadratic_weights(int k) {
  if (k < 2) {
    throw Error(ErrorCategory::data, "quadratic_weights: k must be >= 2");
  }
  double denom = static_cast<double>(k - 1) * static_cast<double>(k - 1);
  std::vector<std::vector<double>> w(k, std::vector<double>(k, 0.0));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      double d = static_cast<double>(i - j);
      w[i][j] = d * d / denom;
    }
  }
  return w;
}

QwkResult qwk(const RatingPair& pair) {
  if (pair.gold.size() != pair.pred.size()) {
    throw Error(ErrorCategory::data, "qwk: length mismatch");
  }
  if (pair.gold.empty()) {
    throw Error(ErrorCategory::data, "qwk: empty input");
  }
  if (pair.k < 2) {
    throw Error(ErrorCategory::data, "qwk: k must be >= 2");
  }
  const int k = pair.k;
  const std::size_t n = pair.gold.size();

  std::vector<double> gold_marginal(k, 0.0);
  std::vector<double> pred_marginal(k, 0.0);
  double denom_w = static_cast<double>(k - 1) * static_cast<double>(k - 1);

  // sum(w*O) accumulates straight off the pairs; no joint matrix is built.
  double sum_wo = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    int g = pair.gold[t];
    int p = pair.pred[t];
    if (g < 0 || g >= k || p < 0 || p >= k) {
      throw Error(ErrorCategory::data, "qwk: category index out of range");
    }
    double d = static_cast<double>(g - p);
    sum_wo += d * d / denom_w;
    gold_marginal[g] += 1.0;
    pred_marginal[p] += 1.0;
  }
  sum_wo /= static_cast<double>(n);

  bool gold_constant = false, pred_constant = false;
  for (int i = 0; i < k; ++i) {
    if (gold_marginal[i] == static_cast<double>(n)) gold_constant = true;
    if (pred_marginal[i] == static_cast<double>(n)) pred_constant = true;
  }
  if (gold_constant && pred_constant) {
    // Point-mass marginals: O and E coincide, so the formula carries no
    // information. Equal constants count as agreement, different as none.
    QwkResult res;
    res.degenerate = true;
    res.value = (pair.gold[0] == pair.pred[0]) ? 1.0 : 0.0;
    return res;
  }

  double sum_we = 0.0;
  for (int i = 0; i < k; ++i) {
    if (gold_marginal[i] == 0.0) continue;
    for (int j = 0; j < k; ++j) {
      if (pred_marginal[j] == 0.0) continue;
      double d = static_cast<double>(i - j);
      sum_we += (d * d / denom_w) * (gold_marginal[i] / n) * (pred_marginal[j] / n);
    }
  }

  QwkResult res;
  res.value = 1.0 - sum_wo / sum_we;
  return res;
}

nlohmann::json EvalReport::to_json() const {
  return nlohmann::json{
      {"qwk",
       {{"content", qwk_content},
        {"organization", qwk_organization},
        {"language", qwk_language},
        {"total", qwk_total}}},
      {"degenerate",
       {{"content", degenerate_content},
        {"organization", degenerate_organization},
        {"language", degenerate_language},
        {"total", degenerate_total}}},
      {"fallback_rate", fallback_rate},
      {"n_test", n_test},
      {"metadata", metadata}};
}

std::string EvalReport::render_table() const {
  char line[160];
  std::ostringstream out;
  out << "        Content  Organization  Language  Total\n";
  std::snprintf(line, sizeof(line), "QWK      %6.3f        %6.3f    %6.3f %6.3f\n",
                qwk_content, qwk_organization, qwk_language, qwk_total);
  out << line;
  std::snprintf(line, sizeof(line),
                "n_test=%zu  fallback_rate=%.4f\n", n_test, fallback_rate);
  out << line;
  return out.str();
}

}  // namespace rdbe
