// Confusion matrix and weighted-average classification report over binary
// human gold labels.
#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

namespace textkg {

using Confusion = std::array<std::array<long, 2>, 2>;  // [gold][predicted]

/// Throws std::invalid_argument on empty input, length mismatch or labels
/// outside {0,1}.
Confusion confusion_matrix(const std::vector<int>& gold,
                           const std::vector<int>& predicted);

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  long support = 0;

  bool operator==(const ClassMetrics&) const = default;
};

struct WeightedAvg {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  bool operator==(const WeightedAvg&) const = default;
};

struct Metrics {
  std::map<int, ClassMetrics> per_class;  // classes present in gold or predicted
  double accuracy = 0.0;
  WeightedAvg weighted_avg;  // gold-support weighted; zero-support classes drop out
  Confusion confusion{};
  long total = 0;
};

/// Precision/recall/F1 per class with a zero-division-yields-zero rule,
/// accuracy, and the support-weighted average.
Metrics classification_report(const std::vector<int>& gold,
                              const std::vector<int>& predicted);

/// Table layout mirroring the usual report printers, two-decimal rounding.
std::string format_report(const Metrics& metrics);

/// Metrics as a JSON document (for the eval subcommand's --out).
std::string metrics_to_json(const Metrics& metrics);

}  // namespace textkg
