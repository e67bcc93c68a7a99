#include "textkg/eval.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace textkg {

Confusion confusion_matrix(const std::vector<int>& gold,
                           const std::vector<int>& predicted) {
  if (gold.empty()) throw std::invalid_argument("empty label vectors");
  if (gold.size() != predicted.size())
    throw std::invalid_argument("gold and predicted lengths differ");
  Confusion counts{};
  for (size_t i = 0; i < gold.size(); ++i) {
    if ((gold[i] != 0 && gold[i] != 1) || (predicted[i] != 0 && predicted[i] != 1))
      throw std::invalid_argument("labels must be 0 or 1");
    ++counts[static_cast<size_t>(gold[i])][static_cast<size_t>(predicted[i])];
  }
  return counts;
}

Metrics classification_report(const std::vector<int>& gold,
                              const std::vector<int>& predicted) {
  Metrics m;
  m.confusion = confusion_matrix(gold, predicted);
  m.total = static_cast<long>(gold.size());

  bool present[2] = {false, false};
  for (int g : gold) present[g] = true;
  for (int p : predicted) present[p] = true;

  long correct = m.confusion[0][0] + m.confusion[1][1];
  m.accuracy = static_cast<double>(correct) / static_cast<double>(m.total);

  double weighted_support = 0.0;
  for (int c = 0; c <= 1; ++c) {
    if (!present[c]) continue;
    auto uc = static_cast<size_t>(c);
    long tp = m.confusion[uc][uc];
    long fp = m.confusion[1 - uc][uc];
    long fn = m.confusion[uc][1 - uc];
    ClassMetrics cm;
    cm.support = tp + fn;
    cm.precision = tp + fp > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
    cm.recall = tp + fn > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
    cm.f1 = cm.precision + cm.recall > 0.0
                ? 2.0 * cm.precision * cm.recall / (cm.precision + cm.recall)
                : 0.0;
    m.per_class[c] = cm;

    m.weighted_avg.precision += cm.precision * static_cast<double>(cm.support);
    m.weighted_avg.recall += cm.recall * static_cast<double>(cm.support);
    m.weighted_avg.f1 += cm.f1 * static_cast<double>(cm.support);
    weighted_support += static_cast<double>(cm.support);
  }
  if (weighted_support > 0.0) {
    m.weighted_avg.precision /= weighted_support;
    m.weighted_avg.recall /= weighted_support;
    m.weighted_avg.f1 /= weighted_support;
  }
  return m;
}

namespace {

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string rjust(const std::string& s, size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace

std::string format_report(const Metrics& m) {
  const size_t width = 12;  // fits "weighted avg"
  std::string out;
  out += rjust("", width) + " ";
  for (const char* h : {"precision", "recall", "f1-score", "support"})
    out += " " + rjust(h, 9);
  out += "\n\n";
  for (const auto& [cls, cm] : m.per_class) {
    out += rjust(std::to_string(cls), width) + " ";
    out += " " + rjust(fixed2(cm.precision), 9);
    out += " " + rjust(fixed2(cm.recall), 9);
    out += " " + rjust(fixed2(cm.f1), 9);
    out += " " + rjust(std::to_string(cm.support), 9);
    out += "\n";
  }
  out += "\n";
  out += rjust("accuracy", width) + " ";
  out += " " + rjust("", 9) + " " + rjust("", 9);
  out += " " + rjust(fixed2(m.accuracy), 9);
  out += " " + rjust(std::to_string(m.total), 9);
  out += "\n";
  out += rjust("weighted avg", width) + " ";
  out += " " + rjust(fixed2(m.weighted_avg.precision), 9);
  out += " " + rjust(fixed2(m.weighted_avg.recall), 9);
  out += " " + rjust(fixed2(m.weighted_avg.f1), 9);
  out += " " + rjust(std::to_string(m.total), 9);
  out += "\n";
  return out;
}

std::string metrics_to_json(const Metrics& m) {
  nlohmann::ordered_json j;
  for (const auto& [cls, cm] : m.per_class) {
    nlohmann::ordered_json c;
    c["precision"] = cm.precision;
    c["recall"] = cm.recall;
    c["f1"] = cm.f1;
    c["support"] = cm.support;
    j["per_class"][std::to_string(cls)] = c;
  }
  j["accuracy"] = m.accuracy;
  j["weighted_avg"] = {{"precision", m.weighted_avg.precision},
                       {"recall", m.weighted_avg.recall},
                       {"f1", m.weighted_avg.f1}};
  j["confusion"] = {{m.confusion[0][0], m.confusion[0][1]},
                    {m.confusion[1][0], m.confusion[1][1]}};
  j["total"] = m.total;
  return j.dump(2) + "\n";
}

}  // namespace textkg
