#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "biasfilter/judge.hpp"

namespace biasfilter {

/// Per-group metric values plus their aggregate; the aggregate is always
/// recomputable from the items.
struct MetricReport {
  std::string metric;
  std::string group;  // grouping key (axis/task), "" for overall
  std::vector<double> items;
  std::optional<double> aggregate;  // empty when no valid item exists
  size_t count = 0;                 // valid items
  size_t excluded = 0;              // error verdicts / undefined items
};

/// exp(-mean(logprobs)), logprobs in nats. Empty input raises
/// UndefinedMetricError; any non-finite entry raises ScoringError.
double perplexity(std::span<const double> token_logprobs);

/**
 * Distinct adjacent word bigrams / total adjacent word bigrams, in (0, 1].
 * Words are lowercased, whitespace-split, with punctuation stripped at word
 * edges. Texts with fewer than two words have no value (nullopt) and are
 * excluded from aggregates rather than counted as zero.
 */
std::optional<double> distinct_2(const std::string& text);

/// Mean 0-99 score per group; failed verdicts are excluded and counted.
/// Groups with zero valid verdicts report an empty aggregate.
std::vector<MetricReport> aggregate_bias_score(std::span<const JudgeVerdict> verdicts,
                                               std::span<const std::string> groups);

/// 100 * biased / valid per group (reports print one decimal place).
std::vector<MetricReport> aggregate_bias_rate(std::span<const JudgeVerdict> verdicts,
                                              std::span<const std::string> groups);

/// Mean of per-item values with undefined items excluded.
MetricReport aggregate_mean(const std::string& metric, const std::string& group,
                            std::span<const std::optional<double>> items);

/// One line per report: metric, group, aggregate (one decimal for rates),
/// counts. Mirrors a Method x {PPL, D-2} table layout when given both metrics.
std::string format_report_table(std::span<const MetricReport> reports);

}  // namespace biasfilter
