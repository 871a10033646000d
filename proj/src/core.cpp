#include "biasfilter/core.hpp"

#include <sstream>

namespace biasfilter {

const char* to_string(ScoringMode mode) {
  switch (mode) {
    case ScoringMode::recompute_full_prefix:
      return "recompute_full_prefix";
    case ScoringMode::incremental_cached:
      return "incremental_cached";
  }
  return "unknown";
}

ScoringMode scoring_mode_from_string(const std::string& name) {
  if (name == "recompute_full_prefix") return ScoringMode::recompute_full_prefix;
  if (name == "incremental_cached") return ScoringMode::incremental_cached;
  throw ConfigError("unknown scoring_mode: " + name);
}

void FilterConfig::validate() const {
  if (segment_length == 0) throw ConfigError("segment_length must be positive");
  if (max_tokens == 0) throw ConfigError("max_tokens must be positive");
  if (segment_length > max_tokens)
    throw ConfigError("segment_length exceeds max_tokens (" +
                      std::to_string(segment_length) + " > " + std::to_string(max_tokens) + ")");
  if (beam_width == 0) throw ConfigError("beam_width must be at least 1");
  if (children_per_parent == 0) throw ConfigError("children_per_parent must be at least 1");
  if (!(temperature >= 0.0)) throw ConfigError("temperature must be nonnegative");
}

SegmentPlan derive_segments(const FilterConfig& config) {
  config.validate();
  SegmentPlan plan;
  plan.segment_count = (config.max_tokens + config.segment_length - 1) / config.segment_length;
  plan.budgets.assign(plan.segment_count, config.segment_length);
  // Short final segment when segment_length does not divide max_tokens.
  plan.budgets.back() =
      config.max_tokens - (plan.segment_count - 1) * config.segment_length;
  return plan;
}

namespace {

void append_double(std::ostringstream& out, double value) {
  out.precision(17);
  out << value;
}

}  // namespace

std::string RunRecord::fingerprint() const {
  std::ostringstream out;
  out << "cfg l=" << config.segment_length << " lmax=" << config.max_tokens
      << " n=" << config.beam_width << " nc=" << config.children_per_parent << " temp=";
  append_double(out, config.temperature);
  out << " topk=" << config.top_k << " seed=" << config.seed
      << " mode=" << to_string(config.scoring_mode) << "\n";
  out << "prompt_id=" << prompt_id << " weights=" << weight_scheme << "\n";
  for (const auto& seg : segments) {
    out << "seg " << seg.segment_index << " pool=" << seg.pool_size << " rewards=[";
    for (size_t i = 0; i < seg.survivor_rewards.size(); ++i) {
      if (i) out << ",";
      append_double(out, seg.survivor_rewards[i]);
    }
    out << "]\n";
  }
  out << "calls gen=" << generate_calls << " score=" << score_calls << " retries=" << retries
      << "\n";
  out << "final reward=";
  append_double(out, final_reward);
  out << " text=" << final_text << "\n";
  return out.str();
}

}  // namespace biasfilter
