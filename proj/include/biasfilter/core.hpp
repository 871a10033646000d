#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "biasfilter/errors.hpp"

namespace biasfilter {

/// How candidate rewards are obtained at each segment boundary.
enum class ScoringMode {
  /// Re-tokenize and re-score the full prefix every round (default; robust to
  /// tokenizer merges across segment joins).
  recompute_full_prefix,
  /// Score only the new segment and extend the parent's cached reward.
  incremental_cached,
};

const char* to_string(ScoringMode mode);
ScoringMode scoring_mode_from_string(const std::string& name);

/**
 * All knobs of the segment-filtered decoding loop.
 *
 * segment_length  tokens generated between consecutive reward evaluations (l)
 * max_tokens      total generation budget (l_max)
 * beam_width      survivors kept after each filtering step (N)
 * children_per_parent  fresh continuations sampled per survivor (N_children)
 */
struct FilterConfig {
  uint32_t segment_length = 128;
  uint32_t max_tokens = 512;
  uint32_t beam_width = 4;
  uint32_t children_per_parent = 2;
  double temperature = 1.0;
  uint32_t top_k = 0;  // 0 = unlimited
  uint64_t seed = 0;
  ScoringMode scoring_mode = ScoringMode::recompute_full_prefix;

  /// Throws ConfigError unless all invariants hold (l >= 1, l <= l_max, ...).
  void validate() const;
};

/// One generated token with its log-probabilities (nats) under the scoring pair.
struct TokenScore {
  std::string token_text;
  double policy_logprob = 0.0;
  double reference_logprob = 0.0;
  uint32_t absolute_position = 0;  // 0-based index within the completion
};

/**
 * A partial or finished generation.
 *
 * `text` is the generator-side concatenation y_{1:k}; `tokens` are the scoring
 * backend's tokens for that text (populated when scored). The two token counts
 * coincide only when the generator and scorer share a tokenizer.
 */
struct Candidate {
  uint64_t prompt_id = 0;
  std::string text;
  std::vector<TokenScore> tokens;
  double partial_reward = 0.0;
  uint32_t segment_index = 0;  // segments completed so far (k)
  uint32_t parent_index = 0;   // index in the previous survivor set
  uint32_t child_index = 0;    // 0..N_children-1
  bool finished = false;       // EOS emitted or max_tokens reached
  uint32_t gen_token_count = 0;

  // Scoring bookkeeping, maintained by the engine.
  bool scored = false;
  bool unscorable = false;
};

/// K and the per-segment token budgets derived from a FilterConfig.
struct SegmentPlan {
  uint32_t segment_count = 0;  // K
  std::vector<uint32_t> budgets;
};

/**
 * Split max_tokens into K = ceil(max_tokens / segment_length) segments.
 * Every budget equals segment_length except a possibly shorter final one;
 * budgets always sum to exactly max_tokens.
 */
SegmentPlan derive_segments(const FilterConfig& config);

struct PhaseTimings {
  double sample_ms = 0.0;
  double score_ms = 0.0;
  double select_ms = 0.0;
};

struct SegmentRecord {
  uint32_t segment_index = 0;
  uint32_t pool_size = 0;
  std::vector<double> survivor_rewards;  // sorted descending
  PhaseTimings timings;
};

/// Bookkeeping for one filtered decode, suitable for diagnostics and reports.
struct RunRecord {
  FilterConfig config;
  uint64_t prompt_id = 0;
  std::string weight_scheme;
  std::vector<SegmentRecord> segments;
  std::string final_text;
  double final_reward = 0.0;
  uint64_t generate_calls = 0;
  uint64_t score_calls = 0;
  uint64_t retries = 0;
  double total_ms = 0.0;

  /**
   * Canonical serialization of everything except measured durations.
   * Two runs are "identical" when their fingerprints match byte-for-byte.
   */
  std::string fingerprint() const;
};

}  // namespace biasfilter
