#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "biasfilter/backend.hpp"
#include "biasfilter/core.hpp"
#include "biasfilter/reward.hpp"

namespace biasfilter {

/**
 * The candidates retained after one segment's filtering step, ordered by the
 * deterministic tie-break: partial_reward descending, then parent_index
 * ascending, then child_index ascending. Unscorable candidates sort below
 * every scored one.
 */
struct SurvivorSet {
  uint32_t segment_index = 0;
  std::vector<Candidate> candidates;  // length <= beam_width
};

/// Tie-break comparator shared by selection and final argmax.
bool candidate_order(const Candidate& a, const Candidate& b);

/**
 * Sample the next segment's candidate pool.
 *
 * Each unfinished survivor contributes children_per_parent continuations of up
 * to `budget` tokens; finished survivors pass through unexpanded (one copy
 * each, no backend call). The pool is ordered by (parent_index, child_index)
 * regardless of `parallelism`, because every child's random stream is a pure
 * function of (seed, prompt_id, segment, parent, child).
 */
std::vector<Candidate> expand(const SurvivorSet& survivors, uint32_t budget,
                              GenerationBackend& generator, const FilterConfig& config,
                              const std::string& prompt, int parallelism = 1);

/**
 * Populate partial_reward for every candidate in the pool.
 *
 * recompute_full_prefix re-tokenizes and scores each candidate's full text;
 * incremental_cached scores only the new segment against the parent's prefix
 * and extends the parent's verified reward (parents come from `previous`).
 * A candidate whose scoring raises AlignmentError is marked unscorable and
 * ranks below all scored candidates; if the whole pool is unscorable the
 * request fails with ScoringError.
 */
void score_pool(std::vector<Candidate>& pool, ScoringBackend& scorer,
                const RewardWeights& weights, ScoringMode mode, const std::string& prompt,
                const SurvivorSet& previous, int parallelism = 1);

/// Top-N by the deterministic order; |result| = min(N, |pool|). Empty pool is
/// a ContractViolation.
SurvivorSet select_top_n(const std::vector<Candidate>& pool, uint32_t beam_width);

struct RunOptions {
  RewardWeights weights{};
  int parallelism = 1;
};

struct FilteredResult {
  std::string text;
  double reward = 0.0;
  Candidate best;
  RunRecord record;
};

/**
 * Full segment-filtered decode: K rounds of expand -> score -> select starting
 * from the single empty candidate, then argmax over the final survivor set.
 *
 * With beam_width = 1 and children_per_parent = 1 the output is byte-identical
 * to one plain sampling pass using the same random tuples. Backend errors
 * propagate with the failing segment attached; the partial RunRecord is
 * embedded in the thrown EngineError for diagnostics.
 */
FilteredResult run_filter(const std::string& prompt, uint64_t prompt_id,
                          GenerationBackend& generator, ScoringBackend& scorer,
                          const FilterConfig& config, const RunOptions& options = {});

/// Backend failure wrapper that carries the partial run record.
class EngineError : public Error {
 public:
  EngineError(const std::string& what, RunRecord partial)
      : Error(what), partial_record_(std::move(partial)) {}

  const RunRecord& partial_record() const { return partial_record_; }

 private:
  RunRecord partial_record_;
};

}  // namespace biasfilter
