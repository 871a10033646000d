#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "biasfilter/core.hpp"
#include "biasfilter/mock.hpp"
#include "biasfilter/reward.hpp"

namespace biasfilter {

/// One enumerated candidate in the oracle's tree.
struct OracleCandidate {
  std::string text;
  std::vector<std::string> symbols;
  double reward = 0.0;
  uint32_t parent_index = 0;
  uint32_t child_index = 0;
  bool finished = false;
};

struct OracleResult {
  std::string final_text;
  double final_reward = 0.0;
  std::vector<std::vector<OracleCandidate>> pools;      // per segment, pre-filter
  std::vector<std::vector<OracleCandidate>> survivors;  // per segment, post-filter
};

/**
 * Independent re-implementation of the segment-filter search by explicit tree
 * enumeration over a mock world. Shares only core types and child_rng with the
 * engine; sampling, scoring, weighting, and selection are all rebuilt here
 * from the tables. Intended for desk-scale verification (a few thousand nodes).
 */
OracleResult oracle_search(const std::string& prompt, uint64_t prompt_id,
                           const MockWorld& world, const FilterConfig& config,
                           const RewardWeights& weights = {});

}  // namespace biasfilter
