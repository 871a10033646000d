#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "biasfilter/core.hpp"

namespace biasfilter {

/// Position-weighting scheme for the cumulative log-ratio reward.
enum class WeightScheme {
  /// w_k = 1 / (k + 1): prefixes including the current token weight the term.
  position_harmonic,
  /// w_k = 1 / len: plain mean of the log-ratios, for ablation.
  uniform,
};

const char* to_string(WeightScheme scheme);
WeightScheme weight_scheme_from_string(const std::string& name);

struct RewardWeights {
  WeightScheme scheme = WeightScheme::position_harmonic;
  double beta = 0.1;  // used only by dpo_loss
};

/**
 * Cumulative weighted log-ratio reward over a scored token sequence:
 *
 *   sum_k w_k * (policy_logprob_k - reference_logprob_k)
 *
 * Summation is fixed left-to-right so results are bit-reproducible. The empty
 * sequence scores 0. Throws ScoringError (with the token position) on any
 * non-finite log-probability.
 */
double partial_reward(std::span<const TokenScore> tokens, const RewardWeights& weights);

/**
 * Reward of a sequence extended by `new_tokens`, given the reward and length
 * of the already-scored prefix. Equals partial_reward over the concatenation
 * to within 1e-9 for both weight schemes; new token positions must continue
 * exactly from prev_length (ContractViolation otherwise).
 */
double extend_reward(double prev_reward, size_t prev_length,
                     std::span<const TokenScore> new_tokens, const RewardWeights& weights);

/**
 * Preference-loss value for a (chosen, rejected) pair of log-ratio sums:
 *
 *   -log sigmoid(beta * chosen_ratio_sum - beta * rejected_ratio_sum)
 *
 * Evaluated as softplus(-z), stable for arguments of any magnitude. This is a
 * verification utility only; nothing in the filter optimizes it.
 */
double dpo_loss(double chosen_ratio_sum, double rejected_ratio_sum, double beta);

}  // namespace biasfilter
