#include "biasfilter/reward.hpp"

#include <cmath>

#include "biasfilter/errors.hpp"

namespace biasfilter {

const char* to_string(WeightScheme scheme) {
  switch (scheme) {
    case WeightScheme::position_harmonic:
      return "position_harmonic";
    case WeightScheme::uniform:
      return "uniform";
  }
  return "unknown";
}

WeightScheme weight_scheme_from_string(const std::string& name) {
  if (name == "position_harmonic") return WeightScheme::position_harmonic;
  if (name == "uniform") return WeightScheme::uniform;
  throw ConfigError("unknown weight scheme: " + name);
}

namespace {

double checked_ratio(const TokenScore& token) {
  if (!std::isfinite(token.policy_logprob))
    throw ScoringError("non-finite policy logprob", token.absolute_position);
  if (!std::isfinite(token.reference_logprob))
    throw ScoringError("non-finite reference logprob", token.absolute_position);
  return token.policy_logprob - token.reference_logprob;
}

/// Unweighted log-ratio sum, left-to-right.
double ratio_sum(std::span<const TokenScore> tokens) {
  double sum = 0.0;
  for (const TokenScore& token : tokens) sum += checked_ratio(token);
  return sum;
}

}  // namespace

double partial_reward(std::span<const TokenScore> tokens, const RewardWeights& weights) {
  if (tokens.empty()) return 0.0;
  if (weights.scheme == WeightScheme::uniform)
    return ratio_sum(tokens) / static_cast<double>(tokens.size());

  double sum = 0.0;
  for (size_t i = 0; i < tokens.size(); ++i) {
    const TokenScore& token = tokens[i];
    if (token.absolute_position != i)
      throw ContractViolation("token position " + std::to_string(token.absolute_position) +
                              " does not match sequence index " + std::to_string(i));
    sum += checked_ratio(token) / static_cast<double>(i + 1);
  }
  return sum;
}

double extend_reward(double prev_reward, size_t prev_length,
                     std::span<const TokenScore> new_tokens, const RewardWeights& weights) {
  for (size_t i = 0; i < new_tokens.size(); ++i) {
    if (new_tokens[i].absolute_position != prev_length + i)
      throw ContractViolation("extension token at position " +
                              std::to_string(new_tokens[i].absolute_position) +
                              " does not continue from length " + std::to_string(prev_length));
  }
  if (new_tokens.empty()) return prev_reward;

  if (weights.scheme == WeightScheme::uniform) {
    // The uniform weight is 1/total-length, so earlier terms rescale: recover
    // the raw sum, add the new ratios, renormalize.
    const double prev_sum = prev_reward * static_cast<double>(prev_length);
    const double total = prev_sum + ratio_sum(new_tokens);
    return total / static_cast<double>(prev_length + new_tokens.size());
  }

  double reward = prev_reward;
  for (const TokenScore& token : new_tokens)
    reward += checked_ratio(token) / static_cast<double>(token.absolute_position + 1);
  return reward;
}

double dpo_loss(double chosen_ratio_sum, double rejected_ratio_sum, double beta) {
  const double z = beta * chosen_ratio_sum - beta * rejected_ratio_sum;
  // -log sigmoid(z) = softplus(-z), split to avoid exp overflow.
  if (z >= 0.0) return std::log1p(std::exp(-z));
  return -z + std::log1p(std::exp(z));
}

}  // namespace biasfilter
