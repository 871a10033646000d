#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "biasfilter/backend.hpp"
#include "biasfilter/core.hpp"
#include "biasfilter/rng.hpp"

namespace biasfilter {

/**
 * Desk-scale stand-in for the base, policy, and reference models.
 *
 * Order-1 Markov world over a small symbol vocabulary: each model is a row-
 * stochastic transition table indexed by the previous symbol (row 0 is the
 * start context used when the preceding text ends in no known symbol).
 * Every probability is strictly positive, so all logprobs are finite.
 *
 * Text convention: completions are symbols joined by single spaces, and a
 * continuation of a non-empty context starts with a leading space, so plain
 * string concatenation always yields well-formed text. The EOS symbol is
 * sampled but never emitted into text.
 */
struct MockWorld {
  std::vector<std::string> vocab;  // includes the EOS symbol
  uint32_t eos_index = 0;
  // tables[model][context][symbol]; context 0 = start, context i+1 = vocab[i]
  std::vector<std::vector<double>> base;
  std::vector<std::vector<double>> policy;
  std::vector<std::vector<double>> reference;

  uint32_t vocab_size() const { return static_cast<uint32_t>(vocab.size()); }
  uint32_t context_count() const { return vocab_size() + 1; }

  /// Row sums within 1e-9 of 1, all probabilities > 0, shapes consistent.
  void validate() const;

  /// Context row index for text ending at `text` (0 when no trailing symbol matches).
  uint32_t context_of(const std::string& text) const;

  int symbol_index(const std::string& symbol) const;  // -1 when unknown
};

/// Parse / serialize the line-delimited world format (vocab, eos, one row per
/// state per table). Throws ConfigError on malformed input.
MockWorld load_mock_world(const std::string& path);
MockWorld parse_mock_world(const std::string& text);
std::string format_mock_world(const MockWorld& world);

/// Seeded random world: dense positive rows, policy and reference distinct so
/// rewards discriminate. eos_weight scales the EOS column before normalization.
MockWorld make_random_world(uint32_t vocab_size, uint64_t seed, double eos_weight = 0.05);

/**
 * One sampling step: apply temperature and top-k to a table row, then pick by
 * inverse CDF with a single draw from `rng`. temperature 0 is greedy (argmax,
 * ties to the lowest index). Walks symbols in index order, so results are
 * identical across platforms and parallelism levels.
 */
uint32_t sample_symbol(const std::vector<double>& row, const SamplingParams& sampling,
                       RandomStream& rng);

class MockGenerationBackend final : public GenerationBackend {
 public:
  explicit MockGenerationBackend(MockWorld world);

  Capabilities capabilities() const override;
  GenerationResult generate(const GenerationRequest& request) override;

  const MockWorld& world() const { return world_; }

 private:
  MockWorld world_;
};

class MockScoringBackend final : public ScoringBackend {
 public:
  explicit MockScoringBackend(MockWorld world);

  std::vector<TokenScore> score(const std::string& prompt,
                                const std::string& completion) override;
  bool probe_echo_logprobs() override { return true; }

  const MockWorld& world() const { return world_; }

 private:
  MockWorld world_;
};

/// Whitespace tokenizer used by the mock world (and nothing else).
std::vector<std::string> split_symbols(const std::string& text);

}  // namespace biasfilter
