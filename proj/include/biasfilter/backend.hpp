#pragma once

#include <atomic>
#include <cstdint>
#include <string>
#include <vector>

#include "biasfilter/core.hpp"
#include "biasfilter/rng.hpp"

namespace biasfilter {

/// Connection and protocol parameters for one endpoint.
struct BackendSpec {
  std::string base_url;        // e.g. http://127.0.0.1:8000
  std::string model;           // model name sent on the wire
  std::string api_key_env;     // env var holding the bearer token ("" = none)
  int timeout_ms = 30000;      // per attempt
  int max_retries = 3;
  int backoff_ms = 250;        // doubled per retry
  int max_concurrent = 8;
};

struct SamplingParams {
  double temperature = 1.0;
  uint32_t top_k = 0;  // 0 = unlimited
};

struct GenerationRequest {
  std::string prompt;
  std::string prefix;  // previously generated text, appended after the prompt
  uint32_t budget = 0;  // max new tokens
  SamplingParams sampling;
  RandomStream rng{0};
};

struct GenerationResult {
  std::string text;  // continuation only; engine appends it to the prefix
  uint32_t token_count = 0;
  bool finished = false;  // stop token emitted before the budget was spent
  uint32_t retries = 0;
};

struct Capabilities {
  uint32_t max_context = 0;  // 0 = unknown/unlimited
  bool supports_n_sampling = false;
  bool returns_logprobs = false;
};

/// Monotonic per-backend counters, shared-safe.
struct BackendStats {
  std::atomic<uint64_t> generate_calls{0};
  std::atomic<uint64_t> score_calls{0};
  std::atomic<uint64_t> retries{0};
};

/// Samples continuations from the base model being filtered.
class GenerationBackend {
 public:
  virtual ~GenerationBackend() = default;

  virtual Capabilities capabilities() const = 0;
  virtual GenerationResult generate(const GenerationRequest& request) = 0;

  const BackendStats& stats() const { return stats_; }

 protected:
  BackendStats stats_;
};

/**
 * Teacher-forced scorer over a policy/reference pair.
 *
 * score() re-tokenizes the supplied completion text (never generator token
 * ids) and returns one TokenScore per reported token, covering exactly the
 * completion span. Policy and reference must agree on token boundaries;
 * a mismatch raises AlignmentError.
 */
class ScoringBackend {
 public:
  virtual ~ScoringBackend() = default;

  virtual std::vector<TokenScore> score(const std::string& prompt,
                                        const std::string& completion) = 0;

  /// Startup probe: can this pair echo per-token logprobs for supplied text?
  virtual bool probe_echo_logprobs() = 0;

  const BackendStats& stats() const { return stats_; }

 protected:
  BackendStats stats_;
};

}  // namespace biasfilter
