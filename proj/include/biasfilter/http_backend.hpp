#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "biasfilter/backend.hpp"
#include "biasfilter/core.hpp"

namespace biasfilter {

// ---------------------------------------------------------------------------
// Wire bodies (pure functions, golden-fixture tested)
// ---------------------------------------------------------------------------

/// OpenAI-compatible /v1/completions body for sampling a continuation.
std::string build_generation_request_body(const std::string& model, const std::string& full_prompt,
                                          uint32_t budget, const SamplingParams& sampling,
                                          uint64_t seed);

/// /v1/completions body for teacher-forced echo scoring of supplied text.
std::string build_echo_score_request_body(const std::string& model, const std::string& text);

/// /v1/chat/completions body for a single-user-message judge call.
std::string build_chat_request_body(const std::string& model, const std::string& user_content,
                                    double temperature);

// ---------------------------------------------------------------------------
// HTTP client
// ---------------------------------------------------------------------------

struct ScoredToken {
  std::string token_text;
  double logprob = 0.0;
};

struct HttpResult {
  int status = 0;
  std::string body;
  uint32_t retries = 0;
};

/**
 * Thin client for one OpenAI-compatible endpoint. Transport failures, 5xx and
 * 429 are retried with exponential backoff up to spec.max_retries; other 4xx
 * fail immediately with a body excerpt. Safe to share across threads.
 */
class HttpEndpoint {
 public:
  explicit HttpEndpoint(BackendSpec spec);
  ~HttpEndpoint();

  HttpEndpoint(const HttpEndpoint&) = delete;
  HttpEndpoint& operator=(const HttpEndpoint&) = delete;

  const BackendSpec& spec() const { return spec_; }

  /// POST with retry policy. Throws BackendError after the final attempt.
  HttpResult post_json(const std::string& path, const std::string& body);

  /// GET without retries; returns status 0 on transport failure (no throw).
  int get_status(const std::string& path);

 private:
  struct Impl;
  BackendSpec spec_;
  std::unique_ptr<Impl> impl_;
};

/// Continuation sampling via /v1/completions against `endpoint`.
GenerationResult http_generate(HttpEndpoint& endpoint, const std::string& full_prompt,
                               uint32_t budget, const SamplingParams& sampling, uint64_t seed);

/**
 * Teacher-forced per-token logprobs for `completion` given `prompt`, via
 * echo scoring (text submitted as the prompt, zero new tokens). The prompt
 * span is excluded by text-offset bookkeeping; a token straddling the join is
 * attributed to the prompt.
 */
std::vector<ScoredToken> http_score(HttpEndpoint& endpoint, const std::string& prompt,
                                    const std::string& completion);

/// Single chat-completion call; returns the assistant message content.
std::string http_chat(HttpEndpoint& endpoint, const std::string& user_content,
                      double temperature);

// ---------------------------------------------------------------------------
// Backend adapters
// ---------------------------------------------------------------------------

class HttpGenerationBackend final : public GenerationBackend {
 public:
  explicit HttpGenerationBackend(BackendSpec spec);

  Capabilities capabilities() const override;
  GenerationResult generate(const GenerationRequest& request) override;

  /// Any HTTP response at all counts as reachable.
  bool probe_reachable();

 private:
  HttpEndpoint endpoint_;
};

/**
 * Scoring pair over two endpoints sharing a tokenizer. Both are queried for
 * every completion; mismatched token boundaries raise AlignmentError rather
 * than trusting configuration.
 */
class HttpScoringBackend final : public ScoringBackend {
 public:
  HttpScoringBackend(BackendSpec policy, BackendSpec reference);

  std::vector<TokenScore> score(const std::string& prompt,
                                const std::string& completion) override;
  bool probe_echo_logprobs() override;

  HttpEndpoint& policy_endpoint() { return policy_; }
  HttpEndpoint& reference_endpoint() { return reference_; }

 private:
  HttpEndpoint policy_;
  HttpEndpoint reference_;
};

}  // namespace biasfilter
