#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "biasfilter/errors.hpp"

namespace biasfilter {

// ---------------------------------------------------------------------------
// Prompts
// ---------------------------------------------------------------------------

/// 0-99 bias rating prompt template; the content slot is the literal "{}".
const std::string& bias_score_prompt_template();

/// Multi-turn yes/no prompt template with slots "[toxic sentence]" and a
/// trailing answer position after "Here is the Answer: ".
const std::string& bias_rate_prompt_template();

std::string render_bias_score_prompt(const std::string& content);
std::string render_bias_rate_prompt(const std::string& toxic_reference,
                                    const std::string& answer);

// ---------------------------------------------------------------------------
// Verdicts
// ---------------------------------------------------------------------------

enum class VerdictKind { score_0_99, biased_yes_no };

struct JudgeVerdict {
  VerdictKind kind = VerdictKind::score_0_99;
  std::optional<int> score;    // present iff kind == score_0_99 and parse succeeded
  std::optional<bool> biased;  // present iff kind == biased_yes_no and parse succeeded
  std::string raw_reply;       // last reply received
  uint32_t attempts = 0;
  bool failed = false;  // parse retries exhausted
  std::string error;

  bool valid() const { return !failed; }
};

/// Judge transport abstraction; the HTTP implementation wraps a chat endpoint.
class ChatClient {
 public:
  virtual ~ChatClient() = default;
  virtual std::string complete(const std::string& user_content, double temperature) = 0;
};

struct JudgeOptions {
  uint32_t max_parse_retries = 3;  // total attempts = 1 + retries
  double temperature = 0.0;
};

/**
 * Rate a piece of content for stereotypical bias on the 0-99 scale.
 *
 * The first reply must be a bare integer (the prompt demands exactly that);
 * retry replies are parsed leniently (first embedded integer in range). After
 * the retry budget the verdict comes back failed, never thrown.
 */
JudgeVerdict judge_bias_score(const std::string& content, ChatClient& judge,
                              const JudgeOptions& options = {});

struct DialogueTurn {
  std::string role;  // "user" / "assistant"
  std::string text;
};

/**
 * Yes/no verdict for a dialogue's final answer against a toxic reference
 * opinion. Replies are matched on their first word: "Yes" -> biased,
 * "No" -> not biased (case-insensitive, leading whitespace ignored).
 */
JudgeVerdict judge_bias_rate(std::span<const DialogueTurn> dialogue,
                             const std::string& toxic_reference, ChatClient& judge,
                             const JudgeOptions& options = {});

// ---------------------------------------------------------------------------
// Preference pairs
// ---------------------------------------------------------------------------

enum class Task { continuation, conversation };
enum class Axis { age, gender, race, religion };

const char* to_string(Task task);
const char* to_string(Axis axis);
Task task_from_string(const std::string& name);
Axis axis_from_string(const std::string& name);

struct ScoredResponse {
  std::string prompt_key;  // groups responses; first appearance fixes output order
  std::string prompt_text;
  std::string response_text;
  std::string model;
  int score = -1;  // 0..99; negative = unscored (ignored)
  Task task = Task::continuation;
  Axis axis = Axis::age;
};

struct PreferencePair {
  std::string prompt;
  std::string chosen;
  std::string rejected;
  int chosen_score = 0;
  int rejected_score = 0;
  Task task = Task::continuation;
  Axis axis = Axis::age;

  /// rejected - chosen >= min_gap and chosen < rejected; throws on violation.
  void check(int min_gap = 15) const;
};

struct PairBuildResult {
  std::vector<PreferencePair> pairs;
  std::vector<std::string> warnings;  // prompts skipped for < 2 scored responses
};

/// Optional second judging pass applied to the chosen/rejected candidates
/// before the score-gap filter; returns the fresh score.
using RescoreFn = std::function<int(const ScoredResponse&)>;

/**
 * Per prompt: chosen = lowest-score response, rejected = highest-score
 * response (ties to the lowest response index); the pair is kept only when
 * the gap is at least `min_gap`. Pure function of its input; output follows
 * input prompt order.
 */
PairBuildResult build_pairs(std::span<const ScoredResponse> responses, int min_gap = 15,
                            const RescoreFn& rejudge = nullptr);

// ---------------------------------------------------------------------------
// Rate limiting
// ---------------------------------------------------------------------------

/// Global requests-per-minute limiter for judge calls. 0 = unlimited.
class RateLimiter {
 public:
  explicit RateLimiter(uint32_t requests_per_minute = 0);

  /// Blocks until a slot is available.
  void acquire();

 private:
  uint32_t rpm_;
  std::mutex mutex_;
  std::chrono::steady_clock::time_point next_slot_;
};

}  // namespace biasfilter
