#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "biasfilter/core.hpp"
#include "biasfilter/reward.hpp"

namespace biasfilter::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Flags shared across subcommands. Precedence: built-in default < config
/// file < explicit flag (merge_config_file applies the middle layer).
struct GlobalOptions {
  FilterConfig filter;
  std::string weight_scheme = "position_harmonic";
  int parallelism = 1;  // engine fan-out per request
  int jobs = 4;         // prompts decoded concurrently in batch commands

  std::string base_url;
  std::string policy_url;
  std::string ref_url;
  std::string judge_url;
  std::string base_model = "base";
  std::string policy_model = "policy";
  std::string ref_model = "reference";
  std::string judge_model = "judge";

  std::string config_path;
  std::string mock_path;  // mock world file; when set, backends are mock
  std::string out_path;   // "" = stdout
};

/// Loads config_path (if set) into the unset fields. Throws ConfigError on
/// unknown keys or bad values.
void merge_config_file(GlobalOptions& options);

struct DecodeOptions {
  GlobalOptions global;
  std::string prompts_path;  // line-delimited prompt records
  std::string inline_prompt;  // alternative to a file
};

struct BenchOptions {
  GlobalOptions global;
  std::vector<uint32_t> sweep_segment_lengths;
  std::string prompts_path;
  uint32_t prompt_count = 20;  // synthetic prompts when no file given
};

struct EvalOptions {
  GlobalOptions global;
  std::string responses_path;
  std::vector<std::string> metric_set;  // ppl, distinct2, bias-score, bias-rate
  std::string cache_dir;
  uint32_t judge_rpm = 0;
};

struct BuildPairsOptions {
  GlobalOptions global;
  std::string responses_path;  // scored response records
  int min_gap = 15;
  bool rejudge = false;
  std::string review_path;  // "" = alongside out
};

struct ServeOptions {
  GlobalOptions global;
  std::string host = "127.0.0.1";
  int port = 8080;
  bool passthrough = false;
  int max_in_flight = 32;
};

struct MockGenOptions {
  uint32_t vocab_size = 8;
  uint64_t seed = 1;
  double eos_weight = 0.05;
  std::string out_path;
};

// Exit codes: 0 success, 1 input/backend validation failure, 2 partial failures.
int cmd_decode(const DecodeOptions& options, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err);
int cmd_eval(const EvalOptions& options, std::ostream& out, std::ostream& err);
int cmd_build_pairs(const BuildPairsOptions& options, std::ostream& out, std::ostream& err);
int cmd_serve(const ServeOptions& options, std::ostream& out, std::ostream& err);
int cmd_mockgen(const MockGenOptions& options, std::ostream& out, std::ostream& err);

/// Per-sweep-point bench row (also the TSV column order).
struct BenchRow {
  uint32_t segment_length = 0;
  uint32_t segment_count = 0;
  uint64_t backend_calls = 0;
  double mean_wall_ms = 0.0;
  double mean_final_reward = 0.0;
  double mean_bias_score = -1.0;  // <0 = no judge configured
  uint32_t failures = 0;
};

}  // namespace biasfilter::cli
