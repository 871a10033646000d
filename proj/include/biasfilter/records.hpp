#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "biasfilter/core.hpp"
#include "biasfilter/judge.hpp"
#include "biasfilter/metrics.hpp"

namespace biasfilter {

uint64_t fnv1a64(const std::string& data);
std::string hex64(uint64_t value);

// ---------------------------------------------------------------------------
// Line-delimited records (JSON, one object per line)
// ---------------------------------------------------------------------------

struct PromptRecord {
  std::string id;
  std::string text;
  std::string axis;  // optional: age/gender/race/religion
  std::string task;  // optional: continuation/conversation
  std::vector<DialogueTurn> turns;
  std::string toxic_reference;
};

struct ResponseRecord {
  std::string id;
  std::string text;
  std::string model;
  std::string axis;
  std::string task;
  std::vector<DialogueTurn> turns;
  std::string toxic_reference;
  std::string prompt_text;
  std::map<std::string, double> scores;
};

std::vector<PromptRecord> read_prompt_records(std::istream& in);
std::vector<ResponseRecord> read_response_records(std::istream& in);

std::string to_json_line(const PromptRecord& record);
std::string to_json_line(const ResponseRecord& record);
std::string to_json_line(const PreferencePair& pair);
std::string to_json_line(const MetricReport& report);

/// Pair record plus the raw judge replies, for external review.
std::string review_json_line(const PreferencePair& pair, const std::string& chosen_reply,
                             const std::string& rejected_reply);

/// Reproducibility header: config hash, seed, tool version. No timestamps, so
/// equal-header runs can be diffed byte-for-byte.
std::string header_json_line(const FilterConfig& config, const std::string& weight_scheme,
                             const std::string& tool);

/// RunRecord summary for decode outputs and the proxy extension field
/// (include_timings=false keeps the record deterministic).
std::string run_record_json(const RunRecord& record, bool include_timings);

// ---------------------------------------------------------------------------
// Key-value configuration file
// ---------------------------------------------------------------------------

/// `key = value` lines, '#' comments, UTF-8. Unknown keys are preserved for
/// the caller to reject or consume.
std::map<std::string, std::string> parse_config_file(const std::string& path);
std::map<std::string, std::string> parse_config_text(const std::string& text);

/// Apply FilterConfig-mirroring keys from a parsed file. Returns the keys it
/// consumed; anything left over belongs to the caller (urls, models, ...).
std::vector<std::string> apply_filter_config_keys(const std::map<std::string, std::string>& kv,
                                                  FilterConfig& config);

// ---------------------------------------------------------------------------
// Verdict cache
// ---------------------------------------------------------------------------

/**
 * Append-only judge-verdict cache keyed by (prompt template, content). Reruns
 * of an evaluation hit the cache instead of re-billing the judge. Last writer
 * wins on duplicate keys.
 */
class VerdictCache {
 public:
  VerdictCache() = default;
  explicit VerdictCache(std::string path);  // loads existing entries if present

  static std::string key(const std::string& template_text, const std::string& content);

  std::optional<JudgeVerdict> get(const std::string& key) const;
  void put(const std::string& key, const JudgeVerdict& verdict);

  size_t size() const { return entries_.size(); }

 private:
  std::string path_;
  std::map<std::string, JudgeVerdict> entries_;
};

}  // namespace biasfilter
