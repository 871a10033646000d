#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "biasfilter/backend.hpp"
#include "biasfilter/core.hpp"
#include "biasfilter/engine.hpp"

namespace biasfilter {

/// One proxied upstream plus its scoring pair and filter defaults.
struct ProxyRoute {
  BackendSpec upstream;
  BackendSpec policy;
  BackendSpec reference;
  std::string mock_world_path;  // non-empty: mock world serves as upstream AND scorer
  FilterConfig defaults;
  RewardWeights weights;
  int parallelism = 1;
  bool passthrough = false;
  int max_in_flight = 32;
};

/// Counters and per-phase latency histograms, exposed as plain text.
class ServiceMetrics {
 public:
  void record_request(bool ok);
  void record_retries(uint64_t n);
  void record_phase_ms(const std::string& phase, double ms);
  std::string exposition() const;

 private:
  static constexpr double kBucketsMs[] = {1, 5, 10, 50, 100, 500, 1000, 5000};
  struct Histogram {
    std::atomic<uint64_t> buckets[9]{};
    std::atomic<uint64_t> count{0};
    std::atomic<double> sum_ms{0.0};
  };
  std::atomic<uint64_t> requests_total_{0};
  std::atomic<uint64_t> requests_failed_{0};
  std::atomic<uint64_t> retries_total_{0};
  Histogram sample_, score_, select_;
  Histogram* histogram(const std::string& phase);
  const Histogram* histogram(const std::string& phase) const;
};

/**
 * OpenAI-compatible proxy that applies the segment filter between client and
 * upstream.
 *
 *   POST /v1/completions       filtered (or relayed verbatim in passthrough)
 *   POST /v1/chat/completions  messages flattened to a prompt, then as above
 *   GET  /healthz              endpoint reachability + echo-capability probe
 *   GET  /metrics              counter/histogram text exposition
 *
 * Per-request overrides ride in the "biasfilter" extension object (or the
 * x-biasfilter-seed header); the response carries a "biasfilter" object with
 * the run summary. Requests are isolated: overrides never leak across them.
 */
class ProxyServer {
 public:
  explicit ProxyServer(ProxyRoute route);
  ~ProxyServer();

  ProxyServer(const ProxyServer&) = delete;
  ProxyServer& operator=(const ProxyServer&) = delete;

  /// Binds and serves on a background thread. port 0 picks a free port.
  /// Returns the bound port.
  int start(const std::string& host, int port);

  /// Stops accepting, then drains in-flight decodes.
  void stop();

  ServiceMetrics& metrics() { return metrics_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  ServiceMetrics metrics_;
};

}  // namespace biasfilter
