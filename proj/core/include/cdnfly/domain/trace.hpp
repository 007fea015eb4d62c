/*
 * Copyright 2026 The cdn-flyprov Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef CDNFLY_DOMAIN_TRACE_HPP_
#define CDNFLY_DOMAIN_TRACE_HPP_

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "cdnfly/domain/types.hpp"

namespace cdnfly {

// Canonical action labels. The provisioning flow is numbered F4.1..F4.16,
// the post-provisioning flow F5.1..F5.12; labels carry a short slug so raw
// traces read without a decoder ring.
namespace actions {
inline constexpr const char* kSelectPod = "F4.1-select-pod";
inline constexpr const char* kCatalogueRequest = "F4.2-catalogue-request";
inline constexpr const char* kCatalogueResponse = "F4.3-catalogue-response";
inline constexpr const char* kProvisionRequest = "F4.4-provision-request";
inline constexpr const char* kDeployRequest = "F4.5-deploy-request";
inline constexpr const char* kPackageFetchRequest = "F4.6-package-fetch-request";
inline constexpr const char* kPackageFetchResponse =
    "F4.7-package-fetch-response";
inline constexpr const char* kDeployExecute = "F4.8-deploy-execute";
inline constexpr const char* kDeployAck = "F4.9-deploy-ack";
inline constexpr const char* kOrchestrateRequest = "F4.10-orchestrate-request";
inline constexpr const char* kPlanFetchRequest = "F4.11-plan-fetch-request";
inline constexpr const char* kPlanFetchResponse = "F4.12-plan-fetch-response";
inline constexpr const char* kOrchestrateExecute = "F4.13-orchestrate-execute";
inline constexpr const char* kOrchestrateAck = "F4.14-orchestrate-ack";
inline constexpr const char* kProvisionAck = "F4.15-provision-ack";
inline constexpr const char* kPostDeploymentStart =
    "F4.16-post-deployment-start";
inline constexpr const char* kControllerInfoSend = "F5.1-controller-info-send";
inline constexpr const char* kRegisterRequest = "F5.2-register-request";
inline constexpr const char* kContentPlacement = "F5.3-content-placement";
inline constexpr const char* kPlacementResponse = "F5.4-placement-response";
inline constexpr const char* kContentPullRequest = "F5.5-content-pull-request";
inline constexpr const char* kContentPullResponse =
    "F5.6-content-pull-response";
inline constexpr const char* kReadyNotify = "F5.7-ready-notify";
}  // namespace actions

// The reference order a conformant provisioning run must follow: F4.2..F4.15
// followed by F5.1..F5.7, one event each.
const std::vector<std::string>& provisioning_reference();

struct TraceConformance {
  bool conformant = false;
  // Index into the reference where the trace first diverges (only meaningful
  // when !conformant).
  std::size_t divergence_index = 0;
  std::string detail;
};

// Compares the subsequence of reference-labeled events in `trace` (already
// filtered to one correlation_id) against `reference`: conformant iff that
// subsequence equals the reference exactly, in order and multiplicity.
TraceConformance check_trace_order(const std::vector<TraceEvent>& trace,
                                   const std::vector<std::string>& reference);

// Convenience: keep only events carrying the given correlation id, in seq
// order.
std::vector<TraceEvent> filter_by_correlation(
    const std::vector<TraceEvent>& trace, const std::string& correlation_id);

// ---------------------------------------------------------------------------
// Emission

// Where services hand their events. Implementations assign no seq; ordering
// belongs to the collector.
class TraceSink {
 public:
  virtual ~TraceSink() = default;
  virtual void record(const TraceEvent& event) = 0;
};

class NullTraceSink final : public TraceSink {
 public:
  void record(const TraceEvent&) override {}
};

// In-memory collector: assigns the global arrival sequence number per run.
class TraceLog final : public TraceSink {
 public:
  void record(const TraceEvent& event) override;
  std::vector<TraceEvent> events() const;
  std::vector<TraceEvent> events_for(const std::string& correlation_id) const;
  void clear();

 private:
  mutable std::mutex mu_;
  std::uint64_t next_seq_ = 1;
  std::vector<TraceEvent> events_;
};

// Stamps the event with the emitting service's monotonic time and hands it
// to the sink. Null sink pointers are allowed and mean "tracing off".
void emit_trace(const std::shared_ptr<TraceSink>& sink,
                const std::string& actor, const std::string& action,
                const std::string& correlation_id);

}  // namespace cdnfly

#endif  // CDNFLY_DOMAIN_TRACE_HPP_
