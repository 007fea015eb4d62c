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

#include "cdnfly/domain/trace.hpp"

#include <algorithm>
#include <unordered_set>

#include "cdnfly/util/clock.hpp"

namespace cdnfly {

const std::vector<std::string>& provisioning_reference() {
  static const std::vector<std::string> kReference{
      actions::kCatalogueRequest,    actions::kCatalogueResponse,
      actions::kProvisionRequest,    actions::kDeployRequest,
      actions::kPackageFetchRequest, actions::kPackageFetchResponse,
      actions::kDeployExecute,       actions::kDeployAck,
      actions::kOrchestrateRequest,  actions::kPlanFetchRequest,
      actions::kPlanFetchResponse,   actions::kOrchestrateExecute,
      actions::kOrchestrateAck,      actions::kProvisionAck,
      actions::kControllerInfoSend,  actions::kRegisterRequest,
      actions::kContentPlacement,    actions::kPlacementResponse,
      actions::kContentPullRequest,  actions::kContentPullResponse,
      actions::kReadyNotify,
  };
  return kReference;
}

TraceConformance check_trace_order(const std::vector<TraceEvent>& trace,
                                   const std::vector<std::string>& reference) {
  std::unordered_set<std::string> labels(reference.begin(), reference.end());

  std::vector<const TraceEvent*> observed;
  for (const auto& event : trace) {
    if (labels.contains(event.action)) observed.push_back(&event);
  }

  TraceConformance result;
  const std::size_t n = std::min(observed.size(), reference.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (observed[i]->action != reference[i]) {
      result.divergence_index = i;
      result.detail = "expected " + reference[i] + ", observed " +
                      observed[i]->action + " (seq " +
                      std::to_string(observed[i]->seq) + ")";
      return result;
    }
  }
  if (observed.size() < reference.size()) {
    result.divergence_index = observed.size();
    result.detail = "trace ended before " + reference[observed.size()];
    return result;
  }
  if (observed.size() > reference.size()) {
    result.divergence_index = reference.size();
    result.detail = "unexpected extra " + observed[reference.size()]->action +
                    " after the reference sequence";
    return result;
  }
  result.conformant = true;
  return result;
}

std::vector<TraceEvent> filter_by_correlation(
    const std::vector<TraceEvent>& trace, const std::string& correlation_id) {
  std::vector<TraceEvent> out;
  for (const auto& event : trace) {
    if (event.correlation_id == correlation_id) out.push_back(event);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const TraceEvent& a, const TraceEvent& b) {
                     return a.seq < b.seq;
                   });
  return out;
}

void TraceLog::record(const TraceEvent& event) {
  std::lock_guard lock(mu_);
  TraceEvent stamped = event;
  stamped.seq = next_seq_++;
  events_.push_back(std::move(stamped));
}

std::vector<TraceEvent> TraceLog::events() const {
  std::lock_guard lock(mu_);
  return events_;
}

std::vector<TraceEvent> TraceLog::events_for(
    const std::string& correlation_id) const {
  return filter_by_correlation(events(), correlation_id);
}

void TraceLog::clear() {
  std::lock_guard lock(mu_);
  events_.clear();
  next_seq_ = 1;
}

void emit_trace(const std::shared_ptr<TraceSink>& sink,
                const std::string& actor, const std::string& action,
                const std::string& correlation_id) {
  if (!sink) return;
  TraceEvent event;
  event.actor = actor;
  event.action = action;
  event.t = mono_ns();
  event.correlation_id = correlation_id;
  sink->record(event);
}

}  // namespace cdnfly
