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

#ifndef CDNFLY_WORKFLOW_ENGINE_HPP_
#define CDNFLY_WORKFLOW_ENGINE_HPP_

#include <atomic>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cdnfly/domain/error.hpp"
#include "cdnfly/domain/trace.hpp"
#include "cdnfly/domain/types.hpp"
#include "cdnfly/workflow/repository.hpp"

namespace cdnfly::workflow {

struct StepFailure {
  std::size_t step_index = 0;
  std::string instance_id;
  Err cause = Err::kStepCallFailed;
};

// One outbound attempt made while executing a plan; kept so tests can check
// call grouping, ordering and retry bounds.
struct CallRecord {
  std::size_t step_index = 0;
  StepKind kind = StepKind::kCollectAccessInfo;
  std::string instance_id;
  int attempt = 1;  // 1-based
  bool ok = false;
};

enum class ExecOutcome { kRunning, kSucceeded, kFailed };

struct PlanExecution {
  std::string execution_id;
  std::string plan_id;
  std::string component_id;
  std::size_t step_cursor = 0;            // index of the next step to run
  std::vector<int> step_attempts;         // total attempts per step
  ExecOutcome outcome = ExecOutcome::kRunning;
  std::optional<StepFailure> failure;
  std::vector<CallRecord> calls;

  // Attempts made for one target within one step (retry bound: never more
  // than 1 + retry_limit).
  int attempts_for(std::size_t step_index, const std::string& instance_id) const;
};

// Executes orchestration plans step by step against freshly deployed
// microservice instances. Sequential, no fan-out: instances are contacted in
// instance_id lexicographic order so traces stay deterministic. There is no
// compensation on failure; dispose is the recovery path.
class Orchestrator {
 public:
  struct Options {
    std::string actor = "microservice-orchestrator";
    int retry_delay_ms = 0;
  };

  Orchestrator(const WorkflowRepository& repo, std::shared_ptr<TraceSink> sink);
  Orchestrator(const WorkflowRepository& repo, std::shared_ptr<TraceSink> sink,
               Options options);

  // Int. E entry point: fetches the plan from the repository and executes
  // it. Throws CdnError(kPlanNotFound) for unknown plans.
  PlanExecution orchestrate(const std::string& plan_id,
                            ProvisionRecord& record,
                            const std::string& correlation_id);

  // Runs a plan over the record's instances. On success every instance has
  // the peer table {all instances} \ {itself} and is marked orchestrated.
  // A step exhausting its retries yields outcome kFailed with the failing
  // step index and instance; already-completed steps are not undone.
  PlanExecution execute(const OrchestrationPlan& plan, ProvisionRecord& record,
                        const std::string& correlation_id);

  // Int. G: overwrite the target's peer table (idempotent). Throws
  // CdnError(kStepCallFailed) on timeout/refusal/non-2xx.
  static void distribute_peer_info(const MicroserviceInstance& target,
                                   const std::vector<PeerInfo>& peers,
                                   int timeout_ms);

  static void verify_health(const MicroserviceInstance& target,
                            int timeout_ms);

 private:
  const WorkflowRepository& repo_;
  std::shared_ptr<TraceSink> sink_;
  Options options_;
  std::atomic<int> next_execution_{1};
};

}  // namespace cdnfly::workflow

#endif  // CDNFLY_WORKFLOW_ENGINE_HPP_
