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

#include "cdnfly/workflow/engine.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <thread>

#include "cdnfly/domain/json.hpp"
#include "cdnfly/util/http.hpp"

namespace cdnfly::workflow {

namespace {

std::vector<const MicroserviceInstance*> sorted_instances(
    const ProvisionRecord& record, const std::optional<Role>& role_filter) {
  std::vector<const MicroserviceInstance*> out;
  for (const auto& instance : record.instances) {
    if (!role_filter || instance.role == *role_filter) {
      out.push_back(&instance);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const MicroserviceInstance* a, const MicroserviceInstance* b) {
              return a->instance_id < b->instance_id;
            });
  return out;
}

}  // namespace

int PlanExecution::attempts_for(std::size_t step_index,
                                const std::string& instance_id) const {
  int n = 0;
  for (const auto& call : calls) {
    if (call.step_index == step_index && call.instance_id == instance_id) ++n;
  }
  return n;
}

Orchestrator::Orchestrator(const WorkflowRepository& repo,
                           std::shared_ptr<TraceSink> sink)
    : Orchestrator(repo, std::move(sink), Options{}) {}

Orchestrator::Orchestrator(const WorkflowRepository& repo,
                           std::shared_ptr<TraceSink> sink, Options options)
    : repo_(repo), sink_(std::move(sink)), options_(std::move(options)) {}

PlanExecution Orchestrator::orchestrate(const std::string& plan_id,
                                        ProvisionRecord& record,
                                        const std::string& correlation_id) {
  emit_trace(sink_, options_.actor, actions::kPlanFetchRequest,
             correlation_id);
  OrchestrationPlan plan = repo_.load(plan_id);
  emit_trace(sink_, options_.actor, actions::kPlanFetchResponse,
             correlation_id);
  return execute(plan, record, correlation_id);
}

PlanExecution Orchestrator::execute(const OrchestrationPlan& plan,
                                    ProvisionRecord& record,
                                    const std::string& correlation_id) {
  emit_trace(sink_, options_.actor, actions::kOrchestrateExecute,
             correlation_id);

  PlanExecution execution;
  execution.execution_id =
      "exec-" + std::to_string(next_execution_.fetch_add(1));
  execution.plan_id = plan.plan_id;
  execution.component_id = record.component_id;
  execution.step_attempts.assign(plan.steps.size(), 0);

  // The collect step snapshots the deployed access infos; later steps push
  // them out and verify the result.
  std::vector<PeerInfo> all_peers;

  for (std::size_t step_index = 0; step_index < plan.steps.size();
       ++step_index) {
    const WorkflowStep& step = plan.steps[step_index];
    execution.step_cursor = step_index;

    auto run_per_instance =
        [&](const std::function<void(const MicroserviceInstance&)>& call)
        -> bool {
      for (const auto* instance :
           sorted_instances(record, step.target_role)) {
        bool done = false;
        for (int attempt = 1; attempt <= 1 + step.retry_limit; ++attempt) {
          ++execution.step_attempts[step_index];
          CallRecord call_record{step_index, step.kind, instance->instance_id,
                                 attempt, false};
          try {
            call(*instance);
            call_record.ok = true;
            execution.calls.push_back(call_record);
            done = true;
            break;
          } catch (const CdnError&) {
            execution.calls.push_back(call_record);
            if (attempt <= step.retry_limit && options_.retry_delay_ms > 0) {
              std::this_thread::sleep_for(
                  std::chrono::milliseconds(options_.retry_delay_ms));
            }
          }
        }
        if (!done) {
          execution.outcome = ExecOutcome::kFailed;
          execution.failure = StepFailure{step_index, instance->instance_id,
                                          Err::kOrchestrationStepFailed};
          return false;
        }
      }
      return true;
    };

    switch (step.kind) {
      case StepKind::kCollectAccessInfo: {
        // Local read of the deployment ack: no remote calls.
        all_peers.clear();
        for (const auto* instance : sorted_instances(record, std::nullopt)) {
          all_peers.push_back(PeerInfo::from_instance(*instance));
        }
        ++execution.step_attempts[step_index];
        break;
      }
      case StepKind::kDistributePeerInfo: {
        if (all_peers.empty()) {
          for (const auto* instance : sorted_instances(record, std::nullopt)) {
            all_peers.push_back(PeerInfo::from_instance(*instance));
          }
        }
        const bool ok = run_per_instance([&](const MicroserviceInstance& target) {
          std::vector<PeerInfo> peers;
          for (const auto& peer : all_peers) {
            if (peer.instance_id != target.instance_id) peers.push_back(peer);
          }
          distribute_peer_info(target, peers, step.timeout);
        });
        if (!ok) return execution;
        break;
      }
      case StepKind::kVerifyHealth: {
        const bool ok = run_per_instance([&](const MicroserviceInstance& target) {
          verify_health(target, step.timeout);
        });
        if (!ok) return execution;
        break;
      }
      case StepKind::kNotifyComplete: {
        for (auto& instance : record.instances) {
          if (instance.state == InstanceState::kDeployed) {
            instance.state = InstanceState::kOrchestrated;
          }
        }
        ++execution.step_attempts[step_index];
        break;
      }
    }
  }

  // An empty plan still counts as success: nothing to wire.
  if (plan.steps.empty() ||
      !std::any_of(plan.steps.begin(), plan.steps.end(),
                   [](const WorkflowStep& s) {
                     return s.kind == StepKind::kNotifyComplete;
                   })) {
    for (auto& instance : record.instances) {
      if (instance.state == InstanceState::kDeployed) {
        instance.state = InstanceState::kOrchestrated;
      }
    }
  }

  execution.step_cursor = plan.steps.size();
  execution.outcome = ExecOutcome::kSucceeded;
  return execution;
}

void Orchestrator::distribute_peer_info(const MicroserviceInstance& target,
                                        const std::vector<PeerInfo>& peers,
                                        int timeout_ms) {
  const auto result = http::post_json(target.control_access, "/peers",
                                      nlohmann::json(peers), timeout_ms);
  if (!result.ok()) {
    throw CdnError(Err::kStepCallFailed,
                   "peer distribution to " + target.instance_id + " failed");
  }
}

void Orchestrator::verify_health(const MicroserviceInstance& target,
                                 int timeout_ms) {
  const auto result = http::get(target.control_access, "/health", timeout_ms);
  if (!result.ok()) {
    throw CdnError(Err::kStepCallFailed,
                   "health check of " + target.instance_id + " failed");
  }
}

}  // namespace cdnfly::workflow
