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

#include "cdnfly/workflow/repository.hpp"

#include <fstream>

#include "cdnfly/domain/error.hpp"
#include "cdnfly/domain/json.hpp"

namespace cdnfly::workflow {

void WorkflowRepository::store(OrchestrationPlan plan) {
  plans_[plan.plan_id] = std::move(plan);
}

OrchestrationPlan WorkflowRepository::load(const std::string& plan_id) const {
  const auto it = plans_.find(plan_id);
  if (it == plans_.end()) {
    throw CdnError(Err::kPlanNotFound, "no plan with id " + plan_id);
  }
  return it->second;
}

bool WorkflowRepository::contains(const std::string& plan_id) const {
  return plans_.contains(plan_id);
}

std::set<std::string> WorkflowRepository::plan_ids() const {
  std::set<std::string> ids;
  for (const auto& [id, _] : plans_) ids.insert(id);
  return ids;
}

WorkflowRepository WorkflowRepository::from_json(const nlohmann::json& plans) {
  WorkflowRepository repo;
  for (const auto& entry : plans) {
    repo.store(entry.get<OrchestrationPlan>());
  }
  return repo;
}

WorkflowRepository WorkflowRepository::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw CdnError(Err::kBadRequest, "cannot open plan file " + path);
  }
  nlohmann::json parsed;
  in >> parsed;
  return from_json(parsed);
}

OrchestrationPlan abr_wire_plan_v1() {
  OrchestrationPlan plan;
  plan.plan_id = "abr-wire-v1";
  plan.steps = {
      {StepKind::kCollectAccessInfo, std::nullopt, 3, 5000},
      {StepKind::kDistributePeerInfo, std::nullopt, 3, 5000},
      {StepKind::kVerifyHealth, std::nullopt, 3, 5000},
      {StepKind::kNotifyComplete, std::nullopt, 3, 5000},
  };
  return plan;
}

}  // namespace cdnfly::workflow
