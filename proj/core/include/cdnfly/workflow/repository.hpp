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

#ifndef CDNFLY_WORKFLOW_REPOSITORY_HPP_
#define CDNFLY_WORKFLOW_REPOSITORY_HPP_

#include <json.hpp>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cdnfly/domain/types.hpp"

namespace cdnfly::workflow {

// Holds the pre-defined orchestration plans. Content is loaded at startup
// (JSON file or seeded in code) and read-mostly afterwards.
class WorkflowRepository {
 public:
  void store(OrchestrationPlan plan);

  // Returns the stored plan unmodified; throws CdnError(kPlanNotFound) for
  // unknown ids.
  OrchestrationPlan load(const std::string& plan_id) const;

  bool contains(const std::string& plan_id) const;
  std::set<std::string> plan_ids() const;

  // Plan-definition file: a JSON array of OrchestrationPlan objects.
  static WorkflowRepository from_json(const nlohmann::json& plans);
  static WorkflowRepository from_file(const std::string& path);

 private:
  std::map<std::string, OrchestrationPlan> plans_;
};

// The in-box plan wiring a cache node and an ABR streaming server into one
// surrogate: collect the deployed access infos, push every instance the
// peer set, health-check each one, then mark the component done.
OrchestrationPlan abr_wire_plan_v1();

}  // namespace cdnfly::workflow

#endif  // CDNFLY_WORKFLOW_REPOSITORY_HPP_
