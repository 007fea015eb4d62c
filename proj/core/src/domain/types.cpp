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

#include "cdnfly/domain/types.hpp"

#include <algorithm>
#include <cctype>

#include "cdnfly/domain/error.hpp"

namespace cdnfly {

std::string normalize_region_id(std::string id) {
  std::transform(id.begin(), id.end(), id.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return id;
}

Region Region::make(std::string id, std::string display_name) {
  Region r;
  r.id = normalize_region_id(std::move(id));
  r.display_name = std::move(display_name);
  return r;
}

std::string_view instance_state_name(InstanceState s) {
  switch (s) {
    case InstanceState::kDeployed:
      return "deployed";
    case InstanceState::kOrchestrated:
      return "orchestrated";
    case InstanceState::kFailed:
      return "failed";
    case InstanceState::kUndeployed:
      return "undeployed";
  }
  return "deployed";
}

InstanceState instance_state_from_name(std::string_view name) {
  if (name == "deployed") return InstanceState::kDeployed;
  if (name == "orchestrated") return InstanceState::kOrchestrated;
  if (name == "failed") return InstanceState::kFailed;
  if (name == "undeployed") return InstanceState::kUndeployed;
  throw CdnError(Err::kBadRequest,
                 "unknown instance state: " + std::string(name));
}

bool instance_transition_allowed(InstanceState from, InstanceState to) {
  if (to == InstanceState::kUndeployed) return true;
  if (from == InstanceState::kDeployed) {
    return to == InstanceState::kOrchestrated || to == InstanceState::kFailed;
  }
  if (from == InstanceState::kOrchestrated) {
    return to == InstanceState::kFailed;
  }
  return false;
}

PeerInfo PeerInfo::from_instance(const MicroserviceInstance& instance) {
  return PeerInfo{instance.instance_id, instance.role, instance.control_access,
                  instance.data_access};
}

std::string_view provision_status_name(ProvisionStatus s) {
  switch (s) {
    case ProvisionStatus::kDeploying:
      return "deploying";
    case ProvisionStatus::kDeployed:
      return "deployed";
    case ProvisionStatus::kOrchestrating:
      return "orchestrating";
    case ProvisionStatus::kProvisioned:
      return "provisioned";
    case ProvisionStatus::kRegistered:
      return "registered";
    case ProvisionStatus::kDisposed:
      return "disposed";
    case ProvisionStatus::kFailed:
      return "failed";
  }
  return "failed";
}

ProvisionStatus provision_status_from_name(std::string_view name) {
  if (name == "deploying") return ProvisionStatus::kDeploying;
  if (name == "deployed") return ProvisionStatus::kDeployed;
  if (name == "orchestrating") return ProvisionStatus::kOrchestrating;
  if (name == "provisioned") return ProvisionStatus::kProvisioned;
  if (name == "registered") return ProvisionStatus::kRegistered;
  if (name == "disposed") return ProvisionStatus::kDisposed;
  if (name == "failed") return ProvisionStatus::kFailed;
  throw CdnError(Err::kBadRequest,
                 "unknown provision status: " + std::string(name));
}

bool provision_transition_allowed(ProvisionStatus from, ProvisionStatus to) {
  using S = ProvisionStatus;
  if (from == to) return false;
  if (to == S::kFailed) return from != S::kDisposed;
  switch (from) {
    case S::kDeploying:
      return to == S::kDeployed;
    case S::kDeployed:
      return to == S::kOrchestrating;
    case S::kOrchestrating:
      return to == S::kProvisioned;
    case S::kProvisioned:
      return to == S::kRegistered || to == S::kDisposed;
    case S::kRegistered:
      return to == S::kDisposed;
    case S::kFailed:
      return to == S::kDisposed;
    case S::kDisposed:
      return false;
  }
  return false;
}

bool is_valid_status_walk(const std::vector<ProvisionStatus>& walk) {
  if (walk.empty()) return true;
  if (walk.front() != ProvisionStatus::kDeploying) return false;
  for (std::size_t i = 1; i < walk.size(); ++i) {
    if (!provision_transition_allowed(walk[i - 1], walk[i])) return false;
  }
  return true;
}

std::string_view step_kind_name(StepKind k) {
  switch (k) {
    case StepKind::kCollectAccessInfo:
      return "collect-access-info";
    case StepKind::kDistributePeerInfo:
      return "distribute-peer-info";
    case StepKind::kVerifyHealth:
      return "verify-health";
    case StepKind::kNotifyComplete:
      return "notify-complete";
  }
  return "collect-access-info";
}

StepKind step_kind_from_name(std::string_view name) {
  if (name == "collect-access-info") return StepKind::kCollectAccessInfo;
  if (name == "distribute-peer-info") return StepKind::kDistributePeerInfo;
  if (name == "verify-health") return StepKind::kVerifyHealth;
  if (name == "notify-complete") return StepKind::kNotifyComplete;
  throw CdnError(Err::kBadRequest, "unknown step kind: " + std::string(name));
}

std::string_view target_kind_name(TargetKind k) {
  return k == TargetKind::kSurrogate ? "surrogate" : "origin";
}

TargetKind target_kind_from_name(std::string_view name) {
  if (name == "surrogate") return TargetKind::kSurrogate;
  if (name == "origin") return TargetKind::kOrigin;
  throw CdnError(Err::kBadRequest,
                 "unknown target kind: " + std::string(name));
}

}  // namespace cdnfly
