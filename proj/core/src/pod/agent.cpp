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

#include "cdnfly/pod/agent.hpp"

#include <cinttypes>
#include <cstdio>

#include "cdnfly/domain/error.hpp"
#include "cdnfly/domain/json.hpp"

namespace cdnfly::pod {

void to_json(nlohmann::json& j, const DeploymentRequest& v) {
  j = nlohmann::json{{"package", v.package},
                     {"config", v.config},
                     {"correlation_id", v.correlation_id}};
}

void from_json(const nlohmann::json& j, DeploymentRequest& v) {
  j.at("package").get_to(v.package);
  if (j.contains("config")) j.at("config").get_to(v.config);
  v.correlation_id = j.value("correlation_id", "");
}

PodAgent::PodAgent(PodRuntimeConfig config,
                   std::unique_ptr<InstanceBackend> backend)
    : config_(std::move(config)),
      backend_(std::move(backend)),
      slot_used_(static_cast<std::size_t>(config_.capacity_total), false) {}

MicroserviceInstance PodAgent::deploy(const DeploymentRequest& request) {
  std::lock_guard lock(mu_);

  if (!backend_->resolvable(request.package.launch_spec)) {
    throw CdnError(Err::kPackageNotFound,
                   "package " + request.package.package_id +
                       " cannot be launched on " + config_.pod_id);
  }

  int slot = -1;
  for (std::size_t i = 0; i < slot_used_.size(); ++i) {
    if (!slot_used_[i]) {
      slot = static_cast<int>(i);
      break;
    }
  }
  if (slot < 0) {
    throw CdnError(Err::kCapacityExhausted,
                   config_.pod_id + " has no free instance slots");
  }

  char id_buf[64];
  std::snprintf(id_buf, sizeof(id_buf), "i-%s-%04d", config_.pod_id.c_str(),
                next_instance_++);
  const std::string instance_id = id_buf;

  // The instance learns where it runs; catalogue-provided keys win nothing
  // over these placement facts.
  auto config = request.config;
  config[config_keys::kInstanceId] = instance_id;
  config[config_keys::kPodId] = config_.pod_id;
  config[config_keys::kRegion] = config_.region.id;
  if (!request.correlation_id.empty()) {
    config[config_keys::kCorrelationId] = request.correlation_id;
  }

  const int port = config_.instance_port_base + slot;
  MicroserviceInstance instance = backend_->start(
      request.package, config, instance_id, config_.pod_id, config_.host, port);

  slot_used_[static_cast<std::size_t>(slot)] = true;
  slot_of_[instance_id] = slot;
  instances_[instance_id] = instance;
  return instance;
}

void PodAgent::undeploy(const std::string& instance_id) {
  std::lock_guard lock(mu_);
  const auto it = instances_.find(instance_id);
  if (it == instances_.end()) {
    throw CdnError(Err::kInstanceNotFound,
                   instance_id + " is not deployed on " + config_.pod_id);
  }
  backend_->stop(instance_id);
  slot_used_[static_cast<std::size_t>(slot_of_.at(instance_id))] = false;
  slot_of_.erase(instance_id);
  instances_.erase(it);
}

std::vector<MicroserviceInstance> PodAgent::deployments() const {
  std::lock_guard lock(mu_);
  std::vector<MicroserviceInstance> out;
  out.reserve(instances_.size());
  for (const auto& [_, instance] : instances_) out.push_back(instance);
  return out;
}

int PodAgent::capacity_free() const {
  std::lock_guard lock(mu_);
  return config_.capacity_total - static_cast<int>(instances_.size());
}

}  // namespace cdnfly::pod
