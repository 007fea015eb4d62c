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

#ifndef CDNFLY_POD_AGENT_HPP_
#define CDNFLY_POD_AGENT_HPP_

#include <json.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "cdnfly/domain/types.hpp"
#include "cdnfly/pod/backend.hpp"

namespace cdnfly::pod {

// Int. D request body.
struct DeploymentRequest {
  MicroservicePackage package;
  std::map<std::string, std::string> config;
  std::string correlation_id;

  friend bool operator==(const DeploymentRequest&,
                         const DeploymentRequest&) = default;
};

void to_json(nlohmann::json& j, const DeploymentRequest& v);
void from_json(const nlohmann::json& j, DeploymentRequest& v);

struct PodRuntimeConfig {
  std::string pod_id;
  Region region;
  int capacity_total = 8;
  std::string host = "127.0.0.1";
  int instance_port_base = 0;  // instance n binds instance_port_base + slot
};

// The deployment agent of one simulated Point of Deployment. Deploy and
// undeploy are serialized; capacity_free + live instances == capacity_total
// at all times.
class PodAgent {
 public:
  PodAgent(PodRuntimeConfig config, std::unique_ptr<InstanceBackend> backend);

  // Starts a live instance. Throws CdnError(kCapacityExhausted) with no free
  // slot, CdnError(kPackageNotFound) when the launch spec does not resolve.
  MicroserviceInstance deploy(const DeploymentRequest& request);

  // Closes the instance's endpoints and frees its slot. Throws
  // CdnError(kInstanceNotFound) for unknown ids.
  void undeploy(const std::string& instance_id);

  std::vector<MicroserviceInstance> deployments() const;
  int capacity_total() const { return config_.capacity_total; }
  int capacity_free() const;
  const PodRuntimeConfig& config() const { return config_; }

  InstanceBackend& backend() { return *backend_; }

 private:
  PodRuntimeConfig config_;
  std::unique_ptr<InstanceBackend> backend_;

  mutable std::mutex mu_;
  std::map<std::string, MicroserviceInstance> instances_;
  std::map<std::string, int> slot_of_;
  std::vector<bool> slot_used_;
  int next_instance_ = 1;
};

}  // namespace cdnfly::pod

#endif  // CDNFLY_POD_AGENT_HPP_
