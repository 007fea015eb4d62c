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

#include "cdnfly/pod/backend.hpp"

#include "cdnfly/domain/error.hpp"

namespace cdnfly::pod {

InProcessBackend::InProcessBackend(std::shared_ptr<TraceSink> sink)
    : sink_(std::move(sink)) {}

InProcessBackend::~InProcessBackend() {
  std::lock_guard lock(mu_);
  for (auto& [_, live] : live_) {
    if (live.host) live.host->stop();
  }
}

bool InProcessBackend::resolvable(const LaunchSpec& launch_spec) const {
  if (launch_spec.kind != kLaunchKindFactory) return false;
  return launch_spec.ref == kRoleCacheNode ||
         launch_spec.ref == kRoleAbrStreamingServer;
}

MicroserviceInstance InProcessBackend::start(
    const MicroservicePackage& package,
    const std::map<std::string, std::string>& config,
    const std::string& instance_id, const std::string& pod_id,
    const std::string& host, int port) {
  if (!resolvable(package.launch_spec)) {
    throw CdnError(Err::kPackageNotFound,
                   "launch spec " + package.launch_spec.kind + ":" +
                       package.launch_spec.ref + " is not resolvable");
  }

  MicroserviceInstance instance;
  instance.instance_id = instance_id;
  instance.role = package.role;
  instance.pod_id = pod_id;
  instance.state = InstanceState::kDeployed;
  instance.control_access.endpoint =
      parse_uri("http://" + host + ":" + std::to_string(port) +
                package.endpoint_spec.control_path);
  instance.data_access.endpoint =
      parse_uri("http://" + host + ":" + std::to_string(port) +
                package.endpoint_spec.data_path);

  Live live;
  live.host = std::make_unique<ServiceHost>();
  if (package.launch_spec.ref == kRoleCacheNode) {
    live.cache = std::make_unique<CacheNode>(config, instance.control_access,
                                             instance.data_access, sink_);
    live.cache->mount(live.host->server(), package.endpoint_spec.control_path,
                      package.endpoint_spec.data_path);
  } else {
    live.abr = std::make_unique<AbrServer>(config, instance.control_access,
                                           instance.data_access, sink_);
    live.abr->mount(live.host->server(), package.endpoint_spec.control_path,
                    package.endpoint_spec.data_path);
  }
  live.host->start(host, port);

  // Sample-content bootstrap runs synchronously so the instance is fully
  // populated by the time the deployment ack goes out.
  if (live.cache) live.cache->bootstrap();

  std::lock_guard lock(mu_);
  live_[instance_id] = std::move(live);
  return instance;
}

void InProcessBackend::stop(const std::string& instance_id) {
  std::lock_guard lock(mu_);
  const auto it = live_.find(instance_id);
  if (it == live_.end()) {
    throw CdnError(Err::kInstanceNotFound, instance_id);
  }
  it->second.host->stop();
  live_.erase(it);
}

CacheNode* InProcessBackend::cache(const std::string& instance_id) {
  std::lock_guard lock(mu_);
  const auto it = live_.find(instance_id);
  return it == live_.end() ? nullptr : it->second.cache.get();
}

AbrServer* InProcessBackend::abr(const std::string& instance_id) {
  std::lock_guard lock(mu_);
  const auto it = live_.find(instance_id);
  return it == live_.end() ? nullptr : it->second.abr.get();
}

}  // namespace cdnfly::pod
