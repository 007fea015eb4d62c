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

#ifndef CDNFLY_POD_AGENT_SERVICE_HPP_
#define CDNFLY_POD_AGENT_SERVICE_HPP_

#include "cdnfly/pod/agent.hpp"
#include "cdnfly/util/service_host.hpp"

namespace cdnfly::pod {

// REST face of the PoD agent:
//   POST   /deployments                body DeploymentRequest -> instance
//   DELETE /deployments/{instance_id}
//   GET    /deployments
//   GET    /status                      capacity snapshot
class PodAgentService {
 public:
  explicit PodAgentService(PodAgent& agent);

  void start(const std::string& host, int port);
  void stop();
  AccessInfo access() const;

 private:
  PodAgent& agent_;
  ServiceHost host_;
};

}  // namespace cdnfly::pod

#endif  // CDNFLY_POD_AGENT_SERVICE_HPP_
