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

#ifndef CDNFLY_COMPONENT_PROVIDER_DEPLOYER_HPP_
#define CDNFLY_COMPONENT_PROVIDER_DEPLOYER_HPP_

#include <memory>
#include <string>
#include <vector>

#include "cdnfly/component_provider/component_repository.hpp"
#include "cdnfly/domain/error.hpp"
#include "cdnfly/domain/trace.hpp"
#include "cdnfly/domain/types.hpp"

namespace cdnfly::component_provider {

// Raised when deployment stops part-way: carries the instances that did come
// up so the caller can clean them up (the deployer itself never rolls back).
class DeploymentFailure : public CdnError {
 public:
  DeploymentFailure(Err code, std::string message,
                    std::vector<MicroserviceInstance> deployed)
      : CdnError(code, std::move(message)), deployed_(std::move(deployed)) {}

  const std::vector<MicroserviceInstance>& deployed() const {
    return deployed_;
  }

 private:
  std::vector<MicroserviceInstance> deployed_;
};

// Int. B/C/D: fetches packages from the component repository, then deploys
// them over the PoD agent, one call per spec, in spec order.
class MicroserviceDeployer {
 public:
  struct Options {
    std::string actor = "microservice-deployer";
    int call_timeout_ms = 10000;
  };

  MicroserviceDeployer(const ComponentRepository& repository,
                       std::shared_ptr<TraceSink> sink);
  MicroserviceDeployer(const ComponentRepository& repository,
                       std::shared_ptr<TraceSink> sink, Options options);

  // Returns one instance per spec, with populated control/data access. The
  // first unreachable PoD contact raises DeploymentFailure(kPodUnreachable);
  // a failure after partial success raises
  // DeploymentFailure(kDeploymentFailed) listing the live instances.
  std::vector<MicroserviceInstance> deploy(
      const std::vector<MicroserviceSpec>& specs, const AccessInfo& pod_access,
      const std::string& correlation_id);

  // Int. D teardown: DELETE the instance on its PoD.
  void undeploy(const AccessInfo& pod_access, const std::string& instance_id);

 private:
  const ComponentRepository& repository_;
  std::shared_ptr<TraceSink> sink_;
  Options options_;
};

}  // namespace cdnfly::component_provider

#endif  // CDNFLY_COMPONENT_PROVIDER_DEPLOYER_HPP_
