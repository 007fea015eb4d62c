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

#include "cdnfly/component_provider/deployer.hpp"

#include "cdnfly/domain/json.hpp"
#include "cdnfly/pod/agent.hpp"
#include "cdnfly/util/http.hpp"

namespace cdnfly::component_provider {

MicroserviceDeployer::MicroserviceDeployer(const ComponentRepository& repository,
                                           std::shared_ptr<TraceSink> sink)
    : MicroserviceDeployer(repository, std::move(sink), Options{}) {}

MicroserviceDeployer::MicroserviceDeployer(const ComponentRepository& repository,
                                           std::shared_ptr<TraceSink> sink,
                                           Options options)
    : repository_(repository),
      sink_(std::move(sink)),
      options_(std::move(options)) {}

std::vector<MicroserviceInstance> MicroserviceDeployer::deploy(
    const std::vector<MicroserviceSpec>& specs, const AccessInfo& pod_access,
    const std::string& correlation_id) {
  if (specs.empty()) return {};

  // Download the packages first, deploy after: package resolution failures
  // never touch the PoD.
  emit_trace(sink_, options_.actor, actions::kPackageFetchRequest,
             correlation_id);
  std::vector<MicroservicePackage> packages;
  packages.reserve(specs.size());
  for (const auto& spec : specs) {
    packages.push_back(repository_.fetch(spec.package_id));
  }
  emit_trace(sink_, options_.actor, actions::kPackageFetchResponse,
             correlation_id);

  emit_trace(sink_, options_.actor, actions::kDeployExecute, correlation_id);
  std::vector<MicroserviceInstance> deployed;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    pod::DeploymentRequest request;
    request.package = packages[i];
    request.config = specs[i].config;
    request.correlation_id = correlation_id;

    const auto result = http::post_json(pod_access, "/deployments",
                                        nlohmann::json(request),
                                        options_.call_timeout_ms);
    if (!result.transport_ok) {
      if (deployed.empty()) {
        throw DeploymentFailure(
            Err::kPodUnreachable,
            "PoD agent at " + pod_access.endpoint.str() + " unreachable", {});
      }
      throw DeploymentFailure(Err::kDeploymentFailed,
                              "PoD agent lost after " +
                                  std::to_string(deployed.size()) +
                                  " deployments",
                              deployed);
    }
    if (!result.ok()) {
      throw DeploymentFailure(
          Err::kDeploymentFailed,
          "deployment of " + specs[i].package_id + " failed: " +
              std::string(err_name(result.error_code(Err::kDeploymentFailed))),
          deployed);
    }
    deployed.push_back(result.json().get<MicroserviceInstance>());
  }
  return deployed;
}

void MicroserviceDeployer::undeploy(const AccessInfo& pod_access,
                                    const std::string& instance_id) {
  const auto result = http::del(pod_access, "/deployments/" + instance_id,
                                options_.call_timeout_ms);
  if (!result.transport_ok) {
    throw CdnError(Err::kPodUnreachable,
                   "PoD agent at " + pod_access.endpoint.str() +
                       " unreachable for undeploy");
  }
  if (!result.ok() && result.status != 404) {
    throw CdnError(Err::kInstanceNotFound,
                   "undeploy of " + instance_id + " failed");
  }
}

}  // namespace cdnfly::component_provider
