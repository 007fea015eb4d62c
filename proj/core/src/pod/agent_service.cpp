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

#include "cdnfly/pod/agent_service.hpp"

#include "cdnfly/domain/json.hpp"

namespace cdnfly::pod {

PodAgentService::PodAgentService(PodAgent& agent) : agent_(agent) {
  auto& server = host_.server();

  server.Post("/deployments",
              [this](const httplib::Request& req, httplib::Response& res) {
                try {
                  const auto request = nlohmann::json::parse(req.body)
                                           .get<DeploymentRequest>();
                  respond_json(res, nlohmann::json(agent_.deploy(request)),
                               201);
                } catch (const CdnError& e) {
                  respond_error(res, e);
                } catch (const std::exception& e) {
                  respond_error(res, CdnError(Err::kBadRequest, e.what()));
                }
              });

  server.Delete("/deployments/:id",
                [this](const httplib::Request& req, httplib::Response& res) {
                  try {
                    agent_.undeploy(req.path_params.at("id"));
                    respond_json(res, {{"status", "undeployed"}});
                  } catch (const CdnError& e) {
                    respond_error(res, e);
                  }
                });

  server.Get("/deployments",
             [this](const httplib::Request&, httplib::Response& res) {
               respond_json(res, nlohmann::json(agent_.deployments()));
             });

  server.Get("/status",
             [this](const httplib::Request&, httplib::Response& res) {
               respond_json(res,
                            {{"pod_id", agent_.config().pod_id},
                             {"region", agent_.config().region},
                             {"capacity_total", agent_.capacity_total()},
                             {"capacity_free", agent_.capacity_free()}});
             });
}

void PodAgentService::start(const std::string& host, int port) {
  host_.start(host, port);
}

void PodAgentService::stop() { host_.stop(); }

AccessInfo PodAgentService::access() const {
  return AccessInfo::local(host_.port());
}

}  // namespace cdnfly::pod
