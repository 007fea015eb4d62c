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

#ifndef CDNFLY_POD_CACHE_NODE_HPP_
#define CDNFLY_POD_CACHE_NODE_HPP_

#include <httplib.h>

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "cdnfly/domain/content.hpp"
#include "cdnfly/domain/trace.hpp"
#include "cdnfly/domain/types.hpp"

namespace cdnfly::pod {

// Config keys every instance receives at deploy time (the agent injects the
// placement facts, the catalogue may add the rest).
namespace config_keys {
inline constexpr const char* kInstanceId = "instance_id";
inline constexpr const char* kPodId = "pod_id";
inline constexpr const char* kRegion = "region";
inline constexpr const char* kComponentId = "component_id";
inline constexpr const char* kCorrelationId = "correlation_id";
inline constexpr const char* kBootstrapContents = "bootstrap_contents";
inline constexpr const char* kMediaServer = "media_server";
inline constexpr const char* kRegistrationBackoffMs = "registration_backoff_ms";
}  // namespace config_keys

struct PullReport {
  std::vector<std::string> fetched;
  std::vector<std::string> failed;
};

// The cache-node microservice. Control interface: POST /peers,
// POST /register-with, GET /health. Data interface: GET /contents,
// GET /contents/{id}, GET /contents/{id}/meta. No eviction: contents are
// bounded by the scenario.
class CacheNode {
 public:
  CacheNode(std::map<std::string, std::string> config,
            AccessInfo control_access, AccessInfo data_access,
            std::shared_ptr<TraceSink> sink);

  void mount(httplib::Server& server, const std::string& control_base,
             const std::string& data_base);

  // Pulls the configured sample contents right after deployment, when the
  // config asks for it.
  void bootstrap();

  // Int. J client side: fetch every placed content from the media server.
  // Partial success is reported per content; a media server that never
  // answers at all raises CdnError(kContentSourceUnavailable).
  PullReport pull_content(const ContentPlacement& placement);

  // Fig. 5 client side: register with the controller, apply the returned
  // placement, then notify readiness. Returns the surrogate id used.
  // Throws CdnError(kRegistrationFailed) after exhausting the 3 attempts.
  std::string register_with(const AccessInfo& controller,
                            const std::string& correlation_id);

  // Snapshots for tests and health reporting.
  std::vector<std::string> content_ids() const;
  std::vector<PeerInfo> peers() const;
  std::optional<std::string> stored_sha256(const std::string& content_id) const;

  const std::string& instance_id() const { return instance_id_; }
  std::string surrogate_id() const;

 private:
  void set_peers(std::vector<PeerInfo> peers);

  std::map<std::string, std::string> config_;
  std::string instance_id_;
  AccessInfo control_access_;
  AccessInfo data_access_;
  std::shared_ptr<TraceSink> sink_;

  mutable std::shared_mutex mu_;
  std::map<std::string, StoredContent> contents_;
  std::vector<PeerInfo> peers_;
  std::optional<AccessInfo> registered_controller_;
};

}  // namespace cdnfly::pod

#endif  // CDNFLY_POD_CACHE_NODE_HPP_
