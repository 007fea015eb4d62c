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

#ifndef CDNFLY_POD_ABR_SERVER_HPP_
#define CDNFLY_POD_ABR_SERVER_HPP_

#include <httplib.h>

#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <vector>

#include "cdnfly/domain/trace.hpp"
#include "cdnfly/domain/types.hpp"
#include "cdnfly/pod/abr.hpp"

namespace cdnfly::pod {

// The ABR streaming microservice. Control interface: POST /peers,
// GET /health. Data interface: GET /contents/{id}/manifest,
// GET /contents/{id}/reps/{rep}/segments/{n}. Content bytes come from the
// co-located cache node's data interface, found through the peer table that
// orchestration filled in.
class AbrServer {
 public:
  AbrServer(std::map<std::string, std::string> config,
            AccessInfo control_access, AccessInfo data_access,
            std::shared_ptr<TraceSink> sink);

  void mount(httplib::Server& server, const std::string& control_base,
             const std::string& data_base);

  AbrManifest manifest_for(const std::string& content_id);
  Bytes segment(const std::string& content_id, const std::string& rep_id,
                std::uint64_t n);

  std::vector<PeerInfo> peers() const;
  const std::string& instance_id() const { return instance_id_; }

 private:
  // Reads meta + blob through the cache peer's data interface, memoized.
  StoredContent fetch_content(const std::string& content_id);

  std::map<std::string, std::string> config_;
  std::string instance_id_;
  AccessInfo control_access_;
  AccessInfo data_access_;
  std::shared_ptr<TraceSink> sink_;
  AbrParams params_;

  mutable std::shared_mutex mu_;
  std::vector<PeerInfo> peers_;
  std::map<std::string, StoredContent> local_;
};

}  // namespace cdnfly::pod

#endif  // CDNFLY_POD_ABR_SERVER_HPP_
