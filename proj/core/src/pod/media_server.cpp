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

#include "cdnfly/pod/media_server.hpp"

#include "cdnfly/domain/error.hpp"
#include "cdnfly/domain/json.hpp"
#include "cdnfly/util/http.hpp"
#include "cdnfly/util/service_host.hpp"

namespace cdnfly::pod {

MediaServer::MediaServer(const std::vector<ContentItem>& catalogue) {
  for (const auto& item : catalogue) {
    contents_[item.content_id] = make_stored_content(item);
  }
}

void MediaServer::mount(httplib::Server& server) {
  server.Get("/contents",
             [this](const httplib::Request&, httplib::Response& res) {
               respond_json(res, nlohmann::json(content_ids()));
             });

  server.Get("/contents/:id/meta",
             [this](const httplib::Request& req, httplib::Response& res) {
               const auto* stored = find(req.path_params.at("id"));
               if (stored == nullptr) {
                 respond_error(res, CdnError(Err::kContentNotFound,
                                             req.path_params.at("id")));
                 return;
               }
               respond_json(res, nlohmann::json(stored->item));
             });

  server.Get("/contents/:id",
             [this](const httplib::Request& req, httplib::Response& res) {
               const auto* stored = find(req.path_params.at("id"));
               if (stored == nullptr) {
                 respond_error(res, CdnError(Err::kContentNotFound,
                                             req.path_params.at("id")));
                 return;
               }
               res.set_header(http::kContentShaHeader, stored->sha256);
               res.set_content(
                   std::string(stored->blob.begin(), stored->blob.end()),
                   "application/octet-stream");
             });
}

const StoredContent* MediaServer::find(const std::string& content_id) const {
  const auto it = contents_.find(content_id);
  return it == contents_.end() ? nullptr : &it->second;
}

std::vector<std::string> MediaServer::content_ids() const {
  std::vector<std::string> ids;
  ids.reserve(contents_.size());
  for (const auto& [id, _] : contents_) ids.push_back(id);
  return ids;
}

}  // namespace cdnfly::pod
