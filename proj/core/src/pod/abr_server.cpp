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

#include "cdnfly/pod/abr_server.hpp"

#include <charconv>

#include "cdnfly/domain/error.hpp"
#include "cdnfly/domain/json.hpp"
#include "cdnfly/pod/cache_node.hpp"
#include "cdnfly/util/http.hpp"
#include "cdnfly/util/service_host.hpp"

namespace cdnfly::pod {

namespace {
constexpr int kPeerFetchTimeoutMs = 5000;
}

AbrServer::AbrServer(std::map<std::string, std::string> config,
                     AccessInfo control_access, AccessInfo data_access,
                     std::shared_ptr<TraceSink> sink)
    : config_(std::move(config)),
      control_access_(std::move(control_access)),
      data_access_(std::move(data_access)),
      sink_(std::move(sink)) {
  const auto it = config_.find(config_keys::kInstanceId);
  instance_id_ = it == config_.end() ? "abr-streaming-server" : it->second;
}

void AbrServer::mount(httplib::Server& server, const std::string& control_base,
                      const std::string& data_base) {
  server.Post(control_base + "/peers",
              [this](const httplib::Request& req, httplib::Response& res) {
                try {
                  auto peers = nlohmann::json::parse(req.body)
                                   .get<std::vector<PeerInfo>>();
                  {
                    std::unique_lock lock(mu_);
                    peers_ = std::move(peers);
                  }
                  respond_json(res, {{"status", "ok"}});
                } catch (const std::exception& e) {
                  respond_error(res, CdnError(Err::kBadRequest, e.what()));
                }
              });

  server.Get(control_base + "/health",
             [this](const httplib::Request&, httplib::Response& res) {
               nlohmann::json peer_ids = nlohmann::json::array();
               for (const auto& peer : peers()) {
                 peer_ids.push_back(peer.instance_id);
               }
               respond_json(res, {{"instance_id", instance_id_},
                                  {"role", kRoleAbrStreamingServer},
                                  {"status", "ok"},
                                  {"peers", peer_ids}});
             });

  server.Get(data_base + "/contents/:id/manifest",
             [this](const httplib::Request& req, httplib::Response& res) {
               try {
                 respond_json(res, nlohmann::json(manifest_for(
                                       req.path_params.at("id"))));
               } catch (const CdnError& e) {
                 respond_error(res, e);
               }
             });

  server.Get(data_base + "/contents/:id/reps/:rep/segments/:n",
             [this](const httplib::Request& req, httplib::Response& res) {
               try {
                 const std::string& n_str = req.path_params.at("n");
                 std::uint64_t n = 0;
                 const auto [ptr, ec] = std::from_chars(
                     n_str.data(), n_str.data() + n_str.size(), n);
                 if (ec != std::errc{} || ptr != n_str.data() + n_str.size()) {
                   throw CdnError(Err::kSegmentNotFound,
                                  "bad segment index " + n_str);
                 }
                 const auto bytes = segment(req.path_params.at("id"),
                                            req.path_params.at("rep"), n);
                 res.set_content(std::string(bytes.begin(), bytes.end()),
                                 "application/octet-stream");
               } catch (const CdnError& e) {
                 respond_error(res, e);
               }
             });
}

StoredContent AbrServer::fetch_content(const std::string& content_id) {
  {
    std::shared_lock lock(mu_);
    const auto it = local_.find(content_id);
    if (it != local_.end()) return it->second;
  }

  std::vector<PeerInfo> cache_peers;
  for (const auto& peer : peers()) {
    if (peer.role == kRoleCacheNode) cache_peers.push_back(peer);
  }
  if (cache_peers.empty()) {
    throw CdnError(Err::kContentNotFound,
                   "no cache-node peer known to " + instance_id_);
  }

  for (const auto& peer : cache_peers) {
    const auto meta = http::get(peer.data_access,
                                "/contents/" + content_id + "/meta",
                                kPeerFetchTimeoutMs);
    if (!meta.ok()) continue;
    const auto body = http::get(peer.data_access, "/contents/" + content_id,
                                kPeerFetchTimeoutMs);
    if (!body.ok()) continue;

    StoredContent stored;
    stored.item = meta.json().get<ContentItem>();
    stored.blob.assign(body.body.begin(), body.body.end());
    stored.sha256 = sha256_hex(stored.blob);

    std::unique_lock lock(mu_);
    return local_[content_id] = std::move(stored);
  }
  throw CdnError(Err::kContentNotFound,
                 content_id + " not held by any cache peer");
}

AbrManifest AbrServer::manifest_for(const std::string& content_id) {
  const auto stored = fetch_content(content_id);
  return make_manifest(stored.item, params_);
}

Bytes AbrServer::segment(const std::string& content_id,
                         const std::string& rep_id, std::uint64_t n) {
  const auto stored = fetch_content(content_id);
  const auto manifest = make_manifest(stored.item, params_);

  for (const auto& rep : manifest.representations) {
    if (rep.rep_id == rep_id) {
      return segment_bytes(stored.blob, manifest, rep.bitrate_bps, n);
    }
  }
  throw CdnError(Err::kSegmentNotFound,
                 "unknown representation " + rep_id + " for " + content_id);
}

std::vector<PeerInfo> AbrServer::peers() const {
  std::shared_lock lock(mu_);
  return peers_;
}

}  // namespace cdnfly::pod
