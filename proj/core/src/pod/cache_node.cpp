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

#include "cdnfly/pod/cache_node.hpp"

#include <chrono>
#include <thread>

#include "cdnfly/domain/json.hpp"
#include "cdnfly/util/http.hpp"
#include "cdnfly/util/service_host.hpp"

namespace cdnfly::pod {

namespace {

constexpr int kPullTimeoutMs = 5000;
constexpr int kRegisterTimeoutMs = 5000;
constexpr int kRegisterAttempts = 3;

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::size_t begin = 0;
  while (begin <= csv.size()) {
    const auto comma = csv.find(',', begin);
    const auto end = comma == std::string::npos ? csv.size() : comma;
    if (end > begin) out.push_back(csv.substr(begin, end - begin));
    if (comma == std::string::npos) break;
    begin = comma + 1;
  }
  return out;
}

}  // namespace

CacheNode::CacheNode(std::map<std::string, std::string> config,
                     AccessInfo control_access, AccessInfo data_access,
                     std::shared_ptr<TraceSink> sink)
    : config_(std::move(config)),
      control_access_(std::move(control_access)),
      data_access_(std::move(data_access)),
      sink_(std::move(sink)) {
  const auto it = config_.find(config_keys::kInstanceId);
  instance_id_ = it == config_.end() ? "cache-node" : it->second;
}

std::string CacheNode::surrogate_id() const {
  const auto it = config_.find(config_keys::kComponentId);
  return it == config_.end() || it->second.empty() ? instance_id_ : it->second;
}

void CacheNode::mount(httplib::Server& server, const std::string& control_base,
                      const std::string& data_base) {
  server.Post(control_base + "/peers",
              [this](const httplib::Request& req, httplib::Response& res) {
                try {
                  auto peers = nlohmann::json::parse(req.body)
                                   .get<std::vector<PeerInfo>>();
                  set_peers(std::move(peers));
                  respond_json(res, {{"status", "ok"}});
                } catch (const CdnError& e) {
                  respond_error(res, e);
                } catch (const std::exception& e) {
                  respond_error(res, CdnError(Err::kBadRequest, e.what()));
                }
              });

  server.Post(control_base + "/register-with",
              [this](const httplib::Request& req, httplib::Response& res) {
                try {
                  const auto controller =
                      nlohmann::json::parse(req.body).get<AccessInfo>();
                  std::string correlation_id =
                      req.get_header_value(http::kCorrelationHeader);
                  if (correlation_id.empty()) {
                    const auto it = config_.find(config_keys::kCorrelationId);
                    if (it != config_.end()) correlation_id = it->second;
                  }
                  const auto surrogate = register_with(controller,
                                                       correlation_id);
                  respond_json(res, {{"status", "registered"},
                                     {"surrogate_id", surrogate}});
                } catch (const CdnError& e) {
                  respond_error(res, e);
                } catch (const std::exception& e) {
                  respond_error(res, CdnError(Err::kInternal, e.what()));
                }
              });

  server.Get(control_base + "/health",
             [this](const httplib::Request&, httplib::Response& res) {
               nlohmann::json peer_ids = nlohmann::json::array();
               for (const auto& peer : peers()) {
                 peer_ids.push_back(peer.instance_id);
               }
               respond_json(res, {{"instance_id", instance_id_},
                                  {"role", kRoleCacheNode},
                                  {"status", "ok"},
                                  {"peers", peer_ids},
                                  {"contents", content_ids()}});
             });

  server.Get(data_base + "/contents",
             [this](const httplib::Request&, httplib::Response& res) {
               respond_json(res, nlohmann::json(content_ids()));
             });

  server.Get(data_base + "/contents/:id/meta",
             [this](const httplib::Request& req, httplib::Response& res) {
               std::shared_lock lock(mu_);
               const auto it = contents_.find(req.path_params.at("id"));
               if (it == contents_.end()) {
                 respond_error(res, CdnError(Err::kContentNotFound,
                                             req.path_params.at("id")));
                 return;
               }
               respond_json(res, nlohmann::json(it->second.item));
             });

  server.Get(data_base + "/contents/:id",
             [this](const httplib::Request& req, httplib::Response& res) {
               std::shared_lock lock(mu_);
               const auto it = contents_.find(req.path_params.at("id"));
               if (it == contents_.end()) {
                 respond_error(res, CdnError(Err::kContentNotFound,
                                             req.path_params.at("id")));
                 return;
               }
               res.set_header(http::kContentShaHeader, it->second.sha256);
               res.set_content(
                   std::string(it->second.blob.begin(), it->second.blob.end()),
                   "application/octet-stream");
             });
}

void CacheNode::bootstrap() {
  const auto contents_it = config_.find(config_keys::kBootstrapContents);
  const auto media_it = config_.find(config_keys::kMediaServer);
  if (contents_it == config_.end() || contents_it->second.empty() ||
      media_it == config_.end()) {
    return;
  }
  ContentPlacement placement;
  placement.surrogate_id = surrogate_id();
  placement.contents = split_csv(contents_it->second);
  placement.media_server.endpoint = parse_uri(media_it->second);
  pull_content(placement);
}

PullReport CacheNode::pull_content(const ContentPlacement& placement) {
  PullReport report;
  std::size_t transport_failures = 0;

  for (const auto& content_id : placement.contents) {
    const auto meta = http::get(placement.media_server,
                                "/contents/" + content_id + "/meta",
                                kPullTimeoutMs);
    if (!meta.transport_ok) {
      ++transport_failures;
      report.failed.push_back(content_id);
      continue;
    }
    if (!meta.ok()) {
      report.failed.push_back(content_id);
      continue;
    }
    const auto body = http::get(placement.media_server,
                                "/contents/" + content_id, kPullTimeoutMs);
    if (!body.ok()) {
      if (!body.transport_ok) ++transport_failures;
      report.failed.push_back(content_id);
      continue;
    }

    StoredContent stored;
    stored.item = meta.json().get<ContentItem>();
    stored.blob.assign(body.body.begin(), body.body.end());
    stored.sha256 = sha256_hex(stored.blob);

    const auto advertised = body.headers.find(http::kContentShaHeader);
    if (advertised != body.headers.end() &&
        advertised->second != stored.sha256) {
      report.failed.push_back(content_id);
      continue;
    }

    {
      std::unique_lock lock(mu_);
      contents_[content_id] = std::move(stored);
    }
    report.fetched.push_back(content_id);
  }

  if (!placement.contents.empty() &&
      transport_failures == placement.contents.size()) {
    throw CdnError(Err::kContentSourceUnavailable,
                   "media server " + placement.media_server.endpoint.str() +
                       " unreachable");
  }
  return report;
}

std::string CacheNode::register_with(const AccessInfo& controller,
                                     const std::string& correlation_id) {
  emit_trace(sink_, instance_id_, actions::kRegisterRequest, correlation_id);

  SurrogateRegistration registration;
  registration.surrogate_id = surrogate_id();
  registration.region =
      Region::make(config_.contains(config_keys::kRegion)
                       ? config_.at(config_keys::kRegion)
                       : "");
  registration.control_access = control_access_;
  registration.data_access = data_access_;
  registration.ready = false;

  int backoff_ms = 100;
  if (const auto it = config_.find(config_keys::kRegistrationBackoffMs);
      it != config_.end()) {
    backoff_ms = std::stoi(it->second);
  }

  http::Result response;
  bool registered = false;
  for (int attempt = 1; attempt <= kRegisterAttempts; ++attempt) {
    response = http::post_json(controller, "/surrogates",
                               nlohmann::json(registration),
                               kRegisterTimeoutMs,
                               {{http::kCorrelationHeader, correlation_id}});
    if (response.ok()) {
      registered = true;
      break;
    }
    // Conflicts are terminal; transport failures and 5xx get retried.
    if (response.transport_ok && response.status < 500) break;
    if (attempt < kRegisterAttempts) {
      std::this_thread::sleep_for(std::chrono::milliseconds(backoff_ms));
    }
  }
  if (!registered) {
    throw CdnError(Err::kRegistrationFailed,
                   "controller " + controller.endpoint.str() +
                       " rejected registration of " +
                       registration.surrogate_id);
  }

  {
    std::unique_lock lock(mu_);
    registered_controller_ = controller;
  }

  const auto placement = response.json().get<ContentPlacement>();

  emit_trace(sink_, instance_id_, actions::kContentPullRequest,
             correlation_id);
  if (!placement.contents.empty()) {
    pull_content(placement);
  }
  emit_trace(sink_, instance_id_, actions::kContentPullResponse,
             correlation_id);

  emit_trace(sink_, instance_id_, actions::kReadyNotify, correlation_id);
  const auto ready = http::post_json(
      controller, "/surrogates/" + registration.surrogate_id + "/ready",
      nlohmann::json::object(), kRegisterTimeoutMs,
      {{http::kCorrelationHeader, correlation_id}});
  if (!ready.ok()) {
    throw CdnError(Err::kRegistrationFailed,
                   "ready notification for " + registration.surrogate_id +
                       " failed");
  }
  return registration.surrogate_id;
}

std::vector<std::string> CacheNode::content_ids() const {
  std::shared_lock lock(mu_);
  std::vector<std::string> ids;
  ids.reserve(contents_.size());
  for (const auto& [id, _] : contents_) ids.push_back(id);
  return ids;
}

std::vector<PeerInfo> CacheNode::peers() const {
  std::shared_lock lock(mu_);
  return peers_;
}

std::optional<std::string> CacheNode::stored_sha256(
    const std::string& content_id) const {
  std::shared_lock lock(mu_);
  const auto it = contents_.find(content_id);
  if (it == contents_.end()) return std::nullopt;
  return it->second.sha256;
}

void CacheNode::set_peers(std::vector<PeerInfo> peers) {
  std::unique_lock lock(mu_);
  peers_ = std::move(peers);
}

}  // namespace cdnfly::pod
