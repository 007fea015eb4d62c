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

#include "cdnfly/util/service_host.hpp"

#include <json.hpp>

namespace cdnfly {

ServiceHost::ServiceHost() : server_(std::make_unique<httplib::Server>()) {}

ServiceHost::~ServiceHost() { stop(); }

void ServiceHost::start(const std::string& host, int port) {
  if (listening_) {
    throw CdnError(Err::kInternal, "service host already started");
  }
  host_ = host;
  port_ = port;
  if (!server_->bind_to_port(host, port)) {
    throw CdnError(Err::kInternal,
                   "cannot bind " + host + ":" + std::to_string(port));
  }
  thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
  listening_ = true;
}

void ServiceHost::stop() {
  if (!listening_) return;
  server_->stop();
  if (thread_.joinable()) thread_.join();
  listening_ = false;
}

void respond_json(httplib::Response& res, const nlohmann::json& body,
                  int status) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void respond_error(httplib::Response& res, const CdnError& err) {
  respond_json(res,
               nlohmann::json{{"error", std::string(err_name(err.code()))},
                              {"message", err.detail()}},
               err_http_status(err.code()));
}

}  // namespace cdnfly
