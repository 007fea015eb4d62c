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

#ifndef CDNFLY_UTIL_SERVICE_HOST_HPP_
#define CDNFLY_UTIL_SERVICE_HOST_HPP_

#include <httplib.h>

#include <json.hpp>

#include <memory>
#include <string>
#include <thread>

#include "cdnfly/domain/error.hpp"

namespace cdnfly {

// Owns one httplib server plus its listener thread. Mount routes on
// server() before start(); stop() (or destruction) closes the port so
// undeployed endpoints refuse connections.
class ServiceHost {
 public:
  ServiceHost();
  ~ServiceHost();

  ServiceHost(const ServiceHost&) = delete;
  ServiceHost& operator=(const ServiceHost&) = delete;

  httplib::Server& server() { return *server_; }

  // Binds and serves in the background; returns once the socket is ready.
  // Throws CdnError(kInternal) if the port cannot be bound.
  void start(const std::string& host, int port);
  void stop();

  bool running() const { return listening_; }
  int port() const { return port_; }
  const std::string& host() const { return host_; }

 private:
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
  std::string host_;
  int port_ = 0;
  bool listening_ = false;
};

// Writes a JSON body with the right content type.
void respond_json(httplib::Response& res, const nlohmann::json& body,
                  int status = 200);

// Standard error body: {"error": "<code>", "message": "..."} with the
// code's HTTP status.
void respond_error(httplib::Response& res, const CdnError& err);

}  // namespace cdnfly

#endif  // CDNFLY_UTIL_SERVICE_HOST_HPP_
