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

#include "cdnfly/util/http.hpp"

#include <httplib.h>

namespace cdnfly::http {

namespace {

httplib::Client make_client(const AccessInfo& access, int timeout_ms) {
  httplib::Client client(access.endpoint.host, access.endpoint.port);
  client.set_connection_timeout(0, timeout_ms * 1000);
  client.set_read_timeout(timeout_ms / 1000, (timeout_ms % 1000) * 1000);
  client.set_write_timeout(timeout_ms / 1000, (timeout_ms % 1000) * 1000);
  return client;
}

httplib::Headers to_httplib(const Headers& headers) {
  httplib::Headers out;
  for (const auto& [k, v] : headers) out.emplace(k, v);
  return out;
}

Result from_httplib(const httplib::Result& res) {
  Result out;
  if (!res) return out;
  out.transport_ok = true;
  out.status = res->status;
  out.body = res->body;
  for (const auto& [k, v] : res->headers) out.headers[k] = v;
  return out;
}

std::string full_path(const AccessInfo& access, const std::string& path) {
  return access.endpoint.base_path + path;
}

}  // namespace

nlohmann::json Result::json() const {
  auto parsed = nlohmann::json::parse(body, nullptr, false);
  if (parsed.is_discarded()) {
    throw CdnError(Err::kInternal, "response body is not valid JSON");
  }
  return parsed;
}

Err Result::error_code(Err transport_default) const {
  if (!transport_ok) return transport_default;
  auto parsed = nlohmann::json::parse(body, nullptr, false);
  if (!parsed.is_discarded() && parsed.is_object() &&
      parsed.contains("error")) {
    return err_from_name(parsed["error"].get<std::string>());
  }
  return transport_default;
}

Result get(const AccessInfo& access, const std::string& path, int timeout_ms,
           const Headers& headers) {
  auto client = make_client(access, timeout_ms);
  return from_httplib(client.Get(full_path(access, path), to_httplib(headers)));
}

Result post_json(const AccessInfo& access, const std::string& path,
                 const nlohmann::json& body, int timeout_ms,
                 const Headers& headers) {
  auto client = make_client(access, timeout_ms);
  return from_httplib(client.Post(full_path(access, path), to_httplib(headers),
                                  body.dump(), "application/json"));
}

Result del(const AccessInfo& access, const std::string& path, int timeout_ms,
           const Headers& headers) {
  auto client = make_client(access, timeout_ms);
  return from_httplib(
      client.Delete(full_path(access, path), to_httplib(headers)));
}

}  // namespace cdnfly::http
