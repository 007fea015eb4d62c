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

#ifndef CDNFLY_UTIL_HTTP_HPP_
#define CDNFLY_UTIL_HTTP_HPP_

#include <map>
#include <string>

#include <json.hpp>

#include "cdnfly/domain/access_info.hpp"
#include "cdnfly/domain/error.hpp"

namespace cdnfly::http {

using Headers = std::map<std::string, std::string>;

// Correlation ids ride on this header so the pinned JSON body schemas stay
// untouched.
inline constexpr const char* kCorrelationHeader = "X-Correlation-Id";
inline constexpr const char* kContentShaHeader = "X-Content-Sha256";

struct Result {
  bool transport_ok = false;  // false: connect/read failed entirely
  int status = 0;
  std::string body;
  Headers headers;

  bool ok() const { return transport_ok && status >= 200 && status < 300; }
  nlohmann::json json() const;  // throws CdnError(kInternal) on parse failure

  // Error code carried in the response body, or `transport_default` when the
  // call never produced a usable response.
  Err error_code(Err transport_default) const;
};

// Paths are appended to the endpoint's base path. Timeouts apply to connect
// and read individually.
Result get(const AccessInfo& access, const std::string& path, int timeout_ms,
           const Headers& headers = {});
Result post_json(const AccessInfo& access, const std::string& path,
                 const nlohmann::json& body, int timeout_ms,
                 const Headers& headers = {});
Result del(const AccessInfo& access, const std::string& path, int timeout_ms,
           const Headers& headers = {});

}  // namespace cdnfly::http

#endif  // CDNFLY_UTIL_HTTP_HPP_
