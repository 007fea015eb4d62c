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

#ifndef CDNFLY_DOMAIN_ACCESS_INFO_HPP_
#define CDNFLY_DOMAIN_ACCESS_INFO_HPP_

#include <string>

namespace cdnfly {

// Parsed endpoint URI: scheme, host, port and an optional base path under
// which a service mounts its routes.
struct Uri {
  std::string scheme;
  std::string host;
  int port = 0;
  std::string base_path;  // "" or "/something", no trailing slash

  // "http://host:port" — what an HTTP client connects to.
  std::string origin() const;
  // Full URI string including the base path.
  std::string str() const;

  friend bool operator==(const Uri&, const Uri&) = default;
};

// Parses "scheme://host:port[/path]". Throws CdnError(kBadRequest) on
// malformed input or a port outside [1, 65535].
Uri parse_uri(const std::string& uri);

// How a component is reached: endpoint plus an opaque credential token
// (possibly empty; credential handling is a stub).
struct AccessInfo {
  Uri endpoint;
  std::string credential;

  static AccessInfo local(int port, const std::string& base_path = "");

  friend bool operator==(const AccessInfo&, const AccessInfo&) = default;
};

}  // namespace cdnfly

#endif  // CDNFLY_DOMAIN_ACCESS_INFO_HPP_
