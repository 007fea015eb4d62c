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

#include "cdnfly/domain/access_info.hpp"

#include <charconv>

#include "cdnfly/domain/error.hpp"

namespace cdnfly {

std::string Uri::origin() const {
  return scheme + "://" + host + ":" + std::to_string(port);
}

std::string Uri::str() const { return origin() + base_path; }

Uri parse_uri(const std::string& uri) {
  const auto scheme_end = uri.find("://");
  if (scheme_end == std::string::npos || scheme_end == 0) {
    throw CdnError(Err::kBadRequest, "endpoint URI missing scheme: " + uri);
  }
  Uri out;
  out.scheme = uri.substr(0, scheme_end);

  const auto rest_begin = scheme_end + 3;
  const auto path_begin = uri.find('/', rest_begin);
  const std::string authority =
      uri.substr(rest_begin, path_begin == std::string::npos
                                 ? std::string::npos
                                 : path_begin - rest_begin);
  const auto colon = authority.rfind(':');
  if (colon == std::string::npos || colon == 0 ||
      colon + 1 == authority.size()) {
    throw CdnError(Err::kBadRequest, "endpoint URI missing port: " + uri);
  }
  out.host = authority.substr(0, colon);

  const std::string port_str = authority.substr(colon + 1);
  int port = 0;
  const auto [ptr, ec] =
      std::from_chars(port_str.data(), port_str.data() + port_str.size(), port);
  if (ec != std::errc{} || ptr != port_str.data() + port_str.size()) {
    throw CdnError(Err::kBadRequest, "endpoint URI bad port: " + uri);
  }
  if (port < 1 || port > 65535) {
    throw CdnError(Err::kBadRequest,
                   "endpoint port out of range [1, 65535]: " + uri);
  }
  out.port = port;

  if (path_begin != std::string::npos) {
    std::string path = uri.substr(path_begin);
    while (path.size() > 1 && path.back() == '/') path.pop_back();
    if (path != "/") out.base_path = path;
  }
  return out;
}

AccessInfo AccessInfo::local(int port, const std::string& base_path) {
  AccessInfo info;
  info.endpoint.scheme = "http";
  info.endpoint.host = "127.0.0.1";
  info.endpoint.port = port;
  info.endpoint.base_path = base_path;
  return info;
}

}  // namespace cdnfly
