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

#ifndef CDNFLY_POD_MEDIA_SERVER_HPP_
#define CDNFLY_POD_MEDIA_SERVER_HPP_

#include <httplib.h>

#include <map>
#include <string>
#include <vector>

#include "cdnfly/domain/content.hpp"
#include "cdnfly/domain/types.hpp"

namespace cdnfly::pod {

// The origin: the authoritative content source the surrogates pull from.
// Data interface only: GET /contents, GET /contents/{id},
// GET /contents/{id}/meta. Bodies carry the SHA-256 in a response header.
class MediaServer {
 public:
  explicit MediaServer(const std::vector<ContentItem>& catalogue);

  void mount(httplib::Server& server);

  const StoredContent* find(const std::string& content_id) const;
  std::vector<std::string> content_ids() const;

 private:
  std::map<std::string, StoredContent> contents_;
};

}  // namespace cdnfly::pod

#endif  // CDNFLY_POD_MEDIA_SERVER_HPP_
