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

#ifndef CDNFLY_DOMAIN_CONTENT_HPP_
#define CDNFLY_DOMAIN_CONTENT_HPP_

#include "cdnfly/domain/types.hpp"
#include "cdnfly/util/sha256.hpp"

namespace cdnfly {

// Deterministic pseudo-random content body: a pure function of
// (blob_seed, size_bytes), identical on every host. Throws
// CdnError(kInvalidContent) when size_bytes == 0.
Bytes content_blob(const ContentItem& item);

// Blob plus its lowercase-hex SHA-256, as served by media servers and caches.
struct StoredContent {
  ContentItem item;
  Bytes blob;
  std::string sha256;
};

StoredContent make_stored_content(const ContentItem& item);

}  // namespace cdnfly

#endif  // CDNFLY_DOMAIN_CONTENT_HPP_
