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

#include "cdnfly/domain/content.hpp"

#include <random>

#include "cdnfly/domain/error.hpp"

namespace cdnfly {

Bytes content_blob(const ContentItem& item) {
  if (item.size_bytes == 0) {
    throw CdnError(Err::kInvalidContent,
                   "content " + item.content_id + " has size_bytes = 0");
  }
  // mt19937_64 raw output is fully specified by the standard, so byte
  // streams are identical across platforms. Words are packed little-endian.
  std::mt19937_64 rng(item.blob_seed);
  Bytes out;
  out.reserve(item.size_bytes);
  while (out.size() < item.size_bytes) {
    std::uint64_t word = rng();
    for (int i = 0; i < 8 && out.size() < item.size_bytes; ++i) {
      out.push_back(static_cast<std::uint8_t>(word & 0xff));
      word >>= 8;
    }
  }
  return out;
}

StoredContent make_stored_content(const ContentItem& item) {
  StoredContent stored;
  stored.item = item;
  stored.blob = content_blob(item);
  stored.sha256 = sha256_hex(stored.blob);
  return stored;
}

}  // namespace cdnfly
