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

#ifndef CDNFLY_POD_ABR_HPP_
#define CDNFLY_POD_ABR_HPP_

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "cdnfly/domain/content.hpp"
#include "cdnfly/domain/types.hpp"

namespace cdnfly::pod {

// Segmented multi-bitrate serving over a JSON manifest: same structural
// facts as a DASH MPD (representations, segment addressing, durations)
// without the XML.

struct AbrParams {
  double segment_duration_s = 4.0;
  std::vector<std::uint64_t> bitrates_bps = {400000, 800000, 1600000};
};

struct AbrRepresentation {
  std::string rep_id;  // the bitrate in decimal, e.g. "400000"
  std::uint64_t bitrate_bps = 0;

  friend bool operator==(const AbrRepresentation&,
                         const AbrRepresentation&) = default;
};

struct AbrManifest {
  std::string content_id;
  double duration_s = 0.0;
  double segment_duration_s = 0.0;
  std::uint64_t segment_count = 0;  // ceil(duration_s / segment_duration_s)
  std::vector<AbrRepresentation> representations;
  std::string segment_template;

  friend bool operator==(const AbrManifest&, const AbrManifest&) = default;
};

void to_json(nlohmann::json& j, const AbrRepresentation& v);
void from_json(const nlohmann::json& j, AbrRepresentation& v);
void to_json(nlohmann::json& j, const AbrManifest& v);
void from_json(const nlohmann::json& j, AbrManifest& v);

inline constexpr const char* kSegmentTemplate =
    "/contents/{content_id}/reps/{rep_id}/segments/{n}";

// Segment arithmetic runs on millisecond integers so counts and byte sums
// are exact. Throws CdnError(kInvalidContent) when the item's duration is 0.
AbrManifest make_manifest(const ContentItem& item);
AbrManifest make_manifest(const ContentItem& item, const AbrParams& params);

// Byte length of segment n at the given bitrate: bitrate * segment_duration
// / 8, truncated for the final partial segment. Throws
// CdnError(kSegmentNotFound) when n >= segment_count.
std::uint64_t segment_length_bytes(const AbrManifest& manifest,
                                   std::uint64_t bitrate_bps, std::uint64_t n);

// Deterministic slice of the (cyclically extended) content blob.
Bytes segment_bytes(const Bytes& blob, const AbrManifest& manifest,
                    std::uint64_t bitrate_bps, std::uint64_t n);

}  // namespace cdnfly::pod

#endif  // CDNFLY_POD_ABR_HPP_
