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

#include "cdnfly/pod/abr.hpp"

#include <cmath>

#include "cdnfly/domain/error.hpp"

namespace cdnfly::pod {

namespace {

std::int64_t to_ms(double seconds) {
  return std::llround(seconds * 1000.0);
}

// Millisecond length of segment n; the last segment carries the remainder.
std::int64_t segment_ms(const AbrManifest& manifest, std::uint64_t n) {
  const std::int64_t dur_ms = to_ms(manifest.duration_s);
  const std::int64_t seg_ms = to_ms(manifest.segment_duration_s);
  if (n + 1 < manifest.segment_count) return seg_ms;
  return dur_ms - seg_ms * static_cast<std::int64_t>(manifest.segment_count - 1);
}

}  // namespace

void to_json(nlohmann::json& j, const AbrRepresentation& v) {
  j = nlohmann::json{{"rep_id", v.rep_id}, {"bitrate_bps", v.bitrate_bps}};
}

void from_json(const nlohmann::json& j, AbrRepresentation& v) {
  j.at("rep_id").get_to(v.rep_id);
  j.at("bitrate_bps").get_to(v.bitrate_bps);
}

void to_json(nlohmann::json& j, const AbrManifest& v) {
  j = nlohmann::json{{"content_id", v.content_id},
                     {"duration_s", v.duration_s},
                     {"segment_duration_s", v.segment_duration_s},
                     {"segment_count", v.segment_count},
                     {"representations", v.representations},
                     {"segment_template", v.segment_template}};
}

void from_json(const nlohmann::json& j, AbrManifest& v) {
  j.at("content_id").get_to(v.content_id);
  j.at("duration_s").get_to(v.duration_s);
  j.at("segment_duration_s").get_to(v.segment_duration_s);
  j.at("segment_count").get_to(v.segment_count);
  j.at("representations").get_to(v.representations);
  j.at("segment_template").get_to(v.segment_template);
}

AbrManifest make_manifest(const ContentItem& item) {
  return make_manifest(item, AbrParams{});
}

AbrManifest make_manifest(const ContentItem& item, const AbrParams& params) {
  const std::int64_t dur_ms = to_ms(item.duration_s);
  const std::int64_t seg_ms = to_ms(params.segment_duration_s);
  if (dur_ms <= 0) {
    throw CdnError(Err::kInvalidContent,
                   "content " + item.content_id + " is not streamable");
  }
  if (seg_ms <= 0) {
    throw CdnError(Err::kInvalidContent, "segment duration must be > 0");
  }

  AbrManifest manifest;
  manifest.content_id = item.content_id;
  manifest.duration_s = item.duration_s;
  manifest.segment_duration_s = params.segment_duration_s;
  manifest.segment_count =
      static_cast<std::uint64_t>((dur_ms + seg_ms - 1) / seg_ms);
  for (const auto bitrate : params.bitrates_bps) {
    manifest.representations.push_back(
        AbrRepresentation{std::to_string(bitrate), bitrate});
  }
  manifest.segment_template = kSegmentTemplate;
  return manifest;
}

std::uint64_t segment_length_bytes(const AbrManifest& manifest,
                                   std::uint64_t bitrate_bps,
                                   std::uint64_t n) {
  if (n >= manifest.segment_count) {
    throw CdnError(Err::kSegmentNotFound,
                   "segment " + std::to_string(n) + " of " +
                       manifest.content_id + " is out of range");
  }
  const std::int64_t len_ms = segment_ms(manifest, n);
  return static_cast<std::uint64_t>(bitrate_bps) *
         static_cast<std::uint64_t>(len_ms) / 8000;
}

Bytes segment_bytes(const Bytes& blob, const AbrManifest& manifest,
                    std::uint64_t bitrate_bps, std::uint64_t n) {
  const std::uint64_t length = segment_length_bytes(manifest, bitrate_bps, n);
  const std::uint64_t full = segment_length_bytes(manifest, bitrate_bps, 0);
  const std::uint64_t offset = full * n;

  Bytes out;
  out.reserve(length);
  for (std::uint64_t i = 0; i < length; ++i) {
    out.push_back(blob[(offset + i) % blob.size()]);
  }
  return out;
}

}  // namespace cdnfly::pod
