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

#ifndef CDNFLY_UTIL_CLOCK_HPP_
#define CDNFLY_UTIL_CLOCK_HPP_

#include <chrono>
#include <cstdint>

namespace cdnfly {

// Monotonic timestamp in nanoseconds. All timing-sensitive values in this
// project (trace events, latency boundaries) come from this clock; wall-clock
// time is only used for report metadata.
inline std::int64_t mono_ns() {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

}  // namespace cdnfly

#endif  // CDNFLY_UTIL_CLOCK_HPP_
