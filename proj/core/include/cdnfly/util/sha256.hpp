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

#ifndef CDNFLY_UTIL_SHA256_HPP_
#define CDNFLY_UTIL_SHA256_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace cdnfly {

using Bytes = std::vector<std::uint8_t>;

// SHA-256 digest as lowercase hex. All content hashes on the wire use this
// encoding.
std::string sha256_hex(const void* data, std::size_t len);
std::string sha256_hex(const Bytes& data);
std::string sha256_hex(const std::string& data);

}  // namespace cdnfly

#endif  // CDNFLY_UTIL_SHA256_HPP_
