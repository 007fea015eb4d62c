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

#ifndef CDNFLY_DOMAIN_ERROR_HPP_
#define CDNFLY_DOMAIN_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace cdnfly {

// Error vocabulary shared by every control-plane surface. The enumerator
// names match the wire encoding (body {"error": "<code>"}) one to one.
enum class Err {
  kInvalidContent,
  kPlanNotFound,
  kOrchestrationStepFailed,
  kStepCallFailed,
  kUnknownComponentType,
  kPodUnreachable,
  kDeploymentFailed,
  kComponentNotFound,
  kPackageNotFound,
  kNoEligiblePod,
  kNoMatchingComponentType,
  kPostDeploymentFailed,
  kAlreadyRegistered,
  kSurrogateNotFound,
  kCapacityExhausted,
  kInstanceNotFound,
  kContentSourceUnavailable,
  kContentNotFound,
  kSegmentNotFound,
  kRegistrationFailed,
  kIncompleteTrace,
  kBadRequest,
  kInternal,
};

std::string_view err_name(Err code);
Err err_from_name(std::string_view name);

// HTTP status a service should answer with for this error.
int err_http_status(Err code);

class CdnError : public std::runtime_error {
 public:
  CdnError(Err code, std::string message)
      : std::runtime_error(std::string(err_name(code)) + ": " + message),
        code_(code),
        detail_(std::move(message)) {}

  Err code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  Err code_;
  std::string detail_;
};

}  // namespace cdnfly

#endif  // CDNFLY_DOMAIN_ERROR_HPP_
