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

#include "cdnfly/domain/error.hpp"

#include <array>
#include <utility>

namespace cdnfly {
namespace {

constexpr std::array<std::pair<Err, std::string_view>, 23> kErrNames{{
    {Err::kInvalidContent, "INVALID_CONTENT"},
    {Err::kPlanNotFound, "PLAN_NOT_FOUND"},
    {Err::kOrchestrationStepFailed, "ORCHESTRATION_STEP_FAILED"},
    {Err::kStepCallFailed, "STEP_CALL_FAILED"},
    {Err::kUnknownComponentType, "UNKNOWN_COMPONENT_TYPE"},
    {Err::kPodUnreachable, "POD_UNREACHABLE"},
    {Err::kDeploymentFailed, "DEPLOYMENT_FAILED"},
    {Err::kComponentNotFound, "COMPONENT_NOT_FOUND"},
    {Err::kPackageNotFound, "PACKAGE_NOT_FOUND"},
    {Err::kNoEligiblePod, "NO_ELIGIBLE_POD"},
    {Err::kNoMatchingComponentType, "NO_MATCHING_COMPONENT_TYPE"},
    {Err::kPostDeploymentFailed, "POST_DEPLOYMENT_FAILED"},
    {Err::kAlreadyRegistered, "ALREADY_REGISTERED"},
    {Err::kSurrogateNotFound, "SURROGATE_NOT_FOUND"},
    {Err::kCapacityExhausted, "CAPACITY_EXHAUSTED"},
    {Err::kInstanceNotFound, "INSTANCE_NOT_FOUND"},
    {Err::kContentSourceUnavailable, "CONTENT_SOURCE_UNAVAILABLE"},
    {Err::kContentNotFound, "CONTENT_NOT_FOUND"},
    {Err::kSegmentNotFound, "SEGMENT_NOT_FOUND"},
    {Err::kRegistrationFailed, "REGISTRATION_FAILED"},
    {Err::kIncompleteTrace, "INCOMPLETE_TRACE"},
    {Err::kBadRequest, "BAD_REQUEST"},
    {Err::kInternal, "INTERNAL"},
}};

}  // namespace

std::string_view err_name(Err code) {
  for (const auto& [c, name] : kErrNames) {
    if (c == code) return name;
  }
  return "INTERNAL";
}

Err err_from_name(std::string_view name) {
  for (const auto& [c, n] : kErrNames) {
    if (n == name) return c;
  }
  return Err::kInternal;
}

int err_http_status(Err code) {
  switch (code) {
    case Err::kPlanNotFound:
    case Err::kUnknownComponentType:
    case Err::kComponentNotFound:
    case Err::kPackageNotFound:
    case Err::kSurrogateNotFound:
    case Err::kInstanceNotFound:
    case Err::kContentNotFound:
    case Err::kSegmentNotFound:
      return 404;
    case Err::kAlreadyRegistered:
    case Err::kCapacityExhausted:
      return 409;
    case Err::kInvalidContent:
    case Err::kBadRequest:
      return 400;
    case Err::kNoEligiblePod:
    case Err::kNoMatchingComponentType:
      return 422;
    case Err::kPodUnreachable:
    case Err::kDeploymentFailed:
    case Err::kOrchestrationStepFailed:
    case Err::kStepCallFailed:
    case Err::kPostDeploymentFailed:
    case Err::kRegistrationFailed:
    case Err::kContentSourceUnavailable:
      return 502;
    case Err::kIncompleteTrace:
      return 422;
    case Err::kInternal:
      return 500;
  }
  return 500;
}

}  // namespace cdnfly
