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

#ifndef CDNFLY_DOMAIN_JSON_HPP_
#define CDNFLY_DOMAIN_JSON_HPP_

#include <json.hpp>

#include "cdnfly/domain/types.hpp"

// Wire schema: UTF-8 JSON, snake_case field names matching the domain type
// fields exactly. Enums travel as their canonical name strings.

namespace cdnfly {

void to_json(nlohmann::json& j, const Uri& v);
void from_json(const nlohmann::json& j, Uri& v);

void to_json(nlohmann::json& j, const AccessInfo& v);
void from_json(const nlohmann::json& j, AccessInfo& v);

void to_json(nlohmann::json& j, const Region& v);
void from_json(const nlohmann::json& j, Region& v);

void to_json(nlohmann::json& j, const PodDescriptor& v);
void from_json(const nlohmann::json& j, PodDescriptor& v);

void to_json(nlohmann::json& j, const MicroserviceSpec& v);
void from_json(const nlohmann::json& j, MicroserviceSpec& v);

void to_json(nlohmann::json& j, const CdnComponentType& v);
void from_json(const nlohmann::json& j, CdnComponentType& v);

void to_json(nlohmann::json& j, const LaunchSpec& v);
void from_json(const nlohmann::json& j, LaunchSpec& v);

void to_json(nlohmann::json& j, const EndpointSpec& v);
void from_json(const nlohmann::json& j, EndpointSpec& v);

void to_json(nlohmann::json& j, const MicroservicePackage& v);
void from_json(const nlohmann::json& j, MicroservicePackage& v);

void to_json(nlohmann::json& j, const MicroserviceInstance& v);
void from_json(const nlohmann::json& j, MicroserviceInstance& v);

void to_json(nlohmann::json& j, const PeerInfo& v);
void from_json(const nlohmann::json& j, PeerInfo& v);

void to_json(nlohmann::json& j, const ProvisionRecord& v);
void from_json(const nlohmann::json& j, ProvisionRecord& v);

void to_json(nlohmann::json& j, const WorkflowStep& v);
void from_json(const nlohmann::json& j, WorkflowStep& v);

void to_json(nlohmann::json& j, const OrchestrationPlan& v);
void from_json(const nlohmann::json& j, OrchestrationPlan& v);

void to_json(nlohmann::json& j, const ContentItem& v);
void from_json(const nlohmann::json& j, ContentItem& v);

void to_json(nlohmann::json& j, const ContentPlacement& v);
void from_json(const nlohmann::json& j, ContentPlacement& v);

void to_json(nlohmann::json& j, const RequestEvent& v);
void from_json(const nlohmann::json& j, RequestEvent& v);

void to_json(nlohmann::json& j, const ContentCount& v);
void from_json(const nlohmann::json& j, ContentCount& v);

void to_json(nlohmann::json& j, const TimeWindow& v);
void from_json(const nlohmann::json& j, TimeWindow& v);

void to_json(nlohmann::json& j, const FlashCrowdTrigger& v);
void from_json(const nlohmann::json& j, FlashCrowdTrigger& v);

void to_json(nlohmann::json& j, const SurrogateRegistration& v);
void from_json(const nlohmann::json& j, SurrogateRegistration& v);

void to_json(nlohmann::json& j, const RedirectDecision& v);
void from_json(const nlohmann::json& j, RedirectDecision& v);

void to_json(nlohmann::json& j, const TraceEvent& v);
void from_json(const nlohmann::json& j, TraceEvent& v);

void to_json(nlohmann::json& j, const LatencySample& v);
void from_json(const nlohmann::json& j, LatencySample& v);

void to_json(nlohmann::json& j, const LatencyStats& v);
void from_json(const nlohmann::json& j, LatencyStats& v);

void to_json(nlohmann::json& j, const LatencyReport& v);
void from_json(const nlohmann::json& j, LatencyReport& v);

}  // namespace cdnfly

#endif  // CDNFLY_DOMAIN_JSON_HPP_
