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

#include "cdnfly/domain/json.hpp"

namespace cdnfly {

using nlohmann::json;

void to_json(json& j, const Uri& v) { j = v.str(); }

void from_json(const json& j, Uri& v) { v = parse_uri(j.get<std::string>()); }

void to_json(json& j, const AccessInfo& v) {
  j = json{{"endpoint", v.endpoint}, {"credential", v.credential}};
}

void from_json(const json& j, AccessInfo& v) {
  j.at("endpoint").get_to(v.endpoint);
  v.credential = j.value("credential", "");
}

void to_json(json& j, const Region& v) {
  j = json{{"id", v.id}, {"display_name", v.display_name}};
}

void from_json(const json& j, Region& v) {
  v.id = normalize_region_id(j.at("id").get<std::string>());
  v.display_name = j.value("display_name", "");
}

void to_json(json& j, const PodDescriptor& v) {
  j = json{{"pod_id", v.pod_id},
           {"region", v.region},
           {"capacity_total", v.capacity_total},
           {"capacity_free", v.capacity_free},
           {"access", v.access}};
}

void from_json(const json& j, PodDescriptor& v) {
  j.at("pod_id").get_to(v.pod_id);
  j.at("region").get_to(v.region);
  j.at("capacity_total").get_to(v.capacity_total);
  j.at("capacity_free").get_to(v.capacity_free);
  j.at("access").get_to(v.access);
}

void to_json(json& j, const MicroserviceSpec& v) {
  j = json{{"role", v.role},
           {"package_id", v.package_id},
           {"config", v.config}};
}

void from_json(const json& j, MicroserviceSpec& v) {
  j.at("role").get_to(v.role);
  j.at("package_id").get_to(v.package_id);
  if (j.contains("config")) j.at("config").get_to(v.config);
}

void to_json(json& j, const CdnComponentType& v) {
  j = json{{"type_id", v.type_id},
           {"name", v.name},
           {"features", v.features},
           {"microservices", v.microservices},
           {"plan_id", v.plan_id}};
}

void from_json(const json& j, CdnComponentType& v) {
  j.at("type_id").get_to(v.type_id);
  v.name = j.value("name", "");
  j.at("features").get_to(v.features);
  j.at("microservices").get_to(v.microservices);
  j.at("plan_id").get_to(v.plan_id);
}

void to_json(json& j, const LaunchSpec& v) {
  j = json{{"kind", v.kind}, {"ref", v.ref}};
}

void from_json(const json& j, LaunchSpec& v) {
  j.at("kind").get_to(v.kind);
  j.at("ref").get_to(v.ref);
}

void to_json(json& j, const EndpointSpec& v) {
  j = json{{"control_path", v.control_path}, {"data_path", v.data_path}};
}

void from_json(const json& j, EndpointSpec& v) {
  v.control_path = j.value("control_path", "/control");
  v.data_path = j.value("data_path", "/data");
}

void to_json(json& j, const MicroservicePackage& v) {
  j = json{{"package_id", v.package_id},
           {"role", v.role},
           {"version", v.version},
           {"launch_spec", v.launch_spec},
           {"endpoint_spec", v.endpoint_spec}};
}

void from_json(const json& j, MicroservicePackage& v) {
  j.at("package_id").get_to(v.package_id);
  j.at("role").get_to(v.role);
  v.version = j.value("version", "0.0.0");
  j.at("launch_spec").get_to(v.launch_spec);
  if (j.contains("endpoint_spec")) j.at("endpoint_spec").get_to(v.endpoint_spec);
}

void to_json(json& j, const MicroserviceInstance& v) {
  j = json{{"instance_id", v.instance_id},
           {"role", v.role},
           {"control_access", v.control_access},
           {"data_access", v.data_access},
           {"pod_id", v.pod_id},
           {"state", instance_state_name(v.state)}};
}

void from_json(const json& j, MicroserviceInstance& v) {
  j.at("instance_id").get_to(v.instance_id);
  j.at("role").get_to(v.role);
  j.at("control_access").get_to(v.control_access);
  j.at("data_access").get_to(v.data_access);
  j.at("pod_id").get_to(v.pod_id);
  v.state = instance_state_from_name(j.at("state").get<std::string>());
}

void to_json(json& j, const PeerInfo& v) {
  j = json{{"instance_id", v.instance_id},
           {"role", v.role},
           {"control_access", v.control_access},
           {"data_access", v.data_access}};
}

void from_json(const json& j, PeerInfo& v) {
  j.at("instance_id").get_to(v.instance_id);
  j.at("role").get_to(v.role);
  j.at("control_access").get_to(v.control_access);
  j.at("data_access").get_to(v.data_access);
}

void to_json(json& j, const ProvisionRecord& v) {
  j = json{{"component_id", v.component_id},
           {"type_id", v.type_id},
           {"pod_id", v.pod_id},
           {"instances", v.instances},
           {"status", provision_status_name(v.status)},
           {"timestamps", v.timestamps}};
}

void from_json(const json& j, ProvisionRecord& v) {
  j.at("component_id").get_to(v.component_id);
  j.at("type_id").get_to(v.type_id);
  j.at("pod_id").get_to(v.pod_id);
  j.at("instances").get_to(v.instances);
  v.status = provision_status_from_name(j.at("status").get<std::string>());
  if (j.contains("timestamps")) j.at("timestamps").get_to(v.timestamps);
}

void to_json(json& j, const WorkflowStep& v) {
  j = json{{"kind", step_kind_name(v.kind)},
           {"retry_limit", v.retry_limit},
           {"timeout", v.timeout}};
  if (v.target_role) j["target_role"] = *v.target_role;
}

void from_json(const json& j, WorkflowStep& v) {
  v.kind = step_kind_from_name(j.at("kind").get<std::string>());
  if (j.contains("target_role") && !j.at("target_role").is_null()) {
    v.target_role = j.at("target_role").get<std::string>();
  } else {
    v.target_role.reset();
  }
  v.retry_limit = j.value("retry_limit", 3);
  v.timeout = j.value("timeout", 5000);
}

void to_json(json& j, const OrchestrationPlan& v) {
  j = json{{"plan_id", v.plan_id}, {"steps", v.steps}};
}

void from_json(const json& j, OrchestrationPlan& v) {
  j.at("plan_id").get_to(v.plan_id);
  j.at("steps").get_to(v.steps);
}

void to_json(json& j, const ContentItem& v) {
  j = json{{"content_id", v.content_id},
           {"size_bytes", v.size_bytes},
           {"duration_s", v.duration_s},
           {"blob_seed", v.blob_seed}};
}

void from_json(const json& j, ContentItem& v) {
  j.at("content_id").get_to(v.content_id);
  j.at("size_bytes").get_to(v.size_bytes);
  v.duration_s = j.value("duration_s", 0.0);
  v.blob_seed = j.value("blob_seed", std::uint64_t{0});
}

void to_json(json& j, const ContentPlacement& v) {
  j = json{{"surrogate_id", v.surrogate_id},
           {"contents", v.contents},
           {"media_server", v.media_server}};
}

void from_json(const json& j, ContentPlacement& v) {
  j.at("surrogate_id").get_to(v.surrogate_id);
  j.at("contents").get_to(v.contents);
  j.at("media_server").get_to(v.media_server);
}

void to_json(json& j, const RequestEvent& v) {
  j = json{{"region", v.region}, {"content_id", v.content_id}, {"t", v.t}};
}

void from_json(const json& j, RequestEvent& v) {
  v.region = normalize_region_id(j.at("region").get<std::string>());
  j.at("content_id").get_to(v.content_id);
  v.t = j.value("t", std::int64_t{0});
}

void to_json(json& j, const ContentCount& v) {
  j = json{{"content_id", v.content_id}, {"request_count", v.request_count}};
}

void from_json(const json& j, ContentCount& v) {
  j.at("content_id").get_to(v.content_id);
  j.at("request_count").get_to(v.request_count);
}

void to_json(json& j, const TimeWindow& v) {
  j = json{{"start", v.start}, {"end", v.end}};
}

void from_json(const json& j, TimeWindow& v) {
  j.at("start").get_to(v.start);
  j.at("end").get_to(v.end);
}

void to_json(json& j, const FlashCrowdTrigger& v) {
  j = json{{"region", v.region},
           {"top_contents", v.top_contents},
           {"window", v.window},
           {"rate", v.rate}};
}

void from_json(const json& j, FlashCrowdTrigger& v) {
  j.at("region").get_to(v.region);
  if (j.contains("top_contents")) j.at("top_contents").get_to(v.top_contents);
  if (j.contains("window")) j.at("window").get_to(v.window);
  v.rate = j.value("rate", 0.0);
}

void to_json(json& j, const SurrogateRegistration& v) {
  j = json{{"surrogate_id", v.surrogate_id},
           {"region", v.region},
           {"control_access", v.control_access},
           {"data_access", v.data_access},
           {"ready", v.ready}};
}

void from_json(const json& j, SurrogateRegistration& v) {
  j.at("surrogate_id").get_to(v.surrogate_id);
  j.at("region").get_to(v.region);
  j.at("control_access").get_to(v.control_access);
  j.at("data_access").get_to(v.data_access);
  v.ready = j.value("ready", false);
}

void to_json(json& j, const RedirectDecision& v) {
  j = json{{"target", v.target},
           {"target_kind", target_kind_name(v.target_kind)}};
  if (v.surrogate_id) j["surrogate_id"] = *v.surrogate_id;
}

void from_json(const json& j, RedirectDecision& v) {
  j.at("target").get_to(v.target);
  v.target_kind = target_kind_from_name(j.at("target_kind").get<std::string>());
  if (j.contains("surrogate_id") && !j.at("surrogate_id").is_null()) {
    v.surrogate_id = j.at("surrogate_id").get<std::string>();
  } else {
    v.surrogate_id.reset();
  }
}

void to_json(json& j, const TraceEvent& v) {
  j = json{{"seq", v.seq},
           {"actor", v.actor},
           {"action", v.action},
           {"t", v.t},
           {"correlation_id", v.correlation_id}};
}

void from_json(const json& j, TraceEvent& v) {
  v.seq = j.value("seq", std::uint64_t{0});
  j.at("actor").get_to(v.actor);
  j.at("action").get_to(v.action);
  j.at("t").get_to(v.t);
  j.at("correlation_id").get_to(v.correlation_id);
}

void to_json(json& j, const LatencySample& v) {
  j = json{{"deployment_delay", v.deployment_delay},
           {"orchestration_delay", v.orchestration_delay},
           {"provisioning_delay", v.provisioning_delay}};
}

void from_json(const json& j, LatencySample& v) {
  j.at("deployment_delay").get_to(v.deployment_delay);
  j.at("orchestration_delay").get_to(v.orchestration_delay);
  j.at("provisioning_delay").get_to(v.provisioning_delay);
}

void to_json(json& j, const LatencyStats& v) {
  j = json{{"mean", v.mean}, {"stddev", v.stddev}};
}

void from_json(const json& j, LatencyStats& v) {
  j.at("mean").get_to(v.mean);
  j.at("stddev").get_to(v.stddev);
}

void to_json(json& j, const LatencyReport& v) {
  j = json{{"samples", v.samples},
           {"deployment", v.deployment},
           {"orchestration", v.orchestration},
           {"provisioning", v.provisioning}};
}

void from_json(const json& j, LatencyReport& v) {
  j.at("samples").get_to(v.samples);
  j.at("deployment").get_to(v.deployment);
  j.at("orchestration").get_to(v.orchestration);
  j.at("provisioning").get_to(v.provisioning);
}

}  // namespace cdnfly
