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

#ifndef CDNFLY_DOMAIN_TYPES_HPP_
#define CDNFLY_DOMAIN_TYPES_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cdnfly/domain/access_info.hpp"

namespace cdnfly {

// All domain objects are immutable value types: safe to copy across threads,
// compared member-wise, serialized to snake_case JSON with the exact field
// names declared here.

// ---------------------------------------------------------------------------
// Geography and infrastructure

struct Region {
  std::string id;  // normalized to lowercase, unique within a scenario
  std::string display_name;

  static Region make(std::string id, std::string display_name = "");

  friend bool operator==(const Region&, const Region&) = default;
};

std::string normalize_region_id(std::string id);

// High-level view of one Point of Deployment as advertised to the CDN
// provider: where it is, how much room it has, how to reach its agent.
struct PodDescriptor {
  std::string pod_id;
  Region region;
  int capacity_total = 0;  // instance slots
  int capacity_free = 0;   // 0 <= capacity_free <= capacity_total
  AccessInfo access;

  friend bool operator==(const PodDescriptor&, const PodDescriptor&) = default;
};

// ---------------------------------------------------------------------------
// Component catalogue and packaging

// Microservice roles are open-ended strings; these two ship in-box.
using Role = std::string;
inline constexpr const char* kRoleCacheNode = "cache-node";
inline constexpr const char* kRoleAbrStreamingServer = "abr-streaming-server";

struct MicroserviceSpec {
  Role role;
  std::string package_id;
  std::map<std::string, std::string> config;

  friend bool operator==(const MicroserviceSpec&,
                         const MicroserviceSpec&) = default;
};

// One catalogue entry: the advertised feature set plus its decomposition
// into microservices and the orchestration plan that wires them together.
struct CdnComponentType {
  std::string type_id;
  std::string name;
  std::set<std::string> features;  // e.g. "ABR-streaming", "caching"
  std::vector<MicroserviceSpec> microservices;  // non-empty
  std::string plan_id;

  friend bool operator==(const CdnComponentType&,
                         const CdnComponentType&) = default;
};

// Backend-neutral launch descriptor: kind "factory" names an in-process
// service factory; kind "image" would name a container image for an
// external backend.
struct LaunchSpec {
  std::string kind;
  std::string ref;

  friend bool operator==(const LaunchSpec&, const LaunchSpec&) = default;
};

// Declared mount points: every package exposes exactly one control and one
// data interface.
struct EndpointSpec {
  std::string control_path = "/control";
  std::string data_path = "/data";

  friend bool operator==(const EndpointSpec&, const EndpointSpec&) = default;
};

// The deployable unit held in the component repository.
struct MicroservicePackage {
  std::string package_id;
  Role role;
  std::string version;  // semver
  LaunchSpec launch_spec;
  EndpointSpec endpoint_spec;

  friend bool operator==(const MicroservicePackage&,
                         const MicroservicePackage&) = default;
};

// ---------------------------------------------------------------------------
// Deployed instances and provisioning records

enum class InstanceState { kDeployed, kOrchestrated, kFailed, kUndeployed };

std::string_view instance_state_name(InstanceState s);
InstanceState instance_state_from_name(std::string_view name);

// Legal transitions: deployed->orchestrated, deployed|orchestrated->failed,
// any->undeployed.
bool instance_transition_allowed(InstanceState from, InstanceState to);

struct MicroserviceInstance {
  std::string instance_id;  // unique per PoD
  Role role;
  AccessInfo control_access;
  AccessInfo data_access;
  std::string pod_id;
  InstanceState state = InstanceState::kDeployed;

  friend bool operator==(const MicroserviceInstance&,
                         const MicroserviceInstance&) = default;
};

// What one microservice learns about another during orchestration; the body
// of a peer-distribution call is a list of these.
struct PeerInfo {
  std::string instance_id;
  Role role;
  AccessInfo control_access;
  AccessInfo data_access;

  static PeerInfo from_instance(const MicroserviceInstance& instance);

  friend bool operator==(const PeerInfo&, const PeerInfo&) = default;
};

enum class ProvisionStatus {
  kDeploying,
  kDeployed,
  kOrchestrating,
  kProvisioned,
  kRegistered,
  kDisposed,
  kFailed,
};

std::string_view provision_status_name(ProvisionStatus s);
ProvisionStatus provision_status_from_name(std::string_view name);

// Forward walk of the lifecycle. "failed" is reachable from every live
// status; "disposed" closes provisioned/registered/failed records.
bool provision_transition_allowed(ProvisionStatus from, ProvisionStatus to);
bool is_valid_status_walk(const std::vector<ProvisionStatus>& walk);

// Lifecycle state of one provisioned component.
struct ProvisionRecord {
  std::string component_id;
  std::string type_id;
  std::string pod_id;
  std::vector<MicroserviceInstance> instances;
  ProvisionStatus status = ProvisionStatus::kDeploying;
  std::map<std::string, std::int64_t> timestamps;  // event name -> mono ns

  friend bool operator==(const ProvisionRecord&,
                         const ProvisionRecord&) = default;
};

// ---------------------------------------------------------------------------
// Orchestration plans

enum class StepKind {
  kCollectAccessInfo,
  kDistributePeerInfo,
  kVerifyHealth,
  kNotifyComplete,
};

std::string_view step_kind_name(StepKind k);
StepKind step_kind_from_name(std::string_view name);

struct WorkflowStep {
  StepKind kind = StepKind::kCollectAccessInfo;
  std::optional<Role> target_role;  // no filter when absent
  int retry_limit = 3;              // >= 0
  int timeout = 5000;               // per-call timeout, ms, > 0

  friend bool operator==(const WorkflowStep&, const WorkflowStep&) = default;
};

struct OrchestrationPlan {
  std::string plan_id;
  std::vector<WorkflowStep> steps;  // empty only for single-microservice types

  friend bool operator==(const OrchestrationPlan&,
                         const OrchestrationPlan&) = default;
};

// ---------------------------------------------------------------------------
// Content

struct ContentItem {
  std::string content_id;
  std::uint64_t size_bytes = 0;  // > 0
  double duration_s = 0.0;       // > 0 for streamable content
  std::uint64_t blob_seed = 0;   // blob bytes are f(blob_seed, size_bytes)

  friend bool operator==(const ContentItem&, const ContentItem&) = default;
};

// The controller's placement decision for one surrogate: which contents to
// pull and from where.
struct ContentPlacement {
  std::string surrogate_id;
  std::vector<std::string> contents;
  AccessInfo media_server;

  friend bool operator==(const ContentPlacement&,
                         const ContentPlacement&) = default;
};

// ---------------------------------------------------------------------------
// CDN provider domain

struct RequestEvent {
  std::string region;  // region id
  std::string content_id;
  std::int64_t t = 0;  // mono ns on the scenario timeline

  friend bool operator==(const RequestEvent&, const RequestEvent&) = default;
};

struct ContentCount {
  std::string content_id;
  std::uint64_t request_count = 0;

  friend bool operator==(const ContentCount&, const ContentCount&) = default;
};

struct TimeWindow {
  std::int64_t start = 0;  // mono ns
  std::int64_t end = 0;

  friend bool operator==(const TimeWindow&, const TimeWindow&) = default;
};

struct FlashCrowdTrigger {
  Region region;
  std::vector<ContentCount> top_contents;  // sorted descending by count
  TimeWindow window;
  double rate = 0.0;  // requests/s over the window

  friend bool operator==(const FlashCrowdTrigger&,
                         const FlashCrowdTrigger&) = default;
};

struct SurrogateRegistration {
  std::string surrogate_id;
  Region region;
  AccessInfo control_access;
  AccessInfo data_access;
  bool ready = false;  // only flips via notify_ready

  friend bool operator==(const SurrogateRegistration&,
                         const SurrogateRegistration&) = default;
};

enum class TargetKind { kSurrogate, kOrigin };

std::string_view target_kind_name(TargetKind k);
TargetKind target_kind_from_name(std::string_view name);

struct RedirectDecision {
  AccessInfo target;
  TargetKind target_kind = TargetKind::kOrigin;
  std::optional<std::string> surrogate_id;

  friend bool operator==(const RedirectDecision&,
                         const RedirectDecision&) = default;
};

// ---------------------------------------------------------------------------
// Tracing and latency reporting

struct TraceEvent {
  std::uint64_t seq = 0;  // strictly increasing per run, collector-assigned
  std::string actor;
  std::string action;  // canonical label, e.g. "F4.5-deploy-request"
  std::int64_t t = 0;  // mono ns at the emitting service
  std::string correlation_id;

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

// Delays for one provisioning run, in seconds.
struct LatencySample {
  double deployment_delay = 0.0;
  double orchestration_delay = 0.0;
  double provisioning_delay = 0.0;

  friend bool operator==(const LatencySample&, const LatencySample&) = default;
};

struct LatencyStats {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation (n - 1)

  friend bool operator==(const LatencyStats&, const LatencyStats&) = default;
};

struct LatencyReport {
  std::vector<LatencySample> samples;
  LatencyStats deployment;
  LatencyStats orchestration;
  LatencyStats provisioning;

  friend bool operator==(const LatencyReport&, const LatencyReport&) = default;
};

}  // namespace cdnfly

#endif  // CDNFLY_DOMAIN_TYPES_HPP_
