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

#ifndef CDNFLY_POD_BACKEND_HPP_
#define CDNFLY_POD_BACKEND_HPP_

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "cdnfly/domain/trace.hpp"
#include "cdnfly/domain/types.hpp"
#include "cdnfly/pod/abr_server.hpp"
#include "cdnfly/pod/cache_node.hpp"
#include "cdnfly/util/service_host.hpp"

namespace cdnfly::pod {

// Instance lifecycle backend behind the PoD agent. The in-process backend
// is the default; an external (container) backend can slot in here without
// touching any caller, resolving launch specs of kind "image" and passing
// the trace collector endpoint through the instance config instead of
// sharing the sink object.
class InstanceBackend {
 public:
  virtual ~InstanceBackend() = default;

  virtual bool resolvable(const LaunchSpec& launch_spec) const = 0;

  // Starts a live instance bound to host:port with the package's declared
  // control/data paths and returns its descriptor (state kDeployed).
  virtual MicroserviceInstance start(
      const MicroservicePackage& package,
      const std::map<std::string, std::string>& config,
      const std::string& instance_id, const std::string& pod_id,
      const std::string& host, int port) = 0;

  // Closes the instance's endpoints. Unknown ids are the caller's bug.
  virtual void stop(const std::string& instance_id) = 0;
};

// Launch-spec kind understood by the in-process backend.
inline constexpr const char* kLaunchKindFactory = "factory";

// Runs each "VNF" as an in-process service bound to a fresh port. Factories:
// "cache-node" and "abr-streaming-server".
class InProcessBackend final : public InstanceBackend {
 public:
  explicit InProcessBackend(std::shared_ptr<TraceSink> sink);
  ~InProcessBackend() override;

  bool resolvable(const LaunchSpec& launch_spec) const override;
  MicroserviceInstance start(const MicroservicePackage& package,
                             const std::map<std::string, std::string>& config,
                             const std::string& instance_id,
                             const std::string& pod_id, const std::string& host,
                             int port) override;
  void stop(const std::string& instance_id) override;

  // Direct handles for tests; nullptr when the instance is not live or has
  // a different role.
  CacheNode* cache(const std::string& instance_id);
  AbrServer* abr(const std::string& instance_id);

 private:
  struct Live {
    std::unique_ptr<ServiceHost> host;
    std::unique_ptr<CacheNode> cache;
    std::unique_ptr<AbrServer> abr;
  };

  std::shared_ptr<TraceSink> sink_;
  std::mutex mu_;
  std::map<std::string, Live> live_;
};

}  // namespace cdnfly::pod

#endif  // CDNFLY_POD_BACKEND_HPP_
