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

#ifndef CDNFLY_COMPONENT_PROVIDER_COMPONENT_REPOSITORY_HPP_
#define CDNFLY_COMPONENT_PROVIDER_COMPONENT_REPOSITORY_HPP_

#include <map>
#include <set>
#include <string>

#include "cdnfly/domain/types.hpp"

namespace cdnfly::component_provider {

// Holds the software packages ("VNFs") a surrogate can be built from.
// Seeded at startup, read-mostly afterwards.
class ComponentRepository {
 public:
  void store(MicroservicePackage package);

  // Returns the stored package unmodified; throws CdnError(kPackageNotFound)
  // for unknown ids.
  MicroservicePackage fetch(const std::string& package_id) const;

  bool contains(const std::string& package_id) const;
  std::set<std::string> package_ids() const;

 private:
  std::map<std::string, MicroservicePackage> packages_;
};

}  // namespace cdnfly::component_provider

#endif  // CDNFLY_COMPONENT_PROVIDER_COMPONENT_REPOSITORY_HPP_
