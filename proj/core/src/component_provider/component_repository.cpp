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

#include "cdnfly/component_provider/component_repository.hpp"

#include "cdnfly/domain/error.hpp"

namespace cdnfly::component_provider {

void ComponentRepository::store(MicroservicePackage package) {
  packages_[package.package_id] = std::move(package);
}

MicroservicePackage ComponentRepository::fetch(
    const std::string& package_id) const {
  const auto it = packages_.find(package_id);
  if (it == packages_.end()) {
    throw CdnError(Err::kPackageNotFound,
                   "no package with id " + package_id);
  }
  return it->second;
}

bool ComponentRepository::contains(const std::string& package_id) const {
  return packages_.contains(package_id);
}

std::set<std::string> ComponentRepository::package_ids() const {
  std::set<std::string> ids;
  for (const auto& [id, _] : packages_) ids.insert(id);
  return ids;
}

}  // namespace cdnfly::component_provider
