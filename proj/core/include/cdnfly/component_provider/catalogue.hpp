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

#ifndef CDNFLY_COMPONENT_PROVIDER_CATALOGUE_HPP_
#define CDNFLY_COMPONENT_PROVIDER_CATALOGUE_HPP_

#include <json.hpp>

#include <set>
#include <string>
#include <vector>

#include "cdnfly/domain/types.hpp"

namespace cdnfly::component_provider {

// The public face of one catalogue entry. Decompositions stay
// provider-internal; consumers only see the feature set.
struct CatalogueEntry {
  std::string type_id;
  std::string name;
  std::set<std::string> features;

  friend bool operator==(const CatalogueEntry&,
                         const CatalogueEntry&) = default;
};

void to_json(nlohmann::json& j, const CatalogueEntry& v);
void from_json(const nlohmann::json& j, CatalogueEntry& v);

// The provider's list of deployable CDN component types. Mutation is
// admin-time only; lookups are safe for concurrent readers afterwards.
class Catalogue {
 public:
  // Throws CdnError(kBadRequest) on a duplicate type_id.
  void register_type(CdnComponentType type);

  const CdnComponentType* find(const std::string& type_id) const;
  const std::vector<CdnComponentType>& types() const { return types_; }
  std::vector<CatalogueEntry> summaries() const;

 private:
  std::vector<CdnComponentType> types_;  // registration order preserved
};

}  // namespace cdnfly::component_provider

#endif  // CDNFLY_COMPONENT_PROVIDER_CATALOGUE_HPP_
