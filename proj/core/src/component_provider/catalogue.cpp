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

#include "cdnfly/component_provider/catalogue.hpp"

#include "cdnfly/domain/error.hpp"

namespace cdnfly::component_provider {

void to_json(nlohmann::json& j, const CatalogueEntry& v) {
  j = nlohmann::json{{"type_id", v.type_id},
                     {"name", v.name},
                     {"features", v.features}};
}

void from_json(const nlohmann::json& j, CatalogueEntry& v) {
  j.at("type_id").get_to(v.type_id);
  v.name = j.value("name", "");
  j.at("features").get_to(v.features);
}

void Catalogue::register_type(CdnComponentType type) {
  if (find(type.type_id) != nullptr) {
    throw CdnError(Err::kBadRequest,
                   "component type " + type.type_id + " already registered");
  }
  types_.push_back(std::move(type));
}

const CdnComponentType* Catalogue::find(const std::string& type_id) const {
  for (const auto& type : types_) {
    if (type.type_id == type_id) return &type;
  }
  return nullptr;
}

std::vector<CatalogueEntry> Catalogue::summaries() const {
  std::vector<CatalogueEntry> out;
  out.reserve(types_.size());
  for (const auto& type : types_) {
    out.push_back(CatalogueEntry{type.type_id, type.name, type.features});
  }
  return out;
}

}  // namespace cdnfly::component_provider
