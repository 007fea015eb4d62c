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

#include "cdnfly/domain/validate.hpp"

namespace cdnfly {

std::string_view catalogue_issue_kind_name(CatalogueIssue::Kind kind) {
  switch (kind) {
    case CatalogueIssue::Kind::kDuplicateType:
      return "duplicate-type";
    case CatalogueIssue::Kind::kDanglingPackage:
      return "dangling-package";
    case CatalogueIssue::Kind::kDanglingPlan:
      return "dangling-plan";
    case CatalogueIssue::Kind::kNoMicroservices:
      return "no-microservices";
  }
  return "unknown";
}

ValidationReport validate_catalogue(
    const std::vector<CdnComponentType>& catalogue,
    const std::set<std::string>& package_ids,
    const std::set<std::string>& plan_ids) {
  ValidationReport report;
  std::set<std::string> seen_types;

  for (const auto& type : catalogue) {
    if (!seen_types.insert(type.type_id).second) {
      report.issues.push_back({CatalogueIssue::Kind::kDuplicateType,
                               type.type_id,
                               {}});
    }
    if (type.microservices.empty()) {
      report.issues.push_back({CatalogueIssue::Kind::kNoMicroservices,
                               type.type_id,
                               {}});
    }
    for (const auto& spec : type.microservices) {
      if (!package_ids.contains(spec.package_id)) {
        report.issues.push_back({CatalogueIssue::Kind::kDanglingPackage,
                                 type.type_id, spec.package_id});
      }
    }
    if (!plan_ids.contains(type.plan_id)) {
      report.issues.push_back(
          {CatalogueIssue::Kind::kDanglingPlan, type.type_id, type.plan_id});
    }
  }
  return report;
}

}  // namespace cdnfly
