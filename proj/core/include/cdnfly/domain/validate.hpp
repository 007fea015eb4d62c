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

#ifndef CDNFLY_DOMAIN_VALIDATE_HPP_
#define CDNFLY_DOMAIN_VALIDATE_HPP_

#include <set>
#include <string>
#include <vector>

#include "cdnfly/domain/types.hpp"

namespace cdnfly {

struct CatalogueIssue {
  enum class Kind {
    kDuplicateType,
    kDanglingPackage,
    kDanglingPlan,
    kNoMicroservices,
  };
  Kind kind;
  std::string type_id;
  std::string ref;  // offending package/plan id, empty otherwise

  friend bool operator==(const CatalogueIssue&,
                         const CatalogueIssue&) = default;
};

std::string_view catalogue_issue_kind_name(CatalogueIssue::Kind kind);

struct ValidationReport {
  std::vector<CatalogueIssue> issues;
  bool ok() const { return issues.empty(); }
};

// Cross-checks a catalogue against the package and plan repositories.
// Report style: collects every dangling package_id/plan_id, duplicate
// type_id and empty decomposition; an empty report means consistent.
ValidationReport validate_catalogue(
    const std::vector<CdnComponentType>& catalogue,
    const std::set<std::string>& package_ids,
    const std::set<std::string>& plan_ids);

}  // namespace cdnfly

#endif  // CDNFLY_DOMAIN_VALIDATE_HPP_
