// Copyright 2026 The metromodel Authors
// SPDX-License-Identifier: Apache-2.0

// Catalog of access-technology reference configurations. Each template is a
// complete model document: an aggregation stub, the access technology's
// elements and reference points, and customer-premises equipment, with
// customer/access/aggregation segments (or crosshaul segments for the RAN
// template). Wattages are placeholders; analysts supply power profiles.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "metro/result.hpp"
#include "metro/schema_io.hpp"

namespace metro {

enum class TemplateId {
  kFivegRuDuCsr,
  kFttb,
  kFttn,
  kGfast,
  kGpon,
  kHfcDocsis,
  kIpOverDwdm,
  kPtpEthernet,
  kRemotePhy,
  kRfog,
  kXdsl,
  kXgspon,
};

struct TemplateInfo {
  TemplateId id;
  std::string_view name;
  std::string_view description;
};

struct TemplateParams {
  std::string operator_id = "operator";
  // Merge the network termination with the residential gateway and subsume
  // the reference point between them. No effect on templates without CPE.
  bool integrated_cpe = false;
  // Template site id -> location label override.
  std::map<std::string, std::string> site_labels;
};

// Operator id given to customer-side segments and equipment.
inline constexpr std::string_view kSubscriberOperator = "subscriber";

// Static catalog, sorted by template name.
const std::vector<TemplateInfo>& list_templates();

std::string_view to_string(TemplateId id);
std::optional<TemplateId> parse_template_id(std::string_view name);

ModelDocument instantiate_template(TemplateId id, const TemplateParams& params = {});
// E-UNKNOWN-TEMPLATE for names outside the catalog.
Result<ModelDocument> instantiate_template(std::string_view name,
                                           const TemplateParams& params = {});

}  // namespace metro
