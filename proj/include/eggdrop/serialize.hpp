#pragma once

#include "eggdrop/audit.hpp"
#include "eggdrop/core.hpp"

#include <json.hpp>

#include <string>

namespace eggdrop {

using Json = nlohmann::ordered_json;

Json to_json(const DropPoint& p);
Json to_json(const HiddenTruth& t);
Json to_json(const Answer& a);
Json to_json(const StrategyReport& r);
Json to_json(const AuditReport& r);

DropPoint drop_point_from_json(const Json& j);
HiddenTruth truth_from_json(const Json& j);
Answer answer_from_json(const Json& j);
StrategyReport report_from_json(const Json& j);

// Pretty-printed, two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace eggdrop
