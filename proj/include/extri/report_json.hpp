#ifndef EXTRI_REPORT_JSON_HPP
#define EXTRI_REPORT_JSON_HPP

#include <json.hpp>

#include "extri/covers.hpp"
#include "extri/extremal.hpp"
#include "extri/propcheck.hpp"
#include "extri/search.hpp"

namespace extri {

/// Version stamped into every top-level report as "schema".
inline constexpr int kReportSchema = 1;

using Json = nlohmann::ordered_json;

/// Exact integers: a JSON number when it fits in 64 bits, else a decimal string.
Json big_to_json(const BigCount& value);

Json to_json(const CoverCertificate& cert);
Json to_json(const CoverGraphReport& report);
Json to_json(const BoundsTriple& bounds);
Json to_json(const CheckResult& check);
Json to_json(const PropReport& report);
Json to_json(const SearchReport& report);
Json to_json(const BatteryReport& report);

} // namespace extri

#endif // EXTRI_REPORT_JSON_HPP
