#ifndef PERMV_REPORT_HPP
#define PERMV_REPORT_HPP

#include <json.hpp>

#include "permv/vnum.hpp"

namespace permv {

// Structured report document (schema version 1). Field order is fixed so
// serialized output is byte-stable at a fixed seed; wall-clock timings are
// included only on request.
using ReportDocument = nlohmann::ordered_json;

inline constexpr int kReportVersion = 1;

ReportDocument make_report(const std::string& command);

ReportDocument vnumber_to_json(const VNumberReport& r, bool with_timings);

ReportDocument table_report(const std::vector<ShapeSpec>& shapes, int cap_degree,
                            std::uint64_t seed, bool with_timings,
                            const BuchbergerCaps& caps = {});

// Default desk-scale shape suite (one row per summary-table case).
std::vector<ShapeSpec> default_table_suite(const FieldSpec& field);

std::string table_to_csv(const ReportDocument& doc);
std::string table_to_text(const ReportDocument& doc);

} // namespace permv

#endif
