#include "permv/report.hpp"

#include <iomanip>
#include <sstream>

namespace permv {

namespace {

ReportDocument ideal_to_json(const Ideal& I) {
    ReportDocument arr = ReportDocument::array();
    for (const auto& g : I.generators()) arr.push_back(g.to_string());
    return arr;
}

} // namespace

ReportDocument make_report(const std::string& command) {
    ReportDocument doc;
    doc["schema_version"] = kReportVersion;
    doc["tool"] = "permv";
    doc["command"] = command;
    return doc;
}

ReportDocument vnumber_to_json(const VNumberReport& r, bool with_timings) {
    ReportDocument j;
    j["shape"] = r.shape.to_string();
    j["family"] = family_name(r.shape.family);
    j["rows"] = r.shape.rows;
    j["cols"] = r.shape.cols;
    j["status"] = vstatus_name(r.status);
    j["lower"] = r.lower;
    if (r.upper >= 0)
        j["upper"] = r.upper;
    else
        j["upper"] = nullptr;
    if (r.status == VStatus::bounds_only)
        j["v"] = nullptr;
    else
        j["v"] = r.value();
    if (r.witness) {
        ReportDocument w;
        w["f"] = r.witness->f.to_string();
        w["degree"] = r.witness->degree;
        w["colon"] = ideal_to_json(r.witness->expected_colon);
        w["verified"] = r.witness_verified;
        w["provenance"] = r.witness->provenance;
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    j["note"] = r.note;
    if (with_timings) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

ReportDocument table_report(const std::vector<ShapeSpec>& shapes, int cap_degree,
                            std::uint64_t seed, bool with_timings, const BuchbergerCaps& caps) {
    ReportDocument doc = make_report("table");
    doc["cap_degree"] = cap_degree;
    doc["seed"] = seed;
    ReportDocument rows = ReportDocument::array();
    bool all_match = true;
    for (const auto& shape : shapes) {
        VNumberReport r = v_number(shape, cap_degree, seed, caps);
        ReportDocument row = vnumber_to_json(r, with_timings);
        int paper_v = -1;
        if (shape.field.characteristic() == 2) {
            paper_v = 0;
        } else if (is_classified(shape)) {
            paper_v = known_data(shape).paper_v;
        }
        if (paper_v >= 0)
            row["paper_v"] = paper_v;
        else
            row["paper_v"] = nullptr;
        bool match = r.status != VStatus::bounds_only && paper_v >= 0 && r.value() == paper_v;
        row["match"] = match;
        all_match = all_match && match;
        rows.push_back(std::move(row));
    }
    doc["rows"] = rows;
    doc["pass"] = all_match;
    return doc;
}

std::vector<ShapeSpec> default_table_suite(const FieldSpec& field) {
    std::vector<ShapeSpec> shapes;
    for (const char* s :
         {"generic:2x2", "generic:2x3", "generic:2x5", "generic:3x3", "generic:3x4",
          "symmetric:2", "symmetric:3", "symmetric:4", "hankel:2x2", "hankel:2x3", "hankel:2x4",
          "hankel:2x6", "hankel:3x3", "hankel:3x4", "hankel:3x5", "hankel:4x4", "hankel:3x6",
          "hankel:4x5", "hankel:3x7"})
        shapes.push_back(ShapeSpec::parse(s, field));
    return shapes;
}

std::string table_to_csv(const ReportDocument& doc) {
    std::ostringstream os;
    os << "family,shape,rows,cols,v,paper_v,status,match,witness_degree\n";
    for (const auto& row : doc.at("rows")) {
        os << row.at("family").get<std::string>() << ',' << row.at("shape").get<std::string>()
           << ',' << row.at("rows").get<int>() << ',' << row.at("cols").get<int>() << ',';
        if (row.at("v").is_null())
            os << "";
        else
            os << row.at("v").get<int>();
        os << ',';
        if (row.at("paper_v").is_null())
            os << "";
        else
            os << row.at("paper_v").get<int>();
        os << ',' << row.at("status").get<std::string>() << ','
           << (row.at("match").get<bool>() ? "true" : "false") << ',';
        if (!row.at("witness").is_null()) os << row.at("witness").at("degree").get<int>();
        os << '\n';
    }
    return os.str();
}

std::string table_to_text(const ReportDocument& doc) {
    std::ostringstream os;
    os << std::left << std::setw(14) << "shape" << std::setw(6) << "v" << std::setw(9)
       << "paper_v" << std::setw(14) << "status" << "match\n";
    for (const auto& row : doc.at("rows")) {
        os << std::left << std::setw(14) << row.at("shape").get<std::string>();
        os << std::setw(6) << (row.at("v").is_null() ? std::string("?")
                                                     : std::to_string(row.at("v").get<int>()));
        os << std::setw(9)
           << (row.at("paper_v").is_null() ? std::string("?")
                                           : std::to_string(row.at("paper_v").get<int>()));
        os << std::setw(14) << row.at("status").get<std::string>();
        os << (row.at("match").get<bool>() ? "yes" : "NO") << '\n';
    }
    os << (doc.at("pass").get<bool>() ? "PASS" : "FAIL") << '\n';
    return os.str();
}

} // namespace permv
