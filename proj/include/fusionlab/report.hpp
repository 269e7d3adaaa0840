#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fusionlab/verify.hpp"

namespace fusionlab {

enum class ReportFormat { Csv, Json };

ReportFormat parse_report_format(const std::string& text);

inline constexpr const char* kCsvHeader =
    "group,order,suite,params,hypothesis,conclusion,status,k_p,sylow_order,d_value,witness";

// Absent optionals are empty CSV fields and JSON nulls. JSON rows also carry
// a display-only "d_value_decimal" that parsing ignores.
std::string format_csv(const std::vector<Verdict>& verdicts);
std::string format_json(const std::vector<Verdict>& verdicts);
std::string format_report(const std::vector<Verdict>& verdicts, ReportFormat format);

std::vector<Verdict> parse_csv(const std::string& text);
std::vector<Verdict> parse_json(const std::string& text);

// Throws Error on I/O failure.
void write_report(const std::vector<Verdict>& verdicts, ReportFormat format, const std::string& path);

std::string format_summary(const RunSummary& summary);

}  // namespace fusionlab
