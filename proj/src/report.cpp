#include "fusionlab/report.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "fusionlab/errors.hpp"

namespace fusionlab {

using nlohmann::ordered_json;

ReportFormat parse_report_format(const std::string& text) {
  if (text == "csv") return ReportFormat::Csv;
  if (text == "json") return ReportFormat::Json;
  throw InvalidArgument("unknown report format '" + text + "'");
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string opt_bool(const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : ""; }
std::string opt_int(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : ""; }

std::vector<std::vector<std::string>> split_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (quoted) {
      if (ch == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        field += ch;
      }
      continue;
    }
    any = true;
    if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (ch == '\n') {
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
      any = false;
    } else if (ch != '\r') {
      field += ch;
    }
  }
  if (quoted) throw ParseError("unterminated quoted CSV field", 0, 0);
  if (any) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::optional<bool> parse_opt_bool(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s == "true") return true;
  if (s == "false") return false;
  throw ParseError("expected true/false, got '" + s + "'", 0, 0);
}

std::optional<std::uint64_t> parse_opt_int(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t used = 0;
  const auto v = std::stoull(s, &used);
  if (used != s.size()) throw ParseError("expected an integer, got '" + s + "'", 0, 0);
  return v;
}

ordered_json to_json(const Verdict& v) {
  ordered_json j;
  j["group"] = v.group;
  j["order"] = v.order;
  j["suite"] = v.suite;
  j["params"] = v.params;
  j["hypothesis"] = v.hypothesis ? ordered_json(*v.hypothesis) : ordered_json(nullptr);
  j["conclusion"] = v.conclusion ? ordered_json(*v.conclusion) : ordered_json(nullptr);
  j["status"] = to_string(v.status);
  j["k_p"] = v.k_p ? ordered_json(*v.k_p) : ordered_json(nullptr);
  j["sylow_order"] = v.sylow_order ? ordered_json(*v.sylow_order) : ordered_json(nullptr);
  j["d_value"] = v.d_value ? ordered_json(v.d_value->to_string()) : ordered_json(nullptr);
  j["d_value_decimal"] = v.d_value ? ordered_json(v.d_value->to_display_decimal()) : ordered_json(nullptr);
  j["witness"] = v.witness;
  return j;
}

template <typename T>
std::optional<T> opt_get(const ordered_json& j, const char* key) {
  const auto& x = j.at(key);
  if (x.is_null()) return std::nullopt;
  return x.get<T>();
}

}  // namespace

std::string format_csv(const std::vector<Verdict>& verdicts) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& v : verdicts) {
    out += csv_field(v.group) + "," + std::to_string(v.order) + "," + csv_field(v.suite) + "," +
           csv_field(v.params) + "," + opt_bool(v.hypothesis) + "," + opt_bool(v.conclusion) + "," +
           to_string(v.status) + "," + opt_int(v.k_p) + "," + opt_int(v.sylow_order) + "," +
           (v.d_value ? v.d_value->to_string() : "") + "," + csv_field(v.witness) + "\n";
  }
  return out;
}

std::string format_json(const std::vector<Verdict>& verdicts) {
  if (verdicts.empty()) return "[]\n";
  std::string out = "[\n";
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    out += "  " + to_json(verdicts[i]).dump();
    out += i + 1 < verdicts.size() ? ",\n" : "\n";
  }
  return out + "]\n";
}

std::string format_report(const std::vector<Verdict>& verdicts, ReportFormat format) {
  return format == ReportFormat::Csv ? format_csv(verdicts) : format_json(verdicts);
}

std::vector<Verdict> parse_csv(const std::string& text) {
  auto rows = split_csv(text);
  if (rows.empty()) throw ParseError("missing CSV header", 1, 1);
  std::string header;
  for (std::size_t i = 0; i < rows[0].size(); ++i) header += (i ? "," : "") + rows[0][i];
  if (header != kCsvHeader) throw ParseError("unexpected CSV header", 1, 1);
  std::vector<Verdict> out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& f = rows[r];
    if (f.size() != 11) throw ParseError("expected 11 CSV fields", r + 1, 1);
    Verdict v;
    v.group = f[0];
    v.order = *parse_opt_int(f[1]);
    v.suite = f[2];
    v.params = f[3];
    v.hypothesis = parse_opt_bool(f[4]);
    v.conclusion = parse_opt_bool(f[5]);
    v.status = parse_status(f[6]);
    v.k_p = parse_opt_int(f[7]);
    v.sylow_order = parse_opt_int(f[8]);
    if (!f[9].empty()) v.d_value = ExactRatio::parse(f[9]);
    v.witness = f[10];
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Verdict> parse_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), 0, 0);
  }
  if (!doc.is_array()) throw ParseError("report must be a JSON array", 1, 1);
  std::vector<Verdict> out;
  try {
    for (const auto& j : doc) {
      Verdict v;
      v.group = j.at("group").get<std::string>();
      v.order = j.at("order").get<std::uint64_t>();
      v.suite = j.at("suite").get<std::string>();
      v.params = j.at("params").get<std::string>();
      v.hypothesis = opt_get<bool>(j, "hypothesis");
      v.conclusion = opt_get<bool>(j, "conclusion");
      v.status = parse_status(j.at("status").get<std::string>());
      v.k_p = opt_get<std::uint64_t>(j, "k_p");
      v.sylow_order = opt_get<std::uint64_t>(j, "sylow_order");
      if (auto d = opt_get<std::string>(j, "d_value")) v.d_value = ExactRatio::parse(*d);
      v.witness = j.at("witness").get<std::string>();
      out.push_back(std::move(v));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed verdict: ") + e.what(), 0, 0);
  }
  return out;
}

void write_report(const std::vector<Verdict>& verdicts, ReportFormat format, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << format_report(verdicts, format);
  if (!out.flush()) throw Error("failed writing '" + path + "'");
}

std::string format_summary(const RunSummary& s) {
  std::ostringstream out;
  out << "groups: " << s.groups_run;
  if (s.groups_above_max_order) out << " (" << s.groups_above_max_order << " above max order, not run)";
  out << "\nconfirmed: " << s.confirmed << "\nvacuous: " << s.vacuous << "\nrefuted: " << s.refuted
      << "\nskipped: " << s.skipped << "\nerrors: " << s.errors << "\n";
  return out.str();
}

}  // namespace fusionlab
