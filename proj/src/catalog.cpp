#include "fusionlab/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fusionlab/errors.hpp"
#include "fusionlab/families.hpp"
#include "fusionlab/presentation.hpp"
#include "fusionlab/todd_coxeter.hpp"

namespace fusionlab {

namespace {

std::vector<std::string> split(std::string_view text, std::string_view sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + sep.size();
  }
  return out;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::uint64_t parse_uint(const std::string& s, const std::string& context) {
  std::uint64_t v = 0;
  auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc{} || r.ptr != s.data() + s.size() || s.empty()) {
    throw InvalidArgument("bad number '" + s + "' in spec '" + context + "'");
  }
  return v;
}

struct FamilyShape {
  const char* name;
  std::size_t numbers;
  bool has_argument;
};

constexpr FamilyShape kFamilies[] = {
    {"cyclic", 1, false},        {"dihedral", 1, false},       {"symmetric", 1, false},
    {"alternating", 1, false},   {"gm", 1, false},             {"extraspecial2", 1, true},
    {"psl2", 1, false},          {"sl2", 1, false},            {"frobenius_affine", 3, false},
    {"presentation", 0, true},   {"file", 0, true},
};

GroupSpec parse_factor(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw InvalidArgument("spec '" + text + "' has no ':'");
  GroupSpec spec;
  spec.family = text.substr(0, colon);
  const FamilyShape* shape = nullptr;
  for (const auto& f : kFamilies) {
    if (spec.family == f.name) shape = &f;
  }
  if (shape == nullptr) throw InvalidArgument("unknown group family '" + spec.family + "'");
  std::string rest = text.substr(colon + 1);
  if (shape->numbers == 0) {
    if (rest.empty()) throw InvalidArgument("spec '" + text + "' needs a path");
    spec.argument = rest;
    return spec;
  }
  auto fields = split(rest, ":");
  if (fields.size() != shape->numbers + (shape->has_argument ? 1 : 0)) {
    throw InvalidArgument("spec '" + text + "' has the wrong number of parameters");
  }
  for (std::size_t i = 0; i < shape->numbers; ++i) spec.params.push_back(parse_uint(fields[i], text));
  if (shape->has_argument) {
    spec.argument = fields.back();
    if (spec.argument != "plus" && spec.argument != "minus") {
      throw InvalidArgument("extraspecial2 type must be plus or minus, got '" + spec.argument + "'");
    }
  }
  return spec;
}

std::string stem(const std::string& path) { return std::filesystem::path(path).stem().string(); }

}  // namespace

GroupSpec GroupSpec::parse(std::string_view text) {
  auto parts = split(text, " x ");
  if (parts.size() == 1) return parse_factor(trim(parts.front()));
  GroupSpec spec;
  spec.family = "product";
  for (const auto& p : parts) spec.factors.push_back(parse_factor(trim(p)));
  return spec;
}

std::string GroupSpec::to_string() const {
  if (!factors.empty()) {
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? " x " : "") + factors[i].to_string();
    return out;
  }
  std::string out = family;
  for (auto v : params) out += ":" + std::to_string(v);
  if (!argument.empty()) out += ":" + argument;
  return out;
}

std::string GroupSpec::display_name() const {
  if (!factors.empty()) {
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "x" : "") + factors[i].display_name();
    return out;
  }
  auto n = params.empty() ? 0 : params[0];
  auto num = std::to_string(n);
  if (family == "cyclic") return "C" + num;
  if (family == "dihedral") return "D" + num;
  if (family == "symmetric") return "S" + num;
  if (family == "alternating") return "A" + num;
  if (family == "gm") return "G_" + num;
  if (family == "extraspecial2") {
    if (n == 1) return argument == "plus" ? "D8" : "Q8";
    return "2^(1+" + std::to_string(2 * n) + ")" + (argument == "plus" ? "+" : "-");
  }
  if (family == "psl2") return "PSL2(" + num + ")";
  if (family == "sl2") return "SL2(" + num + ")";
  if (family == "frobenius_affine") {
    return "Frob(" + num + "," + std::to_string(params[1]) + "," + std::to_string(params[2]) + ")";
  }
  return stem(argument);
}

PermGroup construct(const GroupSpec& spec) {
  if (!spec.factors.empty()) {
    std::vector<PermGroup> groups;
    for (const auto& f : spec.factors) groups.push_back(construct(f));
    return direct_product(groups);
  }
  const auto& f = spec.family;
  const auto n = spec.params.empty() ? 0 : spec.params[0];
  if (f == "cyclic") return cyclic_group(n);
  if (f == "dihedral") return dihedral_group(n);
  if (f == "symmetric") return symmetric_group(n);
  if (f == "alternating") return alternating_group(n);
  if (f == "gm") return gm_group(static_cast<unsigned>(n));
  if (f == "extraspecial2") return extraspecial2_group(static_cast<unsigned>(n), spec.argument == "plus");
  if (f == "psl2") return psl2_group(n);
  if (f == "sl2") return sl2_group(n);
  if (f == "frobenius_affine") {
    return frobenius_affine_group(spec.params[0], static_cast<unsigned>(spec.params[1]), spec.params[2]);
  }
  if (f == "presentation") return todd_coxeter(load_presentation(spec.argument)).regular;
  if (f == "file") {
    auto entries = load_catalog(spec.argument);
    if (entries.size() != 1) {
      throw InvalidArgument("file:" + spec.argument + " holds " + std::to_string(entries.size()) +
                            " groups; expected exactly one");
    }
    return entries.front().group;
  }
  throw InvalidArgument("unknown group family '" + f + "'");
}

std::vector<std::string> builtin_specs() {
  return {
      // abelian
      "cyclic:2", "cyclic:3", "cyclic:4", "cyclic:5", "cyclic:6", "cyclic:7", "cyclic:8", "cyclic:9",
      "cyclic:10", "cyclic:12", "cyclic:15", "cyclic:16", "cyclic:2 x cyclic:2",
      "cyclic:2 x cyclic:2 x cyclic:2", "cyclic:2 x cyclic:2 x cyclic:2 x cyclic:2", "cyclic:3 x cyclic:3",
      "cyclic:4 x cyclic:2", "cyclic:5 x cyclic:5",
      // dihedral, symmetric, alternating
      "dihedral:6", "dihedral:8", "dihedral:10", "dihedral:12", "dihedral:14", "dihedral:16", "dihedral:18",
      "dihedral:20", "dihedral:22", "dihedral:26", "dihedral:30", "symmetric:3", "symmetric:4",
      "symmetric:5", "symmetric:6", "alternating:4", "alternating:5", "alternating:6",
      // 2-groups and 2-local examples
      "extraspecial2:1:minus", "extraspecial2:2:plus", "extraspecial2:2:minus", "sl2:3", "sl2:5", "sl2:7",
      "gm:1", "gm:2", "gm:3", "gm:4", "gm:5", "gm:6",
      // Frobenius groups GF(p^k) : C_r
      "frobenius_affine:7:1:3", "frobenius_affine:2:2:3", "frobenius_affine:3:2:2", "frobenius_affine:11:1:5",
      "frobenius_affine:13:1:3", "frobenius_affine:2:3:7", "frobenius_affine:2:4:5", "frobenius_affine:2:4:3",
      "frobenius_affine:5:2:3",
      // direct products
      "alternating:5 x cyclic:2", "symmetric:3 x cyclic:3", "dihedral:8 x cyclic:3",
      "extraspecial2:1:minus x cyclic:5", "symmetric:4 x cyclic:2", "alternating:4 x cyclic:2",
      "dihedral:10 x cyclic:5", "alternating:5 x cyclic:5", "symmetric:3 x symmetric:3",
      "alternating:4 x cyclic:3", "sl2:3 x cyclic:2", "gm:2 x cyclic:3", "symmetric:3 x cyclic:5",
      "dihedral:8 x cyclic:2", "extraspecial2:1:minus x cyclic:3", "dihedral:14 x cyclic:3",
      "extraspecial2:1:minus x cyclic:2", "symmetric:4 x cyclic:3", "psl2:7 x cyclic:2",
      "alternating:4 x alternating:4", "dihedral:10 x dihedral:6", "gm:3 x cyclic:5",
      // projective special linear groups on the projective line
      "psl2:4", "psl2:5", "psl2:7", "psl2:8", "psl2:9", "psl2:11", "psl2:13", "psl2:16", "psl2:19", "psl2:29",
  };
}

std::vector<CatalogEntry> builtin_catalog(std::uint64_t max_order) {
  std::vector<CatalogEntry> out;
  std::set<std::string> names;
  for (const auto& text : builtin_specs()) {
    auto spec = GroupSpec::parse(text);
    auto name = spec.display_name();
    if (!names.insert(name).second) throw InternalError("duplicate built-in group name " + name);
    PermGroup g = construct(spec);
    if (g.order() > max_order) continue;
    out.push_back(make_entry(name, g));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

CatalogEntry make_entry(const std::string& name, const PermGroup& g) {
  CatalogEntry e;
  e.name = name;
  e.degree = g.degree();
  for (const auto& s : g.generators()) e.generators.emplace_back(s.images().begin(), s.images().end());
  e.expected_order = g.order();
  e.group = g;
  return e;
}

namespace {

using ordered_json = nlohmann::ordered_json;

CatalogEntry entry_from_json(const ordered_json& rec, const std::string& where) {
  if (!rec.is_object()) throw InvalidArgument(where + ": record is not an object");
  for (const auto& [key, value] : rec.items()) {
    if (key != "name" && key != "degree" && key != "generators" && key != "expected_order") {
      throw InvalidArgument(where + ": unknown field '" + key + "'");
    }
  }
  CatalogEntry e;
  if (!rec.contains("name") || !rec["name"].is_string()) throw InvalidArgument(where + ": missing string 'name'");
  e.name = rec["name"].get<std::string>();
  const std::string ctx = where + " (" + e.name + ")";
  if (!rec.contains("degree") || !rec["degree"].is_number_unsigned() || rec["degree"].get<std::uint64_t>() == 0) {
    throw InvalidArgument(ctx + ": 'degree' must be a positive integer");
  }
  e.degree = rec["degree"].get<std::size_t>();
  if (!rec.contains("generators") || !rec["generators"].is_array()) {
    throw InvalidArgument(ctx + ": 'generators' must be an array of image arrays");
  }
  std::vector<Permutation> gens;
  std::size_t gi = 0;
  for (const auto& gen : rec["generators"]) {
    const std::string gctx = ctx + ", generator " + std::to_string(gi++);
    if (!gen.is_array() || gen.size() != e.degree) {
      throw InvalidArgument(gctx + ": expected an array of " + std::to_string(e.degree) + " points");
    }
    std::vector<Point> images;
    for (const auto& v : gen) {
      if (!v.is_number_unsigned()) throw InvalidArgument(gctx + ": images must be nonnegative integers");
      images.push_back(v.get<Point>());
    }
    e.generators.push_back(images);
    try {
      gens.emplace_back(std::move(images));
    } catch (const InvalidArgument& err) {
      throw InvalidArgument(gctx + ": " + err.what());
    }
  }
  if (rec.contains("expected_order")) {
    if (!rec["expected_order"].is_number_unsigned()) {
      throw InvalidArgument(ctx + ": 'expected_order' must be a positive integer");
    }
    e.expected_order = rec["expected_order"].get<std::uint64_t>();
  }
  e.group = PermGroup(e.degree, std::move(gens));
  if (e.expected_order && *e.expected_order != e.group.order()) {
    throw InvalidArgument(ctx + ": expected_order " + std::to_string(*e.expected_order) +
                          " but the generators give order " + std::to_string(e.group.order()));
  }
  return e;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

std::vector<CatalogEntry> parse_catalog(std::string_view text) {
  std::vector<CatalogEntry> out;
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return out;
  if (text[first] == '[') {
    ordered_json doc;
    try {
      doc = ordered_json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& err) {
      auto [line, col] = line_column(text, err.byte == 0 ? 0 : err.byte - 1);
      throw ParseError("malformed catalog JSON", line, col);
    }
    std::size_t i = 0;
    for (const auto& rec : doc) out.push_back(entry_from_json(rec, "record " + std::to_string(i++)));
    return out;
  }
  // One record per line.
  std::size_t line_no = 0;
  for (const auto& line : split(text, "\n")) {
    ++line_no;
    if (trim(line).empty()) continue;
    ordered_json rec;
    try {
      rec = ordered_json::parse(line);
    } catch (const nlohmann::json::parse_error& err) {
      throw ParseError("malformed catalog record", line_no, err.byte == 0 ? 1 : err.byte);
    }
    out.push_back(entry_from_json(rec, "line " + std::to_string(line_no)));
  }
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read catalog file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_catalog(buffer.str());
}

std::string dump_catalog(const std::vector<CatalogEntry>& entries) {
  std::string out = "[\n";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    ordered_json rec;
    rec["name"] = e.name;
    rec["degree"] = e.degree;
    rec["generators"] = e.generators;
    if (e.expected_order) rec["expected_order"] = *e.expected_order;
    out += rec.dump();
    out += i + 1 < entries.size() ? ",\n" : "\n";
  }
  out += "]\n";
  return out;
}

void write_catalog(const std::string& path, const std::vector<CatalogEntry>& entries) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write catalog file " + path);
  out << dump_catalog(entries);
  if (!out) throw InvalidArgument("failed writing catalog file " + path);
}

}  // namespace fusionlab
