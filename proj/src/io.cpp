#include "frieze/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace frieze {

namespace {

Json integer_json(const Integer& v) {
  if (fits_int64(v)) return to_int64(v);
  return to_string(v);  // too large for a JSON number
}

Integer integer_from(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

Json slice_json(const Slice& s) {
  Json a = Json::array();
  for (const auto& v : s) a.push_back(integer_json(v));
  return a;
}

Slice slice_from(const Json& j) {
  Slice s;
  for (const auto& v : j) s.push_back(integer_from(v));
  return s;
}

}  // namespace

Json band_to_json(const FriezeBand& b) {
  Json j;
  j["type"] = b.diagram().type().name();
  Json orientation = Json::array();
  for (auto [from, to] : b.diagram().arrows()) orientation.push_back({from + 1, to + 1});
  j["orientation"] = orientation;
  j["seed"] = slice_json(b.seed());
  j["period"] = b.period();
  Json columns = Json::array();
  for (const auto& c : b.columns()) columns.push_back(slice_json(c));
  j["columns"] = columns;
  return j;
}

OrientedDiagram diagram_from_json(const Json& record) {
  const DynkinType type = DynkinType::parse(record.at("type").get<std::string>());
  if (!record.contains("orientation")) return default_orientation(type);
  std::vector<OrientedDiagram::Arrow> arrows;
  for (const auto& a : record.at("orientation")) arrows.emplace_back(a.at(0).get<int>() - 1, a.at(1).get<int>() - 1);
  return OrientedDiagram(type, std::move(arrows));
}

Json geometric_to_json(int n, const ArcWeightMap& w) {
  const FriezeDescriptor d = descriptor_from_weights(n, w);
  Json spokes = Json::array(), boundary = Json::array();
  for (const auto& a : d.triangulation) (a.is_spoke() ? spokes : boundary).push_back(to_string(a));
  Json weights = Json::array();
  for (const auto& a : all_arcs(n)) weights.push_back({{"arc", to_string(a)}, {"w", integer_json(w[a])}});
  Json j;
  j["rank"] = n;
  j["descriptor"] = {{"spokes", spokes}, {"boundary", boundary}, {"divisor", integer_json(d.divisor)}};
  j["weights"] = weights;
  return j;
}

ArcWeightMap weights_from_json(const Json& record) {
  const int n = record.at("rank").get<int>();
  ArcWeightMap w(n);
  for (const auto& entry : record.at("weights")) {
    const TaggedArc a = parse_arc(entry.at("arc").get<std::string>());
    if (w.has(a)) throw std::invalid_argument("arc " + to_string(a) + " listed twice");
    w.set(a, integer_from(entry.at("w")));
  }
  if (!w.total()) throw std::invalid_argument("weights do not cover every arc");
  return w;
}

std::uint64_t fnv1a64(std::string_view data, std::uint64_t hash) {
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

namespace {

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[i] = digits[v & 15];
  return s;
}

}  // namespace

void write_listing(std::ostream& out, const std::vector<Json>& records) {
  std::uint64_t hash = fnv1a64("");
  for (const auto& r : records) {
    const std::string line = r.dump() + "\n";
    hash = fnv1a64(line, hash);
    out << line;
  }
  Json manifest;
  manifest["manifest"] = {{"count", records.size()}, {"checksum", "fnv1a64:" + hex64(hash)}};
  out << manifest.dump() << "\n";
}

Listing read_listing(std::istream& in) {
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  Listing listing;
  std::istringstream lines(text);
  std::string line;
  std::uint64_t hash = fnv1a64("");
  bool line_mode = true;
  std::vector<Json> parsed;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json j = Json::parse(line, nullptr, false);
    if (j.is_discarded()) {
      line_mode = false;
      break;
    }
    if (j.contains("manifest")) {
      listing.has_manifest = true;
      const auto& m = j["manifest"];
      listing.manifest_ok = m.value("count", std::size_t{0}) == parsed.size() &&
                            m.value("checksum", std::string()) == "fnv1a64:" + hex64(hash);
      continue;
    }
    hash = fnv1a64(line + "\n", hash);
    parsed.push_back(std::move(j));
  }
  if (line_mode) {
    listing.records = std::move(parsed);
    return listing;
  }
  Json whole = Json::parse(text);
  if (whole.is_array()) {
    for (auto& r : whole) listing.records.push_back(std::move(r));
  } else if (whole.contains("friezes")) {
    for (auto& r : whole["friezes"]) listing.records.push_back(std::move(r));
  } else {
    listing.records.push_back(std::move(whole));
  }
  return listing;
}

VerifyResult verify_record(const Json& record) {
  try {
    if (record.contains("weights")) {
      const ArcWeightMap w = weights_from_json(record);
      const auto check = check_weights(w.rank(), w);
      if (!check.ok) {
        const auto& v = check.violations.front();
        return {false, to_string(v.a) + " * " + to_string(v.b) + " = " + to_string(v.lhs) + " but the relation gives " +
                           to_string(v.rhs)};
      }
      return {true, "ok"};
    }
    const OrientedDiagram d = diagram_from_json(record);
    const Slice seed = slice_from(record.at("seed"));
    if (static_cast<int>(seed.size()) != d.rank()) return {false, "seed size does not match the rank"};
    auto v = validate_seed(d, seed);
    if (auto* bad = std::get_if<Invalid>(&v))
      return {false, "column " + std::to_string(bad->column) + ": " + to_string(bad->reason)};
    const FriezeBand& b = std::get<FriezeBand>(v);
    if (record.contains("period") && record["period"].get<int>() != b.period())
      return {false, "period is " + std::to_string(b.period()) + ", record says " + record["period"].dump()};
    if (record.contains("columns")) {
      long m = 0;
      for (const auto& c : record["columns"]) {
        const Slice col = slice_from(c);
        if (static_cast<int>(col.size()) != d.rank()) return {false, "column size does not match the rank"};
        for (int j = 0; j < d.rank(); ++j)
          if (col[j] != b.at(j, m)) return {false, "column " + std::to_string(m) + " differs from the recurrence"};
        ++m;
      }
    }
    return {true, "ok"};
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
}

Json checkpoint_to_json(const Checkpoint& c) {
  Json j;
  j["type"] = c.type;
  j["bound"] = c.bound;
  Json parts = Json::object();
  for (const auto& [value, seeds] : c.parts) {
    Json list = Json::array();
    for (const auto& s : seeds) list.push_back(slice_json(s));
    parts[std::to_string(value)] = list;
  }
  j["parts"] = parts;
  return j;
}

Checkpoint checkpoint_from_json(const Json& j) {
  Checkpoint c;
  c.type = j.at("type").get<std::string>();
  c.bound = j.at("bound").get<std::vector<std::int64_t>>();
  for (const auto& [key, list] : j.at("parts").items()) {
    auto& seeds = c.parts[std::stoll(key)];
    for (const auto& s : list) seeds.push_back(slice_from(s));
  }
  return c;
}

}  // namespace frieze
