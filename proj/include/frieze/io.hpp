#pragma once

#include "frieze/band.hpp"
#include "frieze/polygon.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace frieze {

using Json = nlohmann::ordered_json;

/// {"type","orientation" (one-based pairs),"seed","period","columns"}.
Json band_to_json(const FriezeBand& b);
/// The diagram a band record refers to.
OrientedDiagram diagram_from_json(const Json& record);

/// {"rank","descriptor":{"spokes","boundary","divisor"},"weights":[{"arc","w"}]}.
Json geometric_to_json(int n, const ArcWeightMap& w);
ArcWeightMap weights_from_json(const Json& record);

/// FNV-1a, 64 bit.
std::uint64_t fnv1a64(std::string_view data, std::uint64_t hash = 0xcbf29ce484222325ULL);

/// One compact JSON record per line, then {"manifest":{"count","checksum"}}
/// where the checksum covers the record lines including their newlines.
void write_listing(std::ostream& out, const std::vector<Json>& records);

struct Listing {
  std::vector<Json> records;
  bool has_manifest = false;
  bool manifest_ok = false;
};

/// Reads NDJSON records. A single (possibly multi-line) JSON document is
/// also accepted.
Listing read_listing(std::istream& in);

struct VerifyResult {
  bool ok = true;
  std::string message;
};

/// Checks a band record (seed validates, listed columns and period agree)
/// or a geometric record (every exchange relation holds).
VerifyResult verify_record(const Json& record);

/// Checkpoint of a partitioned search: finished parts keyed by the value of
/// the first search variable, plus the inputs they belong to.
struct Checkpoint {
  std::string type;
  std::vector<std::int64_t> bound;
  std::map<std::int64_t, std::vector<Slice>> parts;
};

Json checkpoint_to_json(const Checkpoint& c);
Checkpoint checkpoint_from_json(const Json& j);

}  // namespace frieze
