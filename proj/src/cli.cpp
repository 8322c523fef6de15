#include "frieze/cli.hpp"

#include "frieze/cluster.hpp"
#include "frieze/counting.hpp"
#include "frieze/folding.hpp"
#include "frieze/io.hpp"
#include "frieze/polygon.hpp"
#include "frieze/search.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace frieze::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string type, family, source, automorphism_name, input = "-", output, checkpoint, seed;
  std::string orientation = "default", format = "table";
  int rank = 0, max_rank = 10, spokes = 0, columns = 0, max_order = 10;
  std::int64_t bound = 0;
  unsigned threads = 0;
  bool json = false, geometric = false, count_only = false;
};

DynkinType resolve_type(const std::string& text, int rank, const char* flag = "--type") {
  try {
    const bool has_digit = std::any_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); });
    if (!has_digit) {
      if (rank <= 0) throw std::invalid_argument("type '" + text + "' needs a rank (use e.g. D4 or --rank)");
      return DynkinType(parse_family(text), rank);
    }
    const DynkinType t = DynkinType::parse(text);
    if (rank > 0 && rank != t.rank()) throw std::invalid_argument("--rank disagrees with " + text);
    return t;
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

OrientedDiagram orient(const DynkinType& t, const std::string& which) {
  if (which == "default") return default_orientation(t);
  if (which == "symmetric") return symmetric_orientation(t);
  throw UsageError("--orientation: expected 'default' or 'symmetric', got '" + which + "'");
}

std::vector<std::int64_t> search_bound(const OrientedDiagram& d, std::int64_t uniform, std::string& source) {
  if (uniform > 0) {
    source = "uniform";
    return std::vector<std::int64_t>(d.rank(), uniform);
  }
  source = "unitary";
  return unitary_bounds(d);
}

Json count_json(const Integer& v) {
  if (fits_int64(v)) return to_int64(v);
  return to_string(v);
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void write_file_atomically(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + tmp);
    f << text;
  }
  std::filesystem::rename(tmp, path);
}

int cmd_count(const Options& o, std::ostream& out) {
  const DynkinType t = resolve_type(o.type, o.rank);
  const FriezeCount c = frieze_count(t);
  if (o.json) {
    Json j;
    j["type"] = t.name();
    j["count"] = count_json(c.count);
    j["status"] = to_string(c.status);
    out << j.dump(2) << "\n";
  } else {
    out << to_string(c.count) << " (" << to_string(c.status) << ")\n";
  }
  return 0;
}

int cmd_count_table(const Options& o, std::ostream& out) {
  Family f;
  try {
    f = parse_family(o.family);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--family: ") + e.what());
  }
  if (o.format != "csv" && o.format != "table" && o.format != "json")
    throw UsageError("--format: expected csv, table or json");
  Json rows = Json::array();
  std::ostringstream csv;
  csv << "family,rank,count,status\n";
  for (int n = min_rank(f); n <= o.max_rank; ++n) {
    if (!valid_rank(f, n)) continue;
    const FriezeCount c = frieze_count(DynkinType(f, n));
    csv << family_letter(f) << "," << n << "," << to_string(c.count) << "," << to_string(c.status) << "\n";
    rows.push_back({{"family", std::string(1, family_letter(f))}, {"rank", n}, {"count", count_json(c.count)},
                    {"status", to_string(c.status)}});
  }
  if (o.format == "csv") {
    out << csv.str();
  } else if (o.format == "json") {
    out << rows.dump(2) << "\n";
  } else {
    for (const auto& r : rows) {
      const std::string count = r["count"].is_string() ? r["count"].get<std::string>() : r["count"].dump();
      out << r["family"].get<std::string>() << std::setw(3) << r["rank"].get<int>() << "  " << std::setw(24) << count
          << "  " << r["status"].get<std::string>() << "\n";
    }
  }
  return 0;
}

int cmd_enumerate(const Options& o, std::ostream& out, std::ostream& err) {
  const DynkinType t = resolve_type(o.type, o.rank);
  const auto start = std::chrono::steady_clock::now();
  std::vector<Json> records;
  unsigned workers = 1;
  Json report;
  report["type"] = t.name();

  if (o.geometric) {
    if (t.family() != Family::D) throw UsageError("--geometric needs a type D_n");
    if (!o.checkpoint.empty()) throw UsageError("--checkpoint applies to band enumeration only");
    const int n = t.rank();
    for (const auto& w : enumerate_friezes_geometric(n)) records.push_back(geometric_to_json(n, w));
    report["representation"] = "geometric";
  } else {
    const OrientedDiagram d = orient(t, o.orientation);
    std::string bound_source;
    const auto bound = search_bound(d, o.bound, bound_source);
    SearchOptions options;
    options.threads = o.threads;
    Checkpoint cp{t.name(), bound, {}};
    if (!o.checkpoint.empty()) {
      if (std::filesystem::exists(o.checkpoint)) {
        std::ifstream f(o.checkpoint);
        Checkpoint loaded = checkpoint_from_json(Json::parse(f));
        if (loaded.type != cp.type || loaded.bound != cp.bound)
          throw UsageError("--checkpoint: " + o.checkpoint + " belongs to a different type or bound");
        cp = std::move(loaded);
        options.completed_parts = cp.parts;
        err << "resuming from " << cp.parts.size() << " finished parts\n";
      }
      options.on_part_done = [&](const SearchPart& part) {
        cp.parts[part.value] = part.seeds;
        write_file_atomically(o.checkpoint, checkpoint_to_json(cp).dump() + "\n");
      };
    }
    const EnumerationResult r = enumerate_friezes(d, bound, options);
    for (const auto& b : r.friezes) records.push_back(band_to_json(b));
    report["representation"] = "band";
    report["orientation"] = band_to_json(FriezeBand(d, {Slice(d.rank(), Integer(1))}))["orientation"];
    report["bound"] = bound;
    report["bound_source"] = bound_source;
    report["saturated"] = r.saturated;
    report["attains_bound"] = r.attains_bound;
    workers = r.threads;
    if (r.saturated) err << "warning: a frieze exceeds the bound, so some of its translates lie outside the box\n";
  }

  const FriezeCount expected = frieze_count(t);
  report["count"] = records.size();
  report["closed_form"] = count_json(expected.count);
  report["status"] = to_string(expected.status);
  report["matches"] = Integer(records.size()) == expected.count;
  report["run"] = {{"wall_time_s", seconds_since(start)}, {"workers", workers}};

  if (!o.output.empty()) {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + o.output);
    write_listing(f, records);
  }
  if (o.json) {
    report["friezes"] = records;
    out << report.dump(2) << "\n";
  } else {
    out << "type: " << t.name() << "\n";
    if (report.contains("bound"))
      out << "bound: " << report["bound_source"].get<std::string>() << " [" << join(report["bound"].get<std::vector<std::int64_t>>()) << "]\n";
    out << "friezes: " << records.size() << "\n";
    out << "closed form: " << to_string(expected.count) << " (" << to_string(expected.status) << ")"
        << (report["matches"].get<bool>() ? "" : " MISMATCH") << "\n";
    if (report.contains("saturated"))
      out << "saturated: " << (report["saturated"].get<bool>() ? "yes" : "no")
          << ", attains bound: " << (report["attains_bound"].get<bool>() ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  Listing listing;
  if (o.input == "-") {
    listing = read_listing(std::cin);
  } else {
    std::ifstream f(o.input);
    if (!f) throw UsageError("--input: cannot open " + o.input);
    listing = read_listing(f);
  }
  if (listing.records.empty()) {
    err << "no records to verify\n";
    return 1;
  }
  std::size_t failed = 0;
  for (std::size_t i = 0; i < listing.records.size(); ++i) {
    const VerifyResult r = verify_record(listing.records[i]);
    if (!r.ok) {
      ++failed;
      out << "record " << i + 1 << ": FAIL " << r.message << "\n";
    }
  }
  if (listing.has_manifest) out << "manifest: " << (listing.manifest_ok ? "ok" : "MISMATCH") << "\n";
  out << "verified " << listing.records.size() - failed << "/" << listing.records.size() << " records\n";
  return failed == 0 && (!listing.has_manifest || listing.manifest_ok) ? 0 : 1;
}

int cmd_render(const Options& o, std::ostream& out, std::ostream& err) {
  std::optional<FriezeBand> band;
  if (!o.seed.empty()) {
    const DynkinType t = resolve_type(o.type, o.rank);
    const OrientedDiagram d = orient(t, o.orientation);
    Slice seed;
    std::stringstream ss(o.seed);
    for (std::string item; std::getline(ss, item, ',');) {
      try {
        seed.emplace_back(item);
      } catch (const std::invalid_argument&) {
        throw UsageError("--seed: '" + item + "' is not an integer");
      }
    }
    if (static_cast<int>(seed.size()) != d.rank()) throw UsageError("--seed: expected " + std::to_string(d.rank()) + " values");
    auto v = validate_seed(d, seed);
    if (auto* bad = std::get_if<Invalid>(&v)) {
      err << "not a frieze: column " << bad->column << ": " << to_string(bad->reason) << "\n";
      return 1;
    }
    band = std::get<FriezeBand>(std::move(v));
  } else {
    std::ifstream file;
    if (o.input != "-") {
      file.open(o.input);
      if (!file) throw UsageError("--input: cannot open " + o.input);
    }
    const Listing listing = read_listing(o.input == "-" ? std::cin : file);
    if (listing.records.empty() || !listing.records.front().contains("seed"))
      throw UsageError("render needs --seed or a band record on --input");
    const Json& rec = listing.records.front();
    const OrientedDiagram d = diagram_from_json(rec);
    Slice seed;
    for (const auto& v : rec["seed"]) seed.emplace_back(v.is_string() ? v.get<std::string>() : v.dump());
    band = band_from_seed(d, seed);
  }
  out << render_band(*band, o.columns > 0 ? o.columns : band->period());
  return 0;
}

int cmd_triangulations(const Options& o, std::ostream& out) {
  const int n = o.rank;
  if (n < 3) throw UsageError("--rank: the punctured polygon needs n >= 3");
  if (o.spokes < 0 || o.spokes > n) throw UsageError("--spokes: expected 1..n");
  const auto all = enumerate_triangulations(n);
  std::vector<std::size_t> by_m(n + 1);
  for (const auto& t : all) ++by_m[plain_spoke_count(t)];
  bool ok = true;
  Json rows = Json::array();
  for (int m = 1; m <= n; ++m) {
    if (o.spokes && m != o.spokes) continue;
    const Integer formula = t_count(n, m);
    ok = ok && Integer(by_m[m]) == formula;
    rows.push_back({{"spokes", m}, {"count", by_m[m]}, {"formula", count_json(formula)}});
  }
  if (o.json) {
    Json j;
    j["rank"] = n;
    j["total"] = all.size();
    j["by_spokes"] = rows;
    out << j.dump(2) << "\n";
  } else {
    out << "punctured " << n << "-gon: " << all.size() << " tagged triangulations\n";
    for (const auto& r : rows)
      out << "  m=" << r["spokes"].get<int>() << ": " << r["count"].get<std::size_t>() << " (binomial "
          << r["formula"].dump() << ")\n";
  }
  return ok ? 0 : 1;
}

int cmd_clusters(const Options& o, std::ostream& out) {
  const DynkinType t = resolve_type(o.type, o.rank);
  const OrientedDiagram d = orient(t, o.orientation);
  const ClusterEnumeration clusters = enumerate_clusters(d);
  Json j;
  j["type"] = t.name();
  j["clusters"] = clusters.count();
  if (!o.count_only) j["unitary_friezes"] = unitary_friezes(d, clusters).size();
  if (o.json) {
    out << j.dump(2) << "\n";
  } else {
    out << t.name() << ": " << clusters.count() << " clusters\n";
    if (!o.count_only) out << "unitary friezes: " << j["unitary_friezes"].get<std::size_t>() << "\n";
  }
  return 0;
}

int cmd_fold_count(const Options& o, std::ostream& out) {
  const DynkinType t = resolve_type(o.source, o.rank, "--source");
  DiagramAutomorphism g;
  try {
    g = automorphism(t, o.automorphism_name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--auto: ") + e.what());
  }
  const Folding f = fold(symmetric_orientation(t), g);
  std::string bound_source;
  const auto bound = search_bound(f.source, o.bound, bound_source);
  SearchOptions options;
  options.threads = o.threads;
  const EnumerationResult r = enumerate_invariant(f, bound, options);
  const FriezeCount expected = frieze_count(f.target.type());
  const bool match = Integer(r.friezes.size()) == expected.count;
  if (o.json) {
    Json j;
    j["source"] = t.name();
    j["automorphism"] = g.name;
    j["target"] = f.target.type().name();
    j["bound"] = bound;
    j["bound_source"] = bound_source;
    j["invariant"] = r.friezes.size();
    j["closed_form"] = count_json(expected.count);
    j["status"] = to_string(expected.status);
    j["matches"] = match;
    out << j.dump(2) << "\n";
  } else {
    out << r.friezes.size() << " invariant friezes of " << t.name() << " under " << g.name << "\n";
    out << f.target.type().name() << " closed form: " << to_string(expected.count) << " ("
        << to_string(expected.status) << ") " << (match ? "match" : "MISMATCH") << "\n";
  }
  return match ? 0 : 1;
}

int cmd_series(const Options& o, std::ostream& out) {
  if (o.max_order < 1) throw UsageError("--max: expected a positive order");
  const unsigned N = static_cast<unsigned>(o.max_order);
  const SeriesTable table = series_t_table(N);
  bool ok = gf_identity_check(N);
  Json rows = Json::array();
  for (unsigned n = 1; n <= N; ++n)
    for (unsigned m = 1; m <= n; ++m) {
      const Integer formula = t_count(n, m);
      ok = ok && table[n][m] == formula;
      rows.push_back({{"n", n}, {"m", m}, {"coefficient", count_json(table[n][m])}, {"binomial", count_json(formula)}});
    }
  if (o.json) {
    Json j;
    j["order"] = N;
    j["identity"] = gf_identity_check(N);
    j["coefficients"] = rows;
    j["ok"] = ok;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : rows)
      out << "n=" << r["n"].get<unsigned>() << " m=" << r["m"].get<unsigned>() << ": " << r["coefficient"].dump()
          << (r["coefficient"] == r["binomial"] ? "" : " MISMATCH") << "\n";
    out << "generating-function identity: " << (gf_identity_check(N) ? "holds" : "FAILS") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  const DynkinType t = resolve_type(o.type, o.rank);
  const auto bound = unitary_bounds(orient(t, o.orientation));
  if (o.json) {
    Json j;
    j["type"] = t.name();
    j["bounds"] = bound;
    out << j.dump(2) << "\n";
  } else {
    out << t.name() << ": " << join(bound) << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration and counting of Dynkin-type friezes", "frieze"};
  app.require_subcommand(1);
  Options o;

  auto* count = app.add_subcommand("count", "Closed-form number of friezes of a type");
  count->add_option("--type", o.type, "Type such as D4, or a family letter with --rank")->required();
  count->add_option("--rank", o.rank, "Rank when --type is a family letter");
  count->add_flag("--json", o.json, "JSON output");

  auto* table = app.add_subcommand("count-table", "Closed-form counts for one family");
  table->add_option("--family", o.family, "Family letter")->required();
  table->add_option("--max-rank", o.max_rank, "Largest rank")->check(CLI::PositiveNumber);
  table->add_option("--format", o.format, "csv, table or json");

  auto* enumerate = app.add_subcommand("enumerate", "Brute-force enumeration of friezes");
  enumerate->add_option("--type", o.type, "Dynkin type")->required();
  enumerate->add_option("--rank", o.rank, "Rank when --type is a family letter");
  enumerate->add_option("--bound", o.bound, "Uniform per-node bound (default: unitary bounds)")->check(CLI::PositiveNumber);
  enumerate->add_option("--threads", o.threads, "Worker threads (default: all cores)");
  enumerate->add_option("--output", o.output, "Write an NDJSON listing with manifest");
  enumerate->add_option("--checkpoint", o.checkpoint, "Resume file for finished search parts");
  enumerate->add_option("--orientation", o.orientation, "default or symmetric");
  enumerate->add_flag("--geometric", o.geometric, "Type D only: enumerate arc weightings of the punctured polygon");
  enumerate->add_flag("--json", o.json, "JSON report including every frieze");

  auto* verify = app.add_subcommand("verify", "Check band or arc-weight records");
  verify->add_option("--input,input", o.input, "NDJSON listing or JSON file; - for stdin");

  auto* render = app.add_subcommand("render", "Print a band as a grid");
  render->add_option("--type", o.type, "Dynkin type");
  render->add_option("--rank", o.rank, "Rank when --type is a family letter");
  render->add_option("--seed", o.seed, "Comma-separated seed column");
  render->add_option("--columns", o.columns, "Columns to print (default: one period)");
  render->add_option("--orientation", o.orientation, "default or symmetric");
  render->add_option("--input", o.input, "Band record to render instead of --seed");

  auto* tri = app.add_subcommand("triangulations", "Count tagged triangulations of the punctured polygon");
  tri->add_option("--rank", o.rank, "Number of boundary vertices")->required();
  tri->add_option("--spokes", o.spokes, "Only triangulations with this many plain spokes");
  tri->add_flag("--json", o.json, "JSON output");

  auto* clusters = app.add_subcommand("clusters", "Count clusters by numeric mutation");
  clusters->add_option("--type", o.type, "Dynkin type")->required();
  clusters->add_option("--rank", o.rank, "Rank when --type is a family letter");
  clusters->add_option("--orientation", o.orientation, "default or symmetric");
  clusters->add_flag("--count-only", o.count_only, "Skip the unitary frieze evaluation");
  clusters->add_flag("--json", o.json, "JSON output");

  auto* fold_count = app.add_subcommand("fold-count", "Count invariant friezes under a diagram automorphism");
  fold_count->add_option("--source", o.source, "Simply-laced source type")->required();
  fold_count->add_option("--auto", o.automorphism_name, "arm-swap, mirror or rotation")->required();
  fold_count->add_option("--bound", o.bound, "Uniform per-node bound (default: unitary bounds)")->check(CLI::PositiveNumber);
  fold_count->add_option("--threads", o.threads, "Worker threads");
  fold_count->add_flag("--json", o.json, "JSON output");

  auto* series = app.add_subcommand("series", "Expand the triangulation generating function");
  series->add_option("--max", o.max_order, "Largest n");
  series->add_flag("--json", o.json, "JSON output");

  auto* bounds = app.add_subcommand("bounds", "Row maxima over unitary friezes");
  bounds->add_option("--type", o.type, "Dynkin type")->required();
  bounds->add_option("--rank", o.rank, "Rank when --type is a family letter");
  bounds->add_option("--orientation", o.orientation, "default or symmetric");
  bounds->add_flag("--json", o.json, "JSON output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*count) return cmd_count(o, out);
    if (*table) return cmd_count_table(o, out);
    if (*enumerate) return cmd_enumerate(o, out, err);
    if (*verify) return cmd_verify(o, out, err);
    if (*render) return cmd_render(o, out, err);
    if (*tri) return cmd_triangulations(o, out);
    if (*clusters) return cmd_clusters(o, out);
    if (*fold_count) return cmd_fold_count(o, out);
    if (*series) return cmd_series(o, out);
    if (*bounds) return cmd_bounds(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace frieze::cli
