#pragma once

#include "frieze/integer.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace frieze {

// Tagged arcs of the once-punctured n-gon. Vertices are numbered 1..n
// clockwise. A boundary arc B(s,t) joins s to t with the clockwise stretch
// s -> t (which holds at least one vertex) on its puncture-free side.

enum class Tag : std::uint8_t { Plain, Notched };

struct TaggedArc {
  enum class Kind : std::uint8_t { Spoke, Boundary };

  Kind kind;
  Tag tag;  // Plain for boundary arcs
  int s;    // spoke vertex, or boundary start
  int t;    // boundary end; 0 for spokes

  static TaggedArc spoke(int vertex, Tag tag = Tag::Plain) { return {Kind::Spoke, tag, vertex, 0}; }
  static TaggedArc boundary(int s, int t) { return {Kind::Boundary, Tag::Plain, s, t}; }

  bool is_spoke() const { return kind == Kind::Spoke; }
  bool is_plain_spoke() const { return is_spoke() && tag == Tag::Plain; }
  bool is_notched_spoke() const { return is_spoke() && tag == Tag::Notched; }

  friend auto operator<=>(const TaggedArc&, const TaggedArc&) = default;
};

/// "S+3" (plain spoke at 3), "S-3" (notched), "B 1 4".
std::string to_string(const TaggedArc& a);
TaggedArc parse_arc(std::string_view text);

/// Throws std::invalid_argument unless a is an arc of the punctured n-gon.
void validate_arc(const TaggedArc& a, int n);

/// Position of a in all_arcs(n).
int arc_index(const TaggedArc& a, int n);

/// Plain spokes 1..n, notched spokes 1..n, then B(s,t) by s and length.
/// Exactly n^2 arcs.
std::vector<TaggedArc> all_arcs(int n);

/// True iff a and b cannot lie in a common tagged triangulation.
bool incompatible(const TaggedArc& a, const TaggedArc& b, int n);

/// The exchange relation a b = prod(first) + prod(second) for an
/// exchangeable pair. Boundary edges (weight 1) are omitted from the
/// monomials; a loop around the puncture appears as its two spokes.
/// nullopt when the pair is compatible or crosses more than once.
struct ExchangeRelation {
  std::vector<TaggedArc> first;
  std::vector<TaggedArc> second;
};
std::optional<ExchangeRelation> exchange_relation(const TaggedArc& a, const TaggedArc& b, int n);

/// Sorted set of arcs.
using Triangulation = std::vector<TaggedArc>;

bool is_triangulation(const Triangulation& t, int n);
int plain_spoke_count(const Triangulation& t);

std::vector<Triangulation> enumerate_triangulations(int n);

/// Triangulations with exactly m plain spokes (for m = 1 these carry the
/// notched companion at the same vertex).
std::vector<Triangulation> triangulations_with_spokes(int n, int m);

/// Total map from arcs to positive integers; entries may be unset (zero)
/// while a map is being built.
class ArcWeightMap {
 public:
  explicit ArcWeightMap(int n);

  int rank() const { return n_; }
  bool has(const TaggedArc& a) const { return weights_[arc_index(a, n_)] != 0; }
  const Integer& operator[](const TaggedArc& a) const { return weights_[arc_index(a, n_)]; }
  void set(const TaggedArc& a, Integer w);
  bool total() const;
  const std::vector<Integer>& weights() const { return weights_; }

  /// Product of the weights in a monomial.
  Integer product(const std::vector<TaggedArc>& arcs) const;

  friend bool operator==(const ArcWeightMap&, const ArcWeightMap&) = default;
  friend bool operator<(const ArcWeightMap& a, const ArcWeightMap& b) { return a.weights_ < b.weights_; }

 private:
  int n_;
  std::vector<Integer> weights_;
};

/// The unique arc b != a such that (T \ a) + b is a triangulation.
TaggedArc flip_partner(const Triangulation& t, const TaggedArc& a, int n);

struct FlipResult {
  Triangulation triangulation;
  TaggedArc arc;
  Integer weight;
};

/// Flips a in T and computes the weight of the new arc from the exchange
/// relation. Throws std::domain_error on an inexact division.
FlipResult flip(const Triangulation& t, const TaggedArc& a, const ArcWeightMap& w);

/// A triangulation with m plain spokes and a divisor x of m. Boundary arcs
/// of the triangulation get weight 1 and its plain spokes weight x.
struct FriezeDescriptor {
  Triangulation triangulation;
  int spokes = 0;
  Integer divisor;

  friend bool operator==(const FriezeDescriptor&, const FriezeDescriptor&) = default;
};

std::vector<FriezeDescriptor> all_descriptors(int n);

/// Seeds the descriptor's triangulation and closes the weights over all
/// n^2 arcs by breadth-first flips. A nonzero `shuffle_seed` randomizes the
/// order in which arcs are flipped. Conflicting weights are a logic_error.
ArcWeightMap weights_from_descriptor(int n, const FriezeDescriptor& d, std::uint64_t shuffle_seed = 0);

/// Recovers the descriptor: weight-1 arcs (dropping notched weight-1 spokes
/// whose plain partner is heavier), then every plain spoke that fits.
FriezeDescriptor descriptor_from_weights(int n, const ArcWeightMap& w);

struct WeightViolation {
  TaggedArc a;
  TaggedArc b;
  Integer lhs;
  Integer rhs;
};

struct WeightCheck {
  bool ok = true;
  std::vector<WeightViolation> violations;
};

/// Every exchange relation over all exchangeable pairs. The map must be
/// total.
WeightCheck check_weights(int n, const ArcWeightMap& w);

/// Structural properties of a frieze given as arc weights: weight-1 arcs
/// never cross, a weight-1 spoke forces a weight-1 triangulation, the
/// descriptor's plain spokes share a weight x and its notched spokes a
/// weight y with x y = m, and the descriptor reproduces the map.
std::vector<std::string> structure_violations(int n, const ArcWeightMap& w);

std::vector<ArcWeightMap> enumerate_friezes_geometric(int n);

}  // namespace frieze
