#include "frieze/folding.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace frieze {

namespace {

struct Target {
  DynkinType type;
  std::vector<int> node_map;
};

Target target_of(const DynkinType& t, const std::string& name) {
  const int n = t.rank();
  std::vector<int> map(n);
  if (t.family() == Family::D && name == "arm-swap") {
    // B_{n-1}: the short arms become the last (short) node, the chain runs backwards.
    const int r = n - 1;
    map[0] = map[1] = r - 1;
    for (int j = 2; j < n; ++j) map[j] = n - 1 - j;
    return {DynkinType(Family::B, r), map};
  }
  if (t.family() == Family::A && name == "mirror" && n % 2 == 1) {
    const int r = (n + 1) / 2;
    for (int j = 0; j < n; ++j) map[j] = std::min(j, n - 1 - j);
    return {DynkinType(Family::C, r), map};
  }
  if (t.family() == Family::D && n == 4 && name == "rotation") {
    map = {1, 1, 0, 1};
    return {DynkinType(Family::G, 2), map};
  }
  if (t.family() == Family::E && n == 6 && name == "mirror") {
    map = {3, 0, 2, 1, 2, 3};
    return {DynkinType(Family::F, 4), map};
  }
  throw std::invalid_argument("no folding of " + t.name() + " by '" + name + "'");
}

}  // namespace

std::vector<int> Folding::fiber(int k) const {
  std::vector<int> nodes;
  for (int j = 0; j < static_cast<int>(node_map.size()); ++j)
    if (node_map[j] == k) nodes.push_back(j);
  return nodes;
}

Folding fold(const OrientedDiagram& d, const DiagramAutomorphism& g) {
  if (!stabilizes(g, d))
    throw std::invalid_argument("automorphism '" + g.name + "' does not stabilize the orientation of " + d.type().name());
  auto [type, map] = target_of(d.type(), g.name);
  const int n = d.rank();
  for (int j = 0; j < n; ++j)
    if (map[g(j)] != map[j]) throw std::logic_error("node map is not constant on orbits");

  const CartanMatrix expected = cartan_matrix(type);
  const int r = type.rank();
  CartanMatrix folded = CartanMatrix::Zero(r, r);
  std::vector<int> rep(r, -1);
  for (int j = 0; j < n; ++j)
    if (rep[map[j]] < 0) rep[map[j]] = j;
  for (int i = 0; i < n; ++i)
    for (int J = 0; J < r; ++J) folded(map[i], J) += d.cartan()(i, rep[J]);
  if (folded != expected) throw std::logic_error("folded Cartan matrix disagrees with " + type.name());

  std::set<OrientedDiagram::Arrow> arrows;
  for (auto [from, to] : d.arrows()) arrows.emplace(map[from], map[to]);
  OrientedDiagram target(type, std::vector<OrientedDiagram::Arrow>(arrows.begin(), arrows.end()));
  return {d, g, std::move(target), std::move(map)};
}

bool is_invariant(const FriezeBand& b, const DiagramAutomorphism& g) {
  for (const auto& col : b.columns())
    for (int j = 0; j < static_cast<int>(col.size()); ++j)
      if (col[g(j)] != col[j]) return false;
  return true;
}

FriezeBand descend(const FriezeBand& b, const Folding& f) {
  if (!is_invariant(b, f.generator)) throw std::invalid_argument("band is not invariant under '" + f.generator.name + "'");
  const int r = f.target.rank();
  std::vector<Slice> columns;
  for (const auto& col : b.columns()) {
    Slice s(r);
    for (int j = 0; j < f.source.rank(); ++j) s[f.node_map[j]] = col[j];
    columns.push_back(std::move(s));
  }
  FriezeBand folded = band_from_seed(f.target, columns.front());
  if (folded.columns() != columns) throw std::logic_error("descended band does not follow the folded recurrence");
  return folded;
}

FriezeBand lift(const FriezeBand& b, const Folding& f) {
  Slice seed(f.source.rank());
  for (int j = 0; j < f.source.rank(); ++j) seed[j] = b.seed()[f.node_map[j]];
  auto v = validate_seed(f.source, seed);
  if (!std::holds_alternative<FriezeBand>(v)) throw std::logic_error("lifted seed is not a frieze of " + f.source.type().name());
  FriezeBand lifted = std::get<FriezeBand>(std::move(v));
  if (!is_invariant(lifted, f.generator)) throw std::logic_error("lifted band is not invariant");
  return lifted;
}

EnumerationResult enumerate_invariant(const Folding& f, std::span<const std::int64_t> bound, SearchOptions options) {
  options.tied_nodes.clear();
  for (auto& orbit : f.generator.orbits())
    if (orbit.size() > 1) options.tied_nodes.push_back(std::move(orbit));
  EnumerationResult r = enumerate_friezes(f.source, bound, options);
  for (const auto& b : r.friezes)
    if (!is_invariant(b, f.generator)) throw std::logic_error("tied search returned a non-invariant band");
  return r;
}

}  // namespace frieze
