#include "frieze/dynkin.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace frieze {

namespace {

void link(CartanMatrix& c, int i, int j, int cij = -1, int cji = -1) {
  c(i - 1, j - 1) = cij;
  c(j - 1, i - 1) = cji;
}

std::vector<OrientedDiagram::Arrow> chain_arrows(int n) {
  std::vector<OrientedDiagram::Arrow> arrows;
  for (int i = 0; i + 1 < n; ++i) arrows.emplace_back(i, i + 1);
  return arrows;
}

}  // namespace

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

Family parse_family(std::string_view text) {
  if (text.size() != 1) throw std::invalid_argument("unknown Dynkin family '" + std::string(text) + "'");
  const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (c < 'A' || c > 'G') throw std::invalid_argument("unknown Dynkin family '" + std::string(text) + "'");
  return static_cast<Family>(c - 'A');
}

int min_rank(Family f) {
  switch (f) {
    case Family::A: return 1;
    case Family::B:
    case Family::C: return 2;
    case Family::D: return 3;
    case Family::E: return 6;
    case Family::F: return 4;
    case Family::G: return 2;
  }
  return 1;
}

bool valid_rank(Family f, int rank) {
  switch (f) {
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
    default: return rank >= min_rank(f);
  }
}

DynkinType::DynkinType(Family family, int rank) : family_(family), rank_(rank) {
  if (!valid_rank(family, rank)) {
    throw std::invalid_argument(std::string("invalid rank ") + std::to_string(rank) + " for family " +
                                family_letter(family));
  }
}

DynkinType DynkinType::parse(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("cannot parse Dynkin type '" + std::string(text) + "'");
  const Family f = parse_family(text.substr(0, 1));
  int rank = 0;
  const auto digits = text.substr(1);
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || end != digits.data() + digits.size()) {
    throw std::invalid_argument("cannot parse Dynkin type '" + std::string(text) + "'");
  }
  return DynkinType(f, rank);
}

bool DynkinType::simply_laced() const {
  return family_ == Family::A || family_ == Family::D || family_ == Family::E;
}

std::string DynkinType::name() const { return family_letter(family_) + std::to_string(rank_); }

CartanMatrix cartan_matrix(const DynkinType& t) {
  const int n = t.rank();
  CartanMatrix c = 2 * CartanMatrix::Identity(n, n);
  switch (t.family()) {
    case Family::A:
      for (int i = 1; i < n; ++i) link(c, i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i + 1 < n; ++i) link(c, i, i + 1);
      link(c, n - 1, n, -1, -2);
      break;
    case Family::C:
      for (int i = 1; i + 1 < n; ++i) link(c, i, i + 1);
      link(c, n - 1, n, -2, -1);
      break;
    case Family::D:
      link(c, 1, 3);
      link(c, 2, 3);
      for (int i = 3; i < n; ++i) link(c, i, i + 1);
      break;
    case Family::E:
      link(c, 1, 3);
      link(c, 2, 4);
      for (int i = 3; i < n; ++i) link(c, i, i + 1);
      break;
    case Family::F:
      link(c, 1, 2);
      link(c, 2, 3, -1, -2);
      link(c, 3, 4);
      break;
    case Family::G:
      link(c, 1, 2, -1, -3);
      break;
  }
  return c;
}

std::vector<int> symmetrizer(const CartanMatrix& c) {
  const int n = static_cast<int>(c.rows());
  // Propagate ratios d_j = d_i C(i,j)/C(j,i) along the (connected) diagram
  // as fractions, then clear denominators.
  std::vector<long> num(n, 0), den(n, 1);
  if (n == 0) return {};
  num[0] = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      if (i == j || c(i, j) == 0 || num[j] != 0) continue;
      num[j] = num[i] * c(i, j);
      den[j] = den[i] * c(j, i);
      const long g = std::gcd(num[j], den[j]);
      num[j] /= g;
      den[j] /= g;
      if (den[j] < 0) {
        num[j] = -num[j];
        den[j] = -den[j];
      }
      stack.push_back(j);
    }
  }
  long l = 1;
  for (int i = 0; i < n; ++i) {
    if (num[i] <= 0) throw std::invalid_argument("Cartan matrix is not connected and symmetrizable");
    l = std::lcm(l, den[i]);
  }
  std::vector<int> d(n);
  for (int i = 0; i < n; ++i) d[i] = static_cast<int>(num[i] * (l / den[i]));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d[i] * c(i, j) != d[j] * c(j, i)) throw std::invalid_argument("Cartan matrix is not symmetrizable");
  return d;
}

int coxeter_number(const DynkinType& t) {
  const int n = t.rank();
  switch (t.family()) {
    case Family::A: return n + 1;
    case Family::B:
    case Family::C: return 2 * n;
    case Family::D: return 2 * n - 2;
    case Family::E: return n == 6 ? 12 : (n == 7 ? 18 : 30);
    case Family::F: return 12;
    case Family::G: return 6;
  }
  return 0;
}

OrientedDiagram::OrientedDiagram(DynkinType type, std::vector<Arrow> arrows)
    : OrientedDiagram(type, cartan_matrix(type), std::move(arrows)) {}

OrientedDiagram::OrientedDiagram(DynkinType type, CartanMatrix cartan, std::vector<Arrow> arrows)
    : type_(type), cartan_(std::move(cartan)), arrows_(std::move(arrows)) {
  const int n = static_cast<int>(cartan_.rows());
  if (n != type_.rank() || cartan_.cols() != n) throw std::invalid_argument("Cartan matrix has the wrong size");
  out_.assign(n, {});
  in_.assign(n, {});
  Eigen::MatrixXi seen = Eigen::MatrixXi::Zero(n, n);
  for (auto [from, to] : arrows_) {
    if (from < 0 || from >= n || to < 0 || to >= n || from == to)
      throw std::invalid_argument("arrow endpoint out of range");
    if (cartan_(from, to) == 0) throw std::invalid_argument("arrow between non-adjacent nodes");
    if (seen(from, to) || seen(to, from)) throw std::invalid_argument("edge oriented twice");
    seen(from, to) = 1;
    out_[from].push_back(to);
    in_[to].push_back(from);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (cartan_(i, j) != 0 && !seen(i, j) && !seen(j, i))
        throw std::invalid_argument("edge left unoriented");

  // Kahn's algorithm, smallest available node first.
  std::vector<int> indegree(n);
  for (int j = 0; j < n; ++j) indegree[j] = static_cast<int>(in_[j].size());
  std::vector<int> ready;
  for (int j = 0; j < n; ++j)
    if (indegree[j] == 0) ready.push_back(j);
  while (!ready.empty()) {
    auto it = std::min_element(ready.begin(), ready.end());
    const int j = *it;
    ready.erase(it);
    topo_.push_back(j);
    for (int i : out_[j])
      if (--indegree[i] == 0) ready.push_back(i);
  }
  if (static_cast<int>(topo_.size()) != n) throw std::invalid_argument("orientation has a cycle");
}

bool OrientedDiagram::has_arrow(int from, int to) const {
  return std::find(out_[from].begin(), out_[from].end(), to) != out_[from].end();
}

OrientedDiagram default_orientation(const DynkinType& t) {
  const int n = t.rank();
  std::vector<OrientedDiagram::Arrow> arrows;
  switch (t.family()) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::F:
    case Family::G:
      arrows = chain_arrows(n);
      break;
    case Family::D:
      arrows = {{0, 2}, {1, 2}};
      for (int i = 3; i < n; ++i) arrows.emplace_back(i, i - 1);
      break;
    case Family::E:
      arrows = {{0, 2}, {2, 3}, {1, 3}};
      for (int i = 4; i < n; ++i) arrows.emplace_back(i, i - 1);
      break;
  }
  return OrientedDiagram(t, std::move(arrows));
}

OrientedDiagram symmetric_orientation(const DynkinType& t) {
  if (t.family() != Family::A) return default_orientation(t);
  const int n = t.rank();
  const int middle = n / 2;  // zero-based middle node for odd n
  std::vector<OrientedDiagram::Arrow> arrows;
  for (int i = 0; i + 1 < n; ++i) {
    if (i < middle) arrows.emplace_back(i, i + 1);
    else arrows.emplace_back(i + 1, i);
  }
  return OrientedDiagram(t, std::move(arrows));
}

int DiagramAutomorphism::order() const {
  std::vector<int> current(images.size());
  std::iota(current.begin(), current.end(), 0);
  for (int k = 1;; ++k) {
    for (int& v : current) v = images[v];
    bool identity = true;
    for (std::size_t i = 0; i < current.size(); ++i) identity = identity && current[i] == static_cast<int>(i);
    if (identity) return k;
  }
}

std::vector<std::vector<int>> DiagramAutomorphism::orbits() const {
  const int n = static_cast<int>(images.size());
  std::vector<bool> done(n, false);
  std::vector<std::vector<int>> result;
  for (int i = 0; i < n; ++i) {
    if (done[i]) continue;
    std::vector<int> orbit;
    for (int j = i; !done[j]; j = images[j]) {
      done[j] = true;
      orbit.push_back(j);
    }
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

std::vector<DiagramAutomorphism> automorphisms(const DynkinType& t) {
  const int n = t.rank();
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::vector<DiagramAutomorphism> result;
  switch (t.family()) {
    case Family::A:
      if (n >= 3 && n % 2 == 1) {
        std::vector<int> mirror(n);
        for (int i = 0; i < n; ++i) mirror[i] = n - 1 - i;
        result.push_back({"mirror", mirror});
      }
      break;
    case Family::D: {
      auto swap = id;
      std::swap(swap[0], swap[1]);
      result.push_back({"arm-swap", swap});
      if (n == 4) result.push_back({"rotation", {1, 3, 2, 0}});
      break;
    }
    case Family::E:
      if (n == 6) result.push_back({"mirror", {5, 1, 4, 3, 2, 0}});
      break;
    default:
      break;
  }
  return result;
}

DiagramAutomorphism automorphism(const DynkinType& t, std::string_view name) {
  for (auto& g : automorphisms(t))
    if (g.name == name) return g;
  throw std::invalid_argument("type " + t.name() + " has no automorphism named '" + std::string(name) + "'");
}

bool stabilizes(const DiagramAutomorphism& g, const OrientedDiagram& d) {
  const int n = d.rank();
  if (static_cast<int>(g.images.size()) != n) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d.cartan()(g(i), g(j)) != d.cartan()(i, j)) return false;
  for (auto [from, to] : d.arrows())
    if (!d.has_arrow(g(from), g(to))) return false;
  return true;
}

}  // namespace frieze
