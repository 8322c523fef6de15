#pragma once

#include <Eigen/Core>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace frieze {

enum class Family { A, B, C, D, E, F, G };

/// A Dynkin type X_n. Construction validates the rank against the family.
class DynkinType {
 public:
  DynkinType(Family family, int rank);

  /// Parses strings such as "D5", "e8", "G2".
  static DynkinType parse(std::string_view text);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  bool simply_laced() const;
  std::string name() const;

  friend bool operator==(const DynkinType&, const DynkinType&) = default;

 private:
  Family family_;
  int rank_;
};

char family_letter(Family f);
Family parse_family(std::string_view text);
/// Smallest valid rank of the family.
int min_rank(Family f);
bool valid_rank(Family f, int rank);

using CartanMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

/// Cartan matrix with zero-based nodes. Entry (i, j) is the exponent
/// |C(i,j)| that a(i, .) carries in the exchange relation of node j.
///
/// Node conventions (one-based in docs and serialized output):
///  - A_n, B_n, C_n, F_4, G_2: chain 1 - 2 - ... - n;
///  - D_n: short arms 1 and 2 attached to 3, then chain 3 - 4 - ... - n;
///  - E_n: chain 1 - 3 - 4 - ... - n with 2 attached to 4.
/// The short root sits at node n of B_n, nodes 1..n-1 of C_n, nodes 3,4
/// of F_4 and node 2 of G_2, so that C(short, long) = -2 or -3.
CartanMatrix cartan_matrix(const DynkinType& t);

/// Positive integers d with d_i C(i,j) = d_j C(j,i).
std::vector<int> symmetrizer(const CartanMatrix& c);

int coxeter_number(const DynkinType& t);

/// A Dynkin diagram with a fixed acyclic orientation. Arrows are stored as
/// zero-based (from, to) pairs.
class OrientedDiagram {
 public:
  using Arrow = std::pair<int, int>;

  OrientedDiagram(DynkinType type, CartanMatrix cartan, std::vector<Arrow> arrows);
  OrientedDiagram(DynkinType type, std::vector<Arrow> arrows);

  const DynkinType& type() const { return type_; }
  int rank() const { return static_cast<int>(cartan_.rows()); }
  const CartanMatrix& cartan() const { return cartan_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  /// Nodes i with j -> i.
  const std::vector<int>& successors(int j) const { return out_[j]; }
  /// Nodes i with i -> j.
  const std::vector<int>& predecessors(int j) const { return in_[j]; }
  bool has_arrow(int from, int to) const;
  /// Exponent |C(i,j)|.
  int weight(int i, int j) const { return cartan_(i, j) < 0 ? -cartan_(i, j) : cartan_(i, j); }

  /// Every i with i -> j precedes j.
  const std::vector<int>& topological_order() const { return topo_; }

 private:
  DynkinType type_;
  CartanMatrix cartan_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::vector<int> topo_;
};

/// Linear chains oriented 1 -> 2 -> ...; D and E arms point toward the
/// branch node.
OrientedDiagram default_orientation(const DynkinType& t);

/// Orientation stable under every automorphism returned by
/// automorphisms(t). Differs from default_orientation only for A_n, where
/// arrows point toward the middle node.
OrientedDiagram symmetric_orientation(const DynkinType& t);

/// A node permutation (zero-based images) with a short name used on the
/// command line: "arm-swap", "mirror" or "rotation".
struct DiagramAutomorphism {
  std::string name;
  std::vector<int> images;

  int operator()(int node) const { return images[node]; }
  int order() const;
  /// Orbits sorted by their smallest node.
  std::vector<std::vector<int>> orbits() const;
};

/// Folding generators: arm swap for D_n, the mirror of A_{2k-1}, the
/// order-3 rotation of D_4 and the mirror of E_6.
std::vector<DiagramAutomorphism> automorphisms(const DynkinType& t);

/// Looks up an automorphism of t by name; throws if t has none so named.
DiagramAutomorphism automorphism(const DynkinType& t, std::string_view name);

/// True iff g maps every arrow to an arrow with the same Cartan entries.
bool stabilizes(const DiagramAutomorphism& g, const OrientedDiagram& d);

}  // namespace frieze
