#pragma once

#include "frieze/band.hpp"
#include "frieze/dynkin.hpp"
#include "frieze/search.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace frieze {

/// A simply-laced diagram folded by a cyclic group of diagram automorphisms.
struct Folding {
  OrientedDiagram source;
  DiagramAutomorphism generator;
  OrientedDiagram target;
  /// Target node of each source node (zero-based).
  std::vector<int> node_map;

  /// Source nodes over target node k.
  std::vector<int> fiber(int k) const;
};

/// Supported pairs: D_{n+1} arm swap -> B_n, A_{2n-1} mirror -> C_n,
/// D_4 rotation -> G_2, E_6 mirror -> F_4. The target orientation is the
/// image of the source one. Throws std::invalid_argument for other pairs or
/// when g does not stabilize the orientation.
Folding fold(const OrientedDiagram& d, const DiagramAutomorphism& g);

/// True iff every column of b is fixed by permuting rows with g.
bool is_invariant(const FriezeBand& b, const DiagramAutomorphism& g);

/// Band on the folded diagram carrying the common row of each fiber.
FriezeBand descend(const FriezeBand& b, const Folding& f);

/// Band on the source diagram repeating each folded row across its fiber.
FriezeBand lift(const FriezeBand& b, const Folding& f);

/// Invariant friezes of the source, found by a search that ties the seed
/// values inside each orbit.
EnumerationResult enumerate_invariant(const Folding& f, std::span<const std::int64_t> bound,
                                      SearchOptions options = {});

}  // namespace frieze
