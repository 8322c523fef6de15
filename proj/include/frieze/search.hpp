#pragma once

#include "frieze/band.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

namespace frieze {

/// Friezes found for one value of the first search variable. The seed box
/// is split into these disjoint parts; they are the unit of parallel work
/// and of checkpointing.
struct SearchPart {
  std::int64_t value;
  std::vector<Slice> seeds;
};

struct SearchOptions {
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Node groups whose seed values must coincide (used for invariant
  /// friezes under a diagram automorphism). Empty means unconstrained.
  std::vector<std::vector<int>> tied_nodes;
  /// Parts already finished by an earlier run, keyed by first-variable value.
  std::map<std::int64_t, std::vector<Slice>> completed_parts;
  /// Called (serialized) each time a part finishes.
  std::function<void(const SearchPart&)> on_part_done;
};

struct EnumerationResult {
  /// Sorted by seed.
  std::vector<FriezeBand> friezes;
  std::vector<std::int64_t> bound;
  /// Some found band has an entry above the bound at its row, i.e. the box
  /// does not contain every translate of that band.
  bool saturated = false;
  /// Some found band reaches the bound exactly at some row.
  bool attains_bound = false;
  /// Order in which seed nodes are assigned (zero-based).
  std::vector<int> order;
  /// Complete seeds that survived every partial check.
  std::uint64_t leaves = 0;
  unsigned threads = 1;
};

/// All friezes whose seed lies in the box 1 <= a(j,0) <= bound[j].
/// Friezes are distinguished by their seed column: distinct seeds give
/// distinct bands, so translates of a band are distinct friezes.
///
/// Seeds are built node by node; every value a(j,k) whose dependencies are
/// already assigned is computed in checked 64-bit arithmetic and the branch
/// is cut on the first inexact division. Overflowing checks are skipped, and
/// every surviving seed is confirmed with exact integers.
EnumerationResult enumerate_friezes(const OrientedDiagram& d, std::span<const std::int64_t> bound,
                                    const SearchOptions& options = {});

/// Assignment order chosen by enumerate_friezes for this box.
std::vector<int> search_order(const OrientedDiagram& d, std::span<const std::int64_t> bound);

}  // namespace frieze
