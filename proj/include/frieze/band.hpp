#pragma once

#include "frieze/dynkin.hpp"
#include "frieze/integer.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace frieze {

/// One column a(., m) of a band, indexed by zero-based node.
using Slice = std::vector<Integer>;

Slice make_slice(std::initializer_list<long> values);

enum class Failure { NonIntegral, NonPositive, NoRecurrence };

std::string to_string(Failure f);

/// Column m+1 from column m. Nodes are solved in topological order so that
/// a(i, m+1) is known for every arrow i -> j before a(j, m+1) is needed.
/// Returns nullopt when a division is inexact.
std::optional<Slice> next_slice(const OrientedDiagram& d, const Slice& s);

/// Column m-1 from column m (the same relation solved for a(j, m-1)).
std::optional<Slice> previous_slice(const OrientedDiagram& d, const Slice& s);

/// A periodic band of positive integers satisfying the slice recurrence.
/// columns()[0] is the seed; the band repeats with period columns().size().
class FriezeBand {
 public:
  FriezeBand(OrientedDiagram diagram, std::vector<Slice> columns);

  const OrientedDiagram& diagram() const { return diagram_; }
  const Slice& seed() const { return columns_.front(); }
  const std::vector<Slice>& columns() const { return columns_; }
  int period() const { return static_cast<int>(columns_.size()); }

  /// a(node, column) for any integer column.
  const Integer& at(int node, long column) const;

  /// The band re-seeded at column k (a translate).
  FriezeBand rotated(long k) const;

  /// Largest entry in each row.
  std::vector<Integer> row_maxima() const;

  /// True iff some column is all ones.
  bool has_unit_slice() const;

  friend bool operator==(const FriezeBand& a, const FriezeBand& b) { return a.columns_ == b.columns_; }

 private:
  OrientedDiagram diagram_;
  std::vector<Slice> columns_;
};

struct Invalid {
  int column;
  Failure reason;
};

using Validation = std::variant<FriezeBand, Invalid>;

/// Propagates the seed for at most h+2 columns. Succeeds with the least
/// period p such that column p equals the seed. NoRecurrence (every column
/// integral but the seed never returns) is reported on std::clog as an
/// anomaly.
Validation validate_seed(const OrientedDiagram& d, const Slice& seed);

/// Convenience wrapper that throws std::runtime_error on Invalid.
FriezeBand band_from_seed(const OrientedDiagram& d, const Slice& seed);

int period(const FriezeBand& b);

/// Exact check of every relation a(j,m) a(j,m+1) = 1 + ... over one period,
/// including the wrap-around to the seed. Also requires positivity.
bool satisfies_recurrence(const FriezeBand& b);

/// Fixed-width grid, one row per node, columns repeated cyclically.
std::string render_band(const FriezeBand& b, int columns);

/// Lexicographic comparison of seeds by numeric value.
bool seed_less(const Slice& a, const Slice& b);

}  // namespace frieze
