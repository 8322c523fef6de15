#pragma once

#include "frieze/band.hpp"
#include "frieze/dynkin.hpp"
#include "frieze/integer.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace frieze {

using ExchangeMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

/// Exchange matrix of the seed sitting on column 0 of the band:
/// B(i,k) = |C(i,k)| if k -> i, -|C(i,k)| if i -> k, 0 otherwise.
ExchangeMatrix exchange_matrix(const OrientedDiagram& d);

/// True iff d_i B(i,j) = -d_j B(j,i) for all i, j.
bool skew_symmetrizable(const ExchangeMatrix& b, const std::vector<int>& d);

/// Exchange matrix plus exact positive values of one labeled cluster.
struct NumericSeed {
  ExchangeMatrix exchange;
  std::vector<Rational> values;

  friend bool operator==(const NumericSeed& a, const NumericSeed& b) {
    return a.exchange == b.exchange && a.values == b.values;
  }
};

NumericSeed initial_seed(const OrientedDiagram& d, std::vector<Rational> values);

/// Mutation in direction k (zero-based). Involutive.
NumericSeed mutate(const NumericSeed& s, int k);

struct ClusterRecord {
  NumericSeed seed;
  /// Index of the record this one was reached from; -1 for the root.
  int parent = -1;
  /// Mutation direction from the parent.
  int direction = -1;
};

struct ClusterOptions {
  /// Resource guard: finite types stay far below this.
  std::size_t max_clusters = 200000;
};

class ClusterEnumeration {
 public:
  explicit ClusterEnumeration(std::vector<ClusterRecord> records) : records_(std::move(records)) {}

  std::size_t count() const { return records_.size(); }
  const std::vector<ClusterRecord>& records() const { return records_; }
  /// Mutation directions leading from the root to record i.
  std::vector<int> path(std::size_t i) const;

 private:
  std::vector<ClusterRecord> records_;
};

/// Breadth-first closure of the initial seed under mutation, with distinct
/// primes as initial values. Clusters are identified by their value sets;
/// if two seeds share a value set but not (up to relabeling) an exchange
/// matrix the run restarts with other primes.
ClusterEnumeration enumerate_clusters(const OrientedDiagram& d, const ClusterOptions& options = {});

/// Friezes obtained by sending one cluster to all ones, sorted by seed.
std::vector<FriezeBand> unitary_friezes(const OrientedDiagram& d);
std::vector<FriezeBand> unitary_friezes(const OrientedDiagram& d, const ClusterEnumeration& clusters);

/// Largest value of each row over the given bands.
std::vector<std::int64_t> row_bounds(const std::vector<FriezeBand>& bands);

/// Per-node search bound: row maxima over all unitary friezes.
std::vector<std::int64_t> unitary_bounds(const OrientedDiagram& d);

}  // namespace frieze
