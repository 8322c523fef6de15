#include "frieze/cluster.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

namespace frieze {

namespace {

std::vector<long> primes_from(std::size_t skip, std::size_t count) {
  std::vector<long> result;
  std::size_t seen = 0;
  for (long p = 101; result.size() < count; ++p) {
    bool prime = true;
    for (long q = 2; q * q <= p && prime; ++q) prime = p % q != 0;
    if (!prime) continue;
    if (seen++ >= skip) result.push_back(p);
  }
  return result;
}

std::vector<int> sorting_permutation(const std::vector<Rational>& values) {
  std::vector<int> perm(values.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) { return values[a] < values[b]; });
  return perm;
}

ExchangeMatrix relabeled(const ExchangeMatrix& b, const std::vector<int>& perm) {
  const int n = static_cast<int>(b.rows());
  ExchangeMatrix r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = b(perm[i], perm[j]);
  return r;
}

struct Collision {};

std::vector<ClusterRecord> closure(const OrientedDiagram& d, std::size_t attempt, const ClusterOptions& options) {
  const int n = d.rank();
  std::vector<Rational> markers;
  for (long p : primes_from(attempt * n, n)) markers.emplace_back(p);

  std::vector<ClusterRecord> records;
  std::map<std::vector<Rational>, std::size_t> index;
  auto key_of = [](const NumericSeed& s) {
    auto key = s.values;
    std::sort(key.begin(), key.end());
    return key;
  };

  records.push_back({initial_seed(d, markers), -1, -1});
  index.emplace(key_of(records[0].seed), 0);
  for (std::size_t head = 0; head < records.size(); ++head) {
    for (int k = 0; k < n; ++k) {
      NumericSeed next = mutate(records[head].seed, k);
      auto key = key_of(next);
      auto it = index.find(key);
      if (it != index.end()) {
        const auto& known = records[it->second].seed;
        if (relabeled(known.exchange, sorting_permutation(known.values)) !=
            relabeled(next.exchange, sorting_permutation(next.values)))
          throw Collision{};
        continue;
      }
      if (records.size() >= options.max_clusters)
        throw std::runtime_error("cluster closure exceeded " + std::to_string(options.max_clusters) +
                                 " clusters; " + d.type().name() + " should be finite");
      index.emplace(std::move(key), records.size());
      records.push_back({std::move(next), static_cast<int>(head), k});
    }
  }
  return records;
}

}  // namespace

ExchangeMatrix exchange_matrix(const OrientedDiagram& d) {
  const int n = d.rank();
  ExchangeMatrix b = ExchangeMatrix::Zero(n, n);
  for (auto [from, to] : d.arrows()) {
    b(to, from) = d.weight(to, from);
    b(from, to) = -d.weight(from, to);
  }
  return b;
}

bool skew_symmetrizable(const ExchangeMatrix& b, const std::vector<int>& d) {
  const int n = static_cast<int>(b.rows());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d[i] * b(i, j) != -d[j] * b(j, i)) return false;
  return true;
}

NumericSeed initial_seed(const OrientedDiagram& d, std::vector<Rational> values) {
  if (static_cast<int>(values.size()) != d.rank()) throw std::invalid_argument("seed size does not match the rank");
  return {exchange_matrix(d), std::move(values)};
}

NumericSeed mutate(const NumericSeed& s, int k) {
  const int n = static_cast<int>(s.values.size());
  if (k < 0 || k >= n) throw std::out_of_range("mutation direction out of range");
  NumericSeed r = s;
  Rational positive(1), negative(1);
  for (int i = 0; i < n; ++i) {
    const int e = s.exchange(i, k);
    if (e > 0) positive *= pow(s.values[i], e);
    else if (e < 0) negative *= pow(s.values[i], -e);
  }
  r.values[k] = (positive + negative) / s.values[k];
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k) {
        r.exchange(i, j) = -s.exchange(i, j);
      } else {
        const int bik = s.exchange(i, k), bkj = s.exchange(k, j);
        r.exchange(i, j) = s.exchange(i, j) + (std::abs(bik) * bkj + bik * std::abs(bkj)) / 2;
      }
    }
  }
  return r;
}

std::vector<int> ClusterEnumeration::path(std::size_t i) const {
  std::vector<int> steps;
  for (int at = static_cast<int>(i); records_[at].parent >= 0; at = records_[at].parent)
    steps.push_back(records_[at].direction);
  std::reverse(steps.begin(), steps.end());
  return steps;
}

ClusterEnumeration enumerate_clusters(const OrientedDiagram& d, const ClusterOptions& options) {
  for (std::size_t attempt = 0; attempt < 16; ++attempt) {
    try {
      return ClusterEnumeration(closure(d, attempt, options));
    } catch (const Collision&) {
    }
  }
  throw std::runtime_error("cluster enumeration kept colliding; markers are not generic enough");
}

std::vector<FriezeBand> unitary_friezes(const OrientedDiagram& d) {
  return unitary_friezes(d, enumerate_clusters(d));
}

std::vector<FriezeBand> unitary_friezes(const OrientedDiagram& d, const ClusterEnumeration& clusters) {
  const int n = d.rank();
  std::vector<Slice> seeds;
  seeds.reserve(clusters.count());
  for (std::size_t c = 0; c < clusters.count(); ++c) {
    NumericSeed s{clusters.records()[c].seed.exchange, std::vector<Rational>(n, Rational(1))};
    const auto steps = clusters.path(c);
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) s = mutate(s, *it);
    Slice seed(n);
    for (int j = 0; j < n; ++j) {
      if (s.values[j].get_den() != 1 || s.values[j] <= 0)
        throw std::logic_error("unitary evaluation produced a non-positive-integer seed value");
      seed[j] = s.values[j].get_num();
    }
    seeds.push_back(std::move(seed));
  }
  std::sort(seeds.begin(), seeds.end(), seed_less);
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  std::vector<FriezeBand> bands;
  bands.reserve(seeds.size());
  for (const auto& seed : seeds) {
    auto v = validate_seed(d, seed);
    if (!std::holds_alternative<FriezeBand>(v))
      throw std::logic_error("unitary seed failed validation for " + d.type().name());
    bands.push_back(std::get<FriezeBand>(std::move(v)));
  }
  return bands;
}

std::vector<std::int64_t> row_bounds(const std::vector<FriezeBand>& bands) {
  if (bands.empty()) return {};
  const int n = bands.front().diagram().rank();
  std::vector<std::int64_t> bound(n, 1);
  for (const auto& b : bands) {
    const auto maxima = b.row_maxima();
    for (int j = 0; j < n; ++j) {
      if (!fits_int64(maxima[j])) throw std::overflow_error("row maximum exceeds 64 bits");
      bound[j] = std::max(bound[j], to_int64(maxima[j]));
    }
  }
  return bound;
}

std::vector<std::int64_t> unitary_bounds(const OrientedDiagram& d) { return row_bounds(unitary_friezes(d)); }

}  // namespace frieze
