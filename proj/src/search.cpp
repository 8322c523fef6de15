#include "frieze/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace frieze {

namespace {

using Mask = std::uint32_t;

struct Check {
  int node;
  int column;
  Mask deps;
};

/// Dependency masks of a(j,k) on seed nodes, for k in [-back, forward].
struct Dependencies {
  int n = 0;
  int back = 0;
  int forward = 0;
  std::vector<Mask> masks;  // (k + back) * n + j

  Mask at(int j, int k) const { return masks[(k + back) * n + j]; }
};

Dependencies dependencies(const OrientedDiagram& d) {
  const int n = d.rank();
  const int horizon = coxeter_number(d.type()) + 2;
  const Mask full = (Mask{1} << n) - 1;
  Dependencies deps;
  deps.n = n;
  deps.forward = horizon;
  std::vector<std::vector<Mask>> backward;  // backward[t] is column -t
  std::vector<Mask> column(n);
  for (int j = 0; j < n; ++j) column[j] = Mask{1} << j;
  backward.push_back(column);
  const auto& topo = d.topological_order();
  // Backward columns stop once every node depends on the whole seed; those
  // values carry no extra pruning power over the forward pass.
  while (true) {
    std::vector<Mask> prev(n, 0);
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
      const int j = *it;
      Mask m = column[j];
      for (int i : d.successors(j)) m |= prev[i];
      for (int i : d.predecessors(j)) m |= column[i];
      prev[j] = m;
    }
    if (std::all_of(prev.begin(), prev.end(), [&](Mask m) { return m == full; })) break;
    backward.push_back(prev);
    column = prev;
    if (static_cast<int>(backward.size()) > horizon) break;
  }
  deps.back = static_cast<int>(backward.size()) - 1;
  deps.masks.assign((deps.back + horizon + 1) * n, 0);
  for (int t = 0; t <= deps.back; ++t)
    for (int j = 0; j < n; ++j) deps.masks[(deps.back - t) * n + j] = backward[t][j];
  column = backward[0];
  for (int k = 1; k <= horizon; ++k) {
    std::vector<Mask> next(n, 0);
    for (int j : topo) {
      Mask m = column[j];
      for (int i : d.successors(j)) m |= column[i];
      for (int i : d.predecessors(j)) m |= next[i];
      next[j] = m;
    }
    for (int j = 0; j < n; ++j) deps.masks[(k + deps.back) * n + j] = next[j];
    column = next;
  }
  return deps;
}

std::vector<Check> all_checks(const OrientedDiagram& d, const Dependencies& deps) {
  std::vector<Check> checks;
  const auto& topo = d.topological_order();
  for (int k = 1; k <= deps.forward; ++k)
    for (int j : topo) checks.push_back({j, k, deps.at(j, k)});
  for (int k = -1; k >= -deps.back; --k)
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) checks.push_back({*it, k, deps.at(*it, k)});
  return checks;
}

std::vector<int> group_of(int n, const std::vector<std::vector<int>>& tied) {
  std::vector<int> group(n);
  std::iota(group.begin(), group.end(), 0);
  for (const auto& g : tied) {
    if (g.empty()) continue;
    const int rep = *std::min_element(g.begin(), g.end());
    for (int j : g) {
      if (j < 0 || j >= n) throw std::invalid_argument("tied node out of range");
      group[j] = rep;
    }
  }
  return group;
}

std::vector<int> choose_order(const OrientedDiagram& d, std::span<const std::int64_t> bound,
                              const std::vector<int>& group) {
  const int n = d.rank();
  const auto deps = dependencies(d);
  const Mask full = (Mask{1} << n) - 1;
  std::vector<std::pair<Mask, double>> weighted;  // (deps, log pass probability)
  for (const auto& c : all_checks(d, deps)) {
    if (c.deps == full) continue;
    const double b = static_cast<double>(std::max<std::int64_t>(bound[c.node], 1));
    const double pass = std::min(1.0, (std::log(b) + 0.58) / b);
    weighted.emplace_back(c.deps, std::log(pass));
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  if (n > 9) return perm;
  std::vector<int> best = perm;
  double best_cost = std::numeric_limits<double>::infinity();
  std::vector<int> pos(n);
  do {
    for (int p = 0; p < n; ++p) pos[perm[p]] = p;
    std::vector<double> gain(n, 0.0);
    for (auto [mask, lp] : weighted) {
      int depth = 0;
      for (int j = 0; j < n; ++j)
        if (mask >> j & 1) depth = std::max(depth, pos[j]);
      gain[depth] += lp;
    }
    double log_survivors = 0.0, cost = 0.0;
    std::vector<bool> seen_group(n, false);
    for (int p = 0; p < n; ++p) {
      const int j = perm[p];
      if (!seen_group[group[j]]) {
        seen_group[group[j]] = true;
        log_survivors += std::log(static_cast<double>(std::max<std::int64_t>(bound[j], 1)));
      }
      log_survivors += gain[p];
      cost += std::exp(log_survivors);
    }
    if (cost < best_cost - 1e-9) {
      best_cost = cost;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool checked_mul(std::int64_t& acc, std::int64_t v) { return !__builtin_mul_overflow(acc, v, &acc); }

bool checked_pow_mul(std::int64_t& acc, std::int64_t v, int e) {
  for (int t = 0; t < e; ++t)
    if (!checked_mul(acc, v)) return false;
  return true;
}

std::vector<std::int64_t> divisors_up_to(std::int64_t value, std::int64_t limit) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t q = 1; q * q <= value; ++q) {
    if (value % q) continue;
    if (q <= limit) small.push_back(q);
    const std::int64_t r = value / q;
    if (r != q && r <= limit) large.push_back(r);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Shared read-only plan of the search.
struct Plan {
  const OrientedDiagram* diagram;
  int n;
  int back;
  int forward;
  std::vector<std::int64_t> bound;
  std::vector<int> order;
  std::vector<int> group;
  std::vector<std::vector<Check>> schedule;  // by depth
  // Depth d whose node x can draw candidates from divisors of a numerator
  // independent of x: index into schedule[d], or -1.
  std::vector<int> divisor_check;

  int column_count() const { return back + forward + 1; }
};

Plan make_plan(const OrientedDiagram& d, std::span<const std::int64_t> bound,
               const std::vector<std::vector<int>>& tied) {
  Plan plan;
  plan.diagram = &d;
  plan.n = d.rank();
  plan.bound.assign(bound.begin(), bound.end());
  plan.group = group_of(plan.n, tied);
  plan.order = choose_order(d, bound, plan.group);
  const auto deps = dependencies(d);
  plan.back = deps.back;
  plan.forward = deps.forward;
  std::vector<int> pos(plan.n);
  for (int p = 0; p < plan.n; ++p) pos[plan.order[p]] = p;
  plan.schedule.assign(plan.n, {});
  for (const auto& c : all_checks(d, deps)) {
    int depth = 0;
    for (int j = 0; j < plan.n; ++j)
      if (c.deps >> j & 1) depth = std::max(depth, pos[j]);
    plan.schedule[depth].push_back(c);
  }
  // Forward columns before backward, increasing distance from the seed, and
  // topological order inside a column (all_checks already emits this order;
  // stable_sort keeps it).
  for (auto& s : plan.schedule) {
    std::stable_sort(s.begin(), s.end(), [](const Check& a, const Check& b) {
      return std::abs(a.column) < std::abs(b.column);
    });
  }
  plan.divisor_check.assign(plan.n, -1);
  for (int p = 0; p < plan.n; ++p) {
    const int x = plan.order[p];
    if (plan.group[x] != x) {
      bool first = true;
      for (int q = 0; q < p; ++q) first = first && plan.group[plan.order[q]] != plan.group[x];
      if (!first) continue;
    }
    for (std::size_t c = 0; c < plan.schedule[p].size(); ++c) {
      const auto& check = plan.schedule[p][c];
      if (check.node != x) continue;
      const bool source_forward = check.column == 1 && d.predecessors(x).empty();
      const bool sink_backward = check.column == -1 && d.successors(x).empty();
      if (source_forward || sink_backward) {
        plan.divisor_check[p] = static_cast<int>(c);
        break;
      }
    }
  }
  return plan;
}

class Worker {
 public:
  explicit Worker(const Plan& plan)
      : plan_(plan),
        values_(plan.column_count() * plan.n, 0),
        known_(plan.column_count() * plan.n, 0) {}

  /// Runs the subtree where the first variable takes `value`.
  std::vector<Slice> run_part(std::int64_t value) {
    found_.clear();
    if (assign(0, value)) descend(1);
    return std::move(found_);
  }

  /// Candidate values at depth 0.
  std::vector<std::int64_t> first_candidates() { return candidates(0); }

  std::uint64_t leaves() const { return leaves_; }

 private:
  std::int64_t& value(int j, int k) { return values_[(k + plan_.back) * plan_.n + j]; }
  char& known(int j, int k) { return known_[(k + plan_.back) * plan_.n + j]; }

  /// Numerator of the relation that determines a(j,k). Returns false if
  /// an input is unknown or the product overflows.
  bool numerator(const Check& c, std::int64_t& num) {
    const auto& d = *plan_.diagram;
    const int j = c.node, k = c.column;
    // a(j,m) a(j,m+1) = 1 + prod_{j->i} a(i,m)^w prod_{i->j} a(i,m+1)^w
    const int m = k > 0 ? k - 1 : k;
    std::int64_t prod = 1;
    for (int i : d.successors(j)) {
      if (!known(i, m) || !checked_pow_mul(prod, value(i, m), d.weight(i, j))) return false;
    }
    for (int i : d.predecessors(j)) {
      if (!known(i, m + 1) || !checked_pow_mul(prod, value(i, m + 1), d.weight(i, j))) return false;
    }
    if (prod == std::numeric_limits<std::int64_t>::max()) return false;
    num = prod + 1;
    return true;
  }

  /// Evaluates the checks of one depth; false on a definite failure.
  bool run_checks(int depth) {
    for (const auto& c : plan_.schedule[depth]) {
      const int j = c.node, k = c.column;
      const int other = k > 0 ? k - 1 : k + 1;  // the known neighbour column
      known(j, k) = 0;
      std::int64_t num;
      if (!known(j, other) || !numerator(c, num)) continue;
      const std::int64_t den = value(j, other);
      if (num % den != 0) return false;
      value(j, k) = num / den;
      known(j, k) = 1;
    }
    return true;
  }

  std::vector<std::int64_t> candidates(int depth) {
    const int x = plan_.order[depth];
    const std::int64_t limit = plan_.bound[x];
    for (int q = 0; q < depth; ++q) {
      const int y = plan_.order[q];
      if (plan_.group[y] == plan_.group[x]) {
        const std::int64_t v = value(y, 0);
        if (v <= limit) return {v};
        return {};
      }
    }
    const int dc = plan_.divisor_check[depth];
    if (dc >= 0) {
      std::int64_t num;
      if (numerator(plan_.schedule[depth][dc], num)) return divisors_up_to(num, limit);
    }
    std::vector<std::int64_t> all(limit);
    std::iota(all.begin(), all.end(), std::int64_t{1});
    return all;
  }

  bool assign(int depth, std::int64_t v) {
    const int x = plan_.order[depth];
    value(x, 0) = v;
    known(x, 0) = 1;
    return run_checks(depth);
  }

  void descend(int depth) {
    if (depth == plan_.n) {
      leaf();
      return;
    }
    for (std::int64_t v : candidates(depth))
      if (assign(depth, v)) descend(depth + 1);
    known(plan_.order[depth], 0) = 0;
  }

  void leaf() {
    ++leaves_;
    const int n = plan_.n;
    bool all_known = true;
    bool periodic = false;
    for (int k = 1; k <= plan_.forward && !periodic; ++k) {
      bool same = true;
      for (int j = 0; j < n; ++j) {
        all_known = all_known && known(j, k);
        same = same && known(j, k) && value(j, k) == value(j, 0);
      }
      periodic = same;
    }
    Slice seed(n);
    for (int j = 0; j < n; ++j) seed[j] = static_cast<long>(value(j, 0));
    // Fully known and periodic columns already prove the seed; anything
    // else (overflow, or no recurrence) goes through the exact validator.
    if ((all_known && periodic) || std::holds_alternative<FriezeBand>(validate_seed(*plan_.diagram, seed)))
      found_.push_back(std::move(seed));
  }

  const Plan& plan_;
  std::vector<std::int64_t> values_;
  std::vector<char> known_;
  std::vector<Slice> found_;
  std::uint64_t leaves_ = 0;
};

}  // namespace

std::vector<int> search_order(const OrientedDiagram& d, std::span<const std::int64_t> bound) {
  return choose_order(d, bound, group_of(d.rank(), {}));
}

EnumerationResult enumerate_friezes(const OrientedDiagram& d, std::span<const std::int64_t> bound,
                                    const SearchOptions& options) {
  const int n = d.rank();
  if (static_cast<int>(bound.size()) != n) throw std::invalid_argument("bound size does not match the diagram rank");
  if (n > 30) throw std::invalid_argument("rank too large for the search");
  for (auto b : bound)
    if (b < 1) throw std::invalid_argument("bounds must be positive");

  const Plan plan = make_plan(d, bound, options.tied_nodes);
  std::vector<std::int64_t> parts = Worker(plan).first_candidates();

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(parts.size(), 1))));

  std::vector<std::vector<Slice>> results(parts.size());
  std::vector<char> done(parts.size(), 0);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    auto it = options.completed_parts.find(parts[p]);
    if (it != options.completed_parts.end()) {
      results[p] = it->second;
      done[p] = 1;
    }
  }

  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> leaves{0};
  std::mutex callback_mutex;
  auto work = [&] {
    Worker worker(plan);
    for (std::size_t p = next++; p < parts.size(); p = next++) {
      if (done[p]) continue;
      results[p] = worker.run_part(parts[p]);
      if (options.on_part_done) {
        std::lock_guard lock(callback_mutex);
        options.on_part_done(SearchPart{parts[p], results[p]});
      }
    }
    leaves += worker.leaves();
  };
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }

  std::vector<Slice> seeds;
  for (auto& r : results)
    for (auto& s : r) seeds.push_back(std::move(s));
  std::sort(seeds.begin(), seeds.end(), seed_less);
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

  EnumerationResult result;
  result.bound.assign(bound.begin(), bound.end());
  result.order = plan.order;
  result.leaves = leaves;
  result.threads = threads;
  result.friezes.reserve(seeds.size());
  for (const auto& s : seeds) {
    result.friezes.push_back(band_from_seed(d, s));
    const auto maxima = result.friezes.back().row_maxima();
    for (int j = 0; j < n; ++j) {
      if (maxima[j] > bound[j]) result.saturated = true;
      if (maxima[j] == bound[j]) result.attains_bound = true;
    }
  }
  return result;
}

}  // namespace frieze
