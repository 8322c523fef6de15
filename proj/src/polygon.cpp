#include "frieze/polygon.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

namespace frieze {

namespace {

void require_rank(int n) {
  if (n < 3) throw std::invalid_argument("punctured polygon needs n >= 3, got " + std::to_string(n));
}

int wrap(int x, int n) { return ((x - 1) % n + n) % n + 1; }

/// Lifted end of a boundary arc: s < end < s + n.
int lifted(const TaggedArc& a, int n) { return a.t > a.s ? a.t : a.t + n; }

/// The side joining lifted vertices x < y clockwise; nothing for a boundary
/// edge. y - x == n would be the loop and is handled by the caller.
void push_chord(std::vector<TaggedArc>& out, int x, int y, int n) {
  if (y - x == 1) return;
  if (y - x <= 0 || y - x >= n) throw std::logic_error("chord of invalid length");
  out.push_back(TaggedArc::boundary(wrap(x, n), wrap(y, n)));
}

int crossings(const TaggedArc& a, const TaggedArc& b, int n, int* translate = nullptr) {
  const int alo = a.s, ahi = lifted(a, n);
  int count = 0;
  for (int k = -1; k <= 1; ++k) {
    const int blo = b.s + k * n, bhi = lifted(b, n) + k * n;
    if ((alo < blo && blo < ahi && ahi < bhi) || (blo < alo && alo < bhi && bhi < ahi)) {
      ++count;
      if (translate) *translate = k;
    }
  }
  return count;
}

/// Lifted copy of vertex v strictly inside (s, t'), or 0.
int inside(int v, const TaggedArc& b, int n) {
  const int hi = lifted(b, n);
  for (int cand : {v, v + n})
    if (b.s < cand && cand < hi) return cand;
  return 0;
}

bool contains(const Triangulation& t, const TaggedArc& a) { return std::binary_search(t.begin(), t.end(), a); }

}  // namespace

std::string to_string(const TaggedArc& a) {
  if (a.is_spoke()) return std::string(a.tag == Tag::Plain ? "S+" : "S-") + std::to_string(a.s);
  return "B " + std::to_string(a.s) + " " + std::to_string(a.t);
}

TaggedArc parse_arc(std::string_view text) {
  auto number = [&](std::string_view part) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty())
      throw std::invalid_argument("bad arc '" + std::string(text) + "'");
    return v;
  };
  if (text.size() >= 3 && text[0] == 'S' && (text[1] == '+' || text[1] == '-'))
    return TaggedArc::spoke(number(text.substr(2)), text[1] == '+' ? Tag::Plain : Tag::Notched);
  if (text.size() >= 5 && text[0] == 'B' && text[1] == ' ') {
    const auto rest = text.substr(2);
    const auto gap = rest.find(' ');
    if (gap != std::string_view::npos) return TaggedArc::boundary(number(rest.substr(0, gap)), number(rest.substr(gap + 1)));
  }
  throw std::invalid_argument("bad arc '" + std::string(text) + "'");
}

void validate_arc(const TaggedArc& a, int n) {
  require_rank(n);
  auto fail = [&] { throw std::invalid_argument("'" + to_string(a) + "' is not an arc of the punctured " + std::to_string(n) + "-gon"); };
  if (a.s < 1 || a.s > n) fail();
  if (a.is_spoke()) {
    if (a.t != 0) fail();
    return;
  }
  if (a.tag != Tag::Plain || a.t < 1 || a.t > n || a.t == a.s || a.t == wrap(a.s + 1, n)) fail();
}

int arc_index(const TaggedArc& a, int n) {
  validate_arc(a, n);
  if (a.is_spoke()) return (a.tag == Tag::Plain ? 0 : n) + a.s - 1;
  return 2 * n + (a.s - 1) * (n - 2) + (lifted(a, n) - a.s - 2);
}

std::vector<TaggedArc> all_arcs(int n) {
  require_rank(n);
  std::vector<TaggedArc> arcs;
  arcs.reserve(static_cast<std::size_t>(n) * n);
  for (int v = 1; v <= n; ++v) arcs.push_back(TaggedArc::spoke(v, Tag::Plain));
  for (int v = 1; v <= n; ++v) arcs.push_back(TaggedArc::spoke(v, Tag::Notched));
  for (int s = 1; s <= n; ++s)
    for (int len = 2; len <= n - 1; ++len) arcs.push_back(TaggedArc::boundary(s, wrap(s + len, n)));
  return arcs;
}

bool incompatible(const TaggedArc& a, const TaggedArc& b, int n) {
  validate_arc(a, n);
  validate_arc(b, n);
  if (a.is_spoke() && b.is_spoke()) return a.tag != b.tag && a.s != b.s;
  if (a.is_spoke()) return inside(a.s, b, n) != 0;
  if (b.is_spoke()) return inside(b.s, a, n) != 0;
  return crossings(a, b, n) > 0;
}

std::optional<ExchangeRelation> exchange_relation(const TaggedArc& a, const TaggedArc& b, int n) {
  if (!incompatible(a, b, n)) return std::nullopt;
  ExchangeRelation r;
  if (a.is_spoke() && b.is_spoke()) {
    const int u = a.s, w = b.s;
    push_chord(r.first, u, w > u ? w : w + n, n);
    push_chord(r.second, w, u > w ? u : u + n, n);
    return r;
  }
  if (a.is_spoke() || b.is_spoke()) {
    const TaggedArc& spoke = a.is_spoke() ? a : b;
    const TaggedArc& arc = a.is_spoke() ? b : a;
    const int w = inside(spoke.s, arc, n), hi = lifted(arc, n);
    r.first.push_back(TaggedArc::spoke(arc.s, spoke.tag));
    push_chord(r.first, w, hi, n);
    r.second.push_back(TaggedArc::spoke(arc.t, spoke.tag));
    push_chord(r.second, arc.s, w, n);
    return r;
  }
  int k = 0;
  if (crossings(a, b, n, &k) != 1) return std::nullopt;
  int s1 = a.s, t1 = lifted(a, n), s2 = b.s + k * n, t2 = lifted(b, n) + k * n;
  if (s2 < s1) {
    std::swap(s1, s2);
    std::swap(t1, t2);
  }
  if (t2 - s1 > n) throw std::logic_error("single crossing spans more than the polygon");
  push_chord(r.first, s1, s2, n);
  push_chord(r.first, t1, t2, n);
  push_chord(r.second, s2, t1, n);
  if (t2 - s1 == n) {
    r.second.push_back(TaggedArc::spoke(wrap(s1, n), Tag::Plain));
    r.second.push_back(TaggedArc::spoke(wrap(s1, n), Tag::Notched));
  } else {
    push_chord(r.second, s1, t2, n);
  }
  return r;
}

bool is_triangulation(const Triangulation& t, int n) {
  require_rank(n);
  if (static_cast<int>(t.size()) != n) return false;
  for (const auto& a : t) {
    try {
      validate_arc(a, n);
    } catch (const std::invalid_argument&) {
      return false;
    }
  }
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (t[i] == t[j] || incompatible(t[i], t[j], n)) return false;
  return true;
}

int plain_spoke_count(const Triangulation& t) {
  return static_cast<int>(std::count_if(t.begin(), t.end(), [](const TaggedArc& a) { return a.is_plain_spoke(); }));
}

std::vector<Triangulation> enumerate_triangulations(int n) {
  const auto arcs = all_arcs(n);
  const int total = static_cast<int>(arcs.size());
  std::vector<std::vector<int>> later(total);
  for (int i = 0; i < total; ++i)
    for (int j = i + 1; j < total; ++j)
      if (!incompatible(arcs[i], arcs[j], n)) later[i].push_back(j);

  std::vector<Triangulation> result;
  std::vector<int> current;
  std::function<void(const std::vector<int>&)> grow = [&](const std::vector<int>& cands) {
    if (static_cast<int>(current.size()) == n) {
      Triangulation t;
      for (int i : current) t.push_back(arcs[i]);
      std::sort(t.begin(), t.end());
      result.push_back(std::move(t));
      return;
    }
    for (std::size_t c = 0; c < cands.size(); ++c) {
      if (current.size() + (cands.size() - c) < static_cast<std::size_t>(n)) return;
      const int i = cands[c];
      std::vector<int> next;
      std::set_intersection(cands.begin() + c + 1, cands.end(), later[i].begin(), later[i].end(), std::back_inserter(next));
      current.push_back(i);
      grow(next);
      current.pop_back();
    }
  };
  std::vector<int> everything(total);
  for (int i = 0; i < total; ++i) everything[i] = i;
  grow(everything);
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Triangulation> triangulations_with_spokes(int n, int m) {
  if (m < 1 || m > n) throw std::out_of_range("spoke count must lie in 1..n");
  std::vector<Triangulation> out;
  for (auto& t : enumerate_triangulations(n))
    if (plain_spoke_count(t) == m) out.push_back(std::move(t));
  return out;
}

ArcWeightMap::ArcWeightMap(int n) : n_(n) {
  require_rank(n);
  weights_.assign(static_cast<std::size_t>(n) * n, Integer(0));
}

void ArcWeightMap::set(const TaggedArc& a, Integer w) {
  if (w <= 0) throw std::invalid_argument("arc weight must be positive");
  weights_[arc_index(a, n_)] = std::move(w);
}

bool ArcWeightMap::total() const {
  return std::all_of(weights_.begin(), weights_.end(), [](const Integer& w) { return w != 0; });
}

Integer ArcWeightMap::product(const std::vector<TaggedArc>& arcs) const {
  Integer p = 1;
  for (const auto& a : arcs) {
    if (!has(a)) throw std::logic_error("monomial uses unweighted arc " + to_string(a));
    p *= (*this)[a];
  }
  return p;
}

TaggedArc flip_partner(const Triangulation& t, const TaggedArc& a, int n) {
  if (!contains(t, a)) throw std::invalid_argument("arc " + to_string(a) + " is not in the triangulation");
  std::optional<TaggedArc> partner;
  for (const auto& b : all_arcs(n)) {
    if (b == a || contains(t, b)) continue;
    bool fits = true;
    for (const auto& c : t)
      if (c != a && incompatible(b, c, n)) {
        fits = false;
        break;
      }
    if (!fits) continue;
    if (partner) throw std::logic_error("flip of " + to_string(a) + " is not unique");
    partner = b;
  }
  if (!partner) throw std::logic_error("arc " + to_string(a) + " has no flip");
  return *partner;
}

FlipResult flip(const Triangulation& t, const TaggedArc& a, const ArcWeightMap& w) {
  const int n = w.rank();
  const TaggedArc b = flip_partner(t, a, n);
  const auto rel = exchange_relation(a, b, n);
  if (!rel) throw std::logic_error("no exchange relation for " + to_string(a) + " / " + to_string(b));
  for (const auto* side : {&rel->first, &rel->second})
    for (const auto& c : *side)
      if (c == a || !contains(t, c)) throw std::logic_error("exchange monomial leaves the triangulation");
  const Integer num = w.product(rel->first) + w.product(rel->second);
  const Integer& den = w[a];
  if (den == 0) throw std::logic_error("flipped arc has no weight");
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw std::domain_error("flip of " + to_string(a) + " is not integral");
  FlipResult r{t, b, num / den};
  std::replace(r.triangulation.begin(), r.triangulation.end(), a, b);
  std::sort(r.triangulation.begin(), r.triangulation.end());
  return r;
}

std::vector<FriezeDescriptor> all_descriptors(int n) {
  require_rank(n);
  std::vector<FriezeDescriptor> out;
  const auto all = enumerate_triangulations(n);
  for (int m = 1; m <= n; ++m)
    for (const auto& t : all) {
      if (plain_spoke_count(t) != m) continue;
      for (int x = 1; x <= m; ++x)
        if (m % x == 0) out.push_back({t, m, Integer(x)});
    }
  return out;
}

ArcWeightMap weights_from_descriptor(int n, const FriezeDescriptor& d, std::uint64_t shuffle_seed) {
  if (!is_triangulation(d.triangulation, n)) throw std::invalid_argument("descriptor does not hold a triangulation");
  if (!std::is_sorted(d.triangulation.begin(), d.triangulation.end()))
    throw std::invalid_argument("descriptor triangulation must be sorted");
  const int m = plain_spoke_count(d.triangulation);
  if (m != d.spokes || m < 1) throw std::invalid_argument("descriptor spoke count does not match its triangulation");
  if (d.divisor <= 0 || Integer(m) % d.divisor != 0) throw std::invalid_argument("descriptor divisor must divide m");

  ArcWeightMap w(n);
  for (const auto& a : d.triangulation) {
    if (a.is_plain_spoke()) w.set(a, d.divisor);
    else if (a.is_spoke()) w.set(a, Integer(m) / d.divisor);
    else w.set(a, 1);
  }

  std::mt19937_64 rng(shuffle_seed);
  std::set<Triangulation> seen{d.triangulation};
  std::deque<Triangulation> queue{d.triangulation};
  while (!queue.empty() && !w.total()) {
    const Triangulation t = std::move(queue.front());
    queue.pop_front();
    Triangulation order = t;
    if (shuffle_seed) std::shuffle(order.begin(), order.end(), rng);
    for (const auto& a : order) {
      FlipResult r = flip(t, a, w);
      if (w.has(r.arc)) {
        if (w[r.arc] != r.weight)
          throw std::logic_error("conflicting weights for " + to_string(r.arc) + ": " + to_string(w[r.arc]) +
                                 " vs " + to_string(r.weight));
      } else {
        w.set(r.arc, r.weight);
      }
      if (seen.insert(r.triangulation).second) queue.push_back(std::move(r.triangulation));
    }
  }
  if (!w.total()) throw std::logic_error("flip closure did not reach every arc");
  return w;
}

WeightCheck check_weights(int n, const ArcWeightMap& w) {
  if (w.rank() != n) throw std::invalid_argument("weight map rank mismatch");
  if (!w.total()) throw std::invalid_argument("weight map is not total");
  WeightCheck check;
  const auto arcs = all_arcs(n);
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      const auto rel = exchange_relation(arcs[i], arcs[j], n);
      if (!rel) continue;
      Integer lhs = w[arcs[i]] * w[arcs[j]];
      Integer rhs = w.product(rel->first) + w.product(rel->second);
      if (lhs != rhs) {
        check.ok = false;
        check.violations.push_back({arcs[i], arcs[j], std::move(lhs), std::move(rhs)});
      }
    }
  return check;
}

FriezeDescriptor descriptor_from_weights(int n, const ArcWeightMap& w) {
  const auto check = check_weights(n, w);
  if (!check.ok)
    throw std::invalid_argument("weights fail the exchange relation for " + to_string(check.violations.front().a) +
                                " / " + to_string(check.violations.front().b));
  const auto arcs = all_arcs(n);
  Triangulation t;
  for (const auto& a : arcs) {
    if (w[a] != 1) continue;
    if (a.is_notched_spoke() && w[TaggedArc::spoke(a.s, Tag::Plain)] != 1) continue;
    t.push_back(a);
  }
  for (int v = 1; v <= n; ++v) {
    const auto s = TaggedArc::spoke(v, Tag::Plain);
    if (std::find(t.begin(), t.end(), s) != t.end()) continue;
    if (std::none_of(t.begin(), t.end(), [&](const TaggedArc& c) { return incompatible(s, c, n); })) t.push_back(s);
  }
  if (plain_spoke_count(t) == 1) {
    const auto it = std::find_if(t.begin(), t.end(), [](const TaggedArc& a) { return a.is_plain_spoke(); });
    const auto companion = TaggedArc::spoke(it->s, Tag::Notched);
    if (std::find(t.begin(), t.end(), companion) == t.end()) t.push_back(companion);
  }
  std::sort(t.begin(), t.end());
  if (!is_triangulation(t, n)) throw std::invalid_argument("weight-1 arcs do not extend to a descriptor triangulation");

  const int m = plain_spoke_count(t);
  std::optional<Integer> x;
  for (const auto& a : t) {
    if (!a.is_plain_spoke()) continue;
    if (x && *x != w[a]) throw std::invalid_argument("plain spokes of the descriptor have different weights");
    x = w[a];
  }
  if (!x || Integer(m) % *x != 0) throw std::invalid_argument("spoke weight does not divide the spoke count");
  return {std::move(t), m, *x};
}

std::vector<std::string> structure_violations(int n, const ArcWeightMap& w) {
  std::vector<std::string> out;
  const auto arcs = all_arcs(n);
  std::vector<TaggedArc> ones;
  bool unit_spoke = false;
  for (const auto& a : arcs)
    if (w[a] == 1) {
      ones.push_back(a);
      unit_spoke = unit_spoke || a.is_spoke();
    }
  for (std::size_t i = 0; i < ones.size(); ++i)
    for (std::size_t j = i + 1; j < ones.size(); ++j)
      if (incompatible(ones[i], ones[j], n))
        out.push_back("weight-1 arcs " + to_string(ones[i]) + " and " + to_string(ones[j]) + " cross");
  if (unit_spoke && static_cast<int>(ones.size()) != n)
    out.push_back("a weight-1 spoke without a weight-1 triangulation");

  FriezeDescriptor d;
  try {
    d = descriptor_from_weights(n, w);
  } catch (const std::exception& e) {
    out.push_back(std::string("no descriptor: ") + e.what());
    return out;
  }
  std::optional<Integer> y;
  for (const auto& a : d.triangulation) {
    if (!a.is_plain_spoke()) continue;
    if (w[a] != d.divisor) out.push_back("plain spoke " + to_string(a) + " differs from x");
    const Integer& notched = w[TaggedArc::spoke(a.s, Tag::Notched)];
    if (y && *y != notched) out.push_back("notched spokes at descriptor vertices differ");
    y = notched;
  }
  if (y && d.divisor * *y != d.spokes) out.push_back("x * y != m");
  try {
    if (weights_from_descriptor(n, d) != w) out.push_back("descriptor does not reproduce the weights");
  } catch (const std::exception& e) {
    out.push_back(std::string("descriptor closure failed: ") + e.what());
  }
  return out;
}

std::vector<ArcWeightMap> enumerate_friezes_geometric(int n) {
  std::vector<ArcWeightMap> out;
  for (const auto& d : all_descriptors(n)) out.push_back(weights_from_descriptor(n, d));
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw std::logic_error("two descriptors gave the same frieze");
  return out;
}

}  // namespace frieze
