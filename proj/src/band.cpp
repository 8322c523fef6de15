#include "frieze/band.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace frieze {

Slice make_slice(std::initializer_list<long> values) {
  Slice s;
  s.reserve(values.size());
  for (long v : values) s.emplace_back(v);
  return s;
}

std::string to_string(Failure f) {
  switch (f) {
    case Failure::NonIntegral: return "NonIntegral";
    case Failure::NonPositive: return "NonPositive";
    case Failure::NoRecurrence: return "NoRecurrence";
  }
  return "?";
}

std::optional<Slice> next_slice(const OrientedDiagram& d, const Slice& s) {
  const int n = d.rank();
  if (static_cast<int>(s.size()) != n) throw std::invalid_argument("slice size does not match the diagram rank");
  Slice next(n);
  Integer numerator, term;
  for (int j : d.topological_order()) {
    term = 1;
    for (int i : d.successors(j)) term *= pow(s[i], d.weight(i, j));
    for (int i : d.predecessors(j)) term *= pow(next[i], d.weight(i, j));
    numerator = term + 1;
    if (!mpz_divisible_p(numerator.get_mpz_t(), s[j].get_mpz_t())) return std::nullopt;
    mpz_divexact(next[j].get_mpz_t(), numerator.get_mpz_t(), s[j].get_mpz_t());
  }
  return next;
}

std::optional<Slice> previous_slice(const OrientedDiagram& d, const Slice& s) {
  const int n = d.rank();
  if (static_cast<int>(s.size()) != n) throw std::invalid_argument("slice size does not match the diagram rank");
  Slice prev(n);
  Integer numerator, term;
  const auto& topo = d.topological_order();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const int j = *it;
    term = 1;
    for (int i : d.successors(j)) term *= pow(prev[i], d.weight(i, j));
    for (int i : d.predecessors(j)) term *= pow(s[i], d.weight(i, j));
    numerator = term + 1;
    if (!mpz_divisible_p(numerator.get_mpz_t(), s[j].get_mpz_t())) return std::nullopt;
    mpz_divexact(prev[j].get_mpz_t(), numerator.get_mpz_t(), s[j].get_mpz_t());
  }
  return prev;
}

FriezeBand::FriezeBand(OrientedDiagram diagram, std::vector<Slice> columns)
    : diagram_(std::move(diagram)), columns_(std::move(columns)) {
  if (columns_.empty()) throw std::invalid_argument("a band needs at least one column");
  for (const auto& c : columns_)
    if (static_cast<int>(c.size()) != diagram_.rank()) throw std::invalid_argument("column size mismatch");
}

const Integer& FriezeBand::at(int node, long column) const {
  const long p = period();
  long m = column % p;
  if (m < 0) m += p;
  return columns_[m][node];
}

FriezeBand FriezeBand::rotated(long k) const {
  const long p = period();
  long shift = k % p;
  if (shift < 0) shift += p;
  std::vector<Slice> cols;
  cols.reserve(p);
  for (long m = 0; m < p; ++m) cols.push_back(columns_[(m + shift) % p]);
  return FriezeBand(diagram_, std::move(cols));
}

std::vector<Integer> FriezeBand::row_maxima() const {
  std::vector<Integer> result(columns_.front());
  for (const auto& c : columns_)
    for (std::size_t j = 0; j < c.size(); ++j)
      if (c[j] > result[j]) result[j] = c[j];
  return result;
}

bool FriezeBand::has_unit_slice() const {
  return std::any_of(columns_.begin(), columns_.end(),
                     [](const Slice& c) { return std::all_of(c.begin(), c.end(), [](const Integer& v) { return v == 1; }); });
}

Validation validate_seed(const OrientedDiagram& d, const Slice& seed) {
  if (static_cast<int>(seed.size()) != d.rank()) throw std::invalid_argument("seed size does not match the diagram rank");
  for (const auto& v : seed)
    if (v <= 0) return Invalid{0, Failure::NonPositive};
  const int horizon = coxeter_number(d.type()) + 2;
  std::vector<Slice> columns{seed};
  for (int m = 1; m <= horizon; ++m) {
    auto next = next_slice(d, columns.back());
    if (!next) return Invalid{m, Failure::NonIntegral};
    for (const auto& v : *next)
      if (v <= 0) return Invalid{m, Failure::NonPositive};
    if (*next == seed) return FriezeBand(d, std::move(columns));
    columns.push_back(std::move(*next));
  }
  std::clog << "warning: anomaly: seed of " << d.type().name() << " stayed integral for " << horizon
            << " columns without recurring\n";
  return Invalid{horizon, Failure::NoRecurrence};
}

FriezeBand band_from_seed(const OrientedDiagram& d, const Slice& seed) {
  auto v = validate_seed(d, seed);
  if (auto* bad = std::get_if<Invalid>(&v)) {
    throw std::runtime_error("seed is not a frieze: " + to_string(bad->reason) + " at column " +
                             std::to_string(bad->column));
  }
  return std::get<FriezeBand>(std::move(v));
}

int period(const FriezeBand& b) { return b.period(); }

bool satisfies_recurrence(const FriezeBand& b) {
  const auto& d = b.diagram();
  const int n = d.rank();
  const long p = b.period();
  Integer rhs;
  for (long m = 0; m < p; ++m) {
    for (int j = 0; j < n; ++j) {
      if (b.at(j, m) <= 0) return false;
      rhs = 1;
      for (int i : d.successors(j)) rhs *= pow(b.at(i, m), d.weight(i, j));
      for (int i : d.predecessors(j)) rhs *= pow(b.at(i, m + 1), d.weight(i, j));
      rhs += 1;
      if (b.at(j, m) * b.at(j, m + 1) != rhs) return false;
    }
  }
  return true;
}

std::string render_band(const FriezeBand& b, int columns) {
  const int n = b.diagram().rank();
  std::size_t width = 1;
  for (int m = 0; m < columns; ++m)
    for (int j = 0; j < n; ++j) width = std::max(width, to_string(b.at(j, m)).size());
  std::ostringstream out;
  for (int j = 0; j < n; ++j) {
    for (int m = 0; m < columns; ++m) {
      const auto text = to_string(b.at(j, m));
      if (m > 0) out << ' ';
      out << std::string(width - text.size(), ' ') << text;
    }
    out << '\n';
  }
  return out.str();
}

bool seed_less(const Slice& a, const Slice& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace frieze
