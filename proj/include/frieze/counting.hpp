#pragma once

#include "frieze/dynkin.hpp"
#include "frieze/integer.hpp"

#include <vector>

namespace frieze {

Integer catalan(unsigned k);

/// B(n,k) = k/(2n+k) * binom(2n+k, n), the coefficient of x^n in c(x)^k.
Integer ballot(unsigned n, unsigned k);

Integer divisor_count(unsigned long m);

/// Triangulations of the punctured n-gon with exactly m plain spokes,
/// binom(2n-m-1, n-1). Requires 1 <= m <= n.
Integer t_count(unsigned n, unsigned m);

/// Same number as (n/m) * sum over compositions i_1+...+i_m = n-m of
/// prod C_{i_j}; computed by repeated convolution of the Catalan sequence.
Integer t_count_convolution(unsigned n, unsigned m);

enum class CountStatus { Proven, Conjectural };

const char* to_string(CountStatus s);

struct FriezeCount {
  Integer count;
  CountStatus status;
};

/// Closed-form number of friezes: A_n Catalan(n+1); D_n the divisor-weighted
/// triangulation sum; B_n, C_n, G_2 via folding; E_6, E_7, E_8, F_4 are the
/// conjectured values 868, 4400, 26592, 112.
FriezeCount frieze_count(const DynkinType& t);

/// Dense truncated power series in x with exact coefficients.
class Series {
 public:
  explicit Series(unsigned order) : coeffs_(order + 1) {}
  Series(unsigned order, std::vector<Integer> coeffs);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
  const Integer& operator[](unsigned i) const { return coeffs_[i]; }
  Integer& operator[](unsigned i) { return coeffs_[i]; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  friend bool operator==(const Series& a, const Series& b) = default;

  /// Multiplicative inverse; the constant term must be +1 or -1.
  Series inverse() const;
  Series derivative() const;
  /// Multiplication by x^k, truncated.
  Series shifted(unsigned k) const;

 private:
  std::vector<Integer> coeffs_;
};

/// Catalan generating function c(x) to the given order, from the
/// recurrence C_{k+1} = sum C_i C_{k-i}.
Series catalan_series(unsigned order);

/// Coefficients [n][m] of x^n y^m in 1/((2 - c(x))(1 - x y c(x))), n,m <= N.
using SeriesTable = std::vector<std::vector<Integer>>;
SeriesTable series_t_table(unsigned N);

/// Checks 1 + x c'(x)/c(x) = 1/(2 - c(x)) through order N.
bool gf_identity_check(unsigned N);

}  // namespace frieze
