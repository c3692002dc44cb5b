#ifndef ANSTAR_LATTICE_HPP
#define ANSTAR_LATTICE_HPP

#include "anstar/exact_field.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace anstar {

/// Subtracts the mean so that the coefficients sum to zero.
std::vector<Rational> canonicalize(std::vector<Rational> coeffs);

/// A vector v = sum_j c_j k_j of the rank-n lattice space, stored by its
/// n+1 rational k-coefficients. The k_j sum to zero, so coefficients are kept
/// in the representative with sum c_j = 0 and compared there.
class LatticeVector {
public:
  LatticeVector() = default;
  /// Zero vector of rank n.
  explicit LatticeVector(int n);
  /// Canonicalizes the given n+1 coefficients.
  LatticeVector(int n, std::vector<Rational> coeffs);

  int rank() const { return rank_; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// 0-based access; coefficient of k_{j+1}.
  const Rational& operator[](std::size_t j) const { return coeffs_[j]; }
  bool is_zero() const;

  /// n_i = (v, alpha_i); integral iff v lies in the weight lattice.
  std::vector<Rational> weight_coordinates() const;
  /// m_i = (v, omega_i); integral iff v lies in the root lattice.
  std::vector<Rational> root_coordinates() const;
  bool in_weight_lattice() const;
  bool in_root_lattice() const;

  /// "(4/5, -1/5, ...)"
  std::string str() const;

  LatticeVector operator-() const;
  LatticeVector& operator+=(const LatticeVector& o);
  LatticeVector& operator-=(const LatticeVector& o);
  LatticeVector& operator*=(const Rational& s);
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(LatticeVector a, const Rational& s) { return a *= s; }
  friend LatticeVector operator*(const Rational& s, LatticeVector a) { return a *= s; }

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.rank_ == b.rank_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LatticeVector& a, const LatticeVector& b) { return !(a == b); }
  /// Lexicographic on canonical coefficients.
  friend bool operator<(const LatticeVector& a, const LatticeVector& b);

  std::size_t hash() const;

private:
  int rank_ = 0;
  std::vector<Rational> coeffs_;
};

struct LatticeVectorHash {
  std::size_t operator()(const LatticeVector& v) const noexcept { return v.hash(); }
};

/// Cartan matrix of A_n and its exact inverse.
struct CartanMatrix {
  int n = 0;
  std::vector<std::vector<Rational>> entries;
  std::vector<std::vector<Rational>> inverse;
};

CartanMatrix cartan_matrix(int n);

/// k_j for 1 <= j <= n+1.
LatticeVector k_vector(int n, int j);
/// alpha_i = k_i - k_{i+1}, 1 <= i <= n.
LatticeVector simple_root(int n, int i);
/// omega_i = k_1 + ... + k_i, 1 <= i <= n.
LatticeVector fundamental_weight(int n, int i);

/// Euclidean inner product through the Gram matrix G_ij = delta_ij - 1/(n+1).
Rational inner_product(const LatticeVector& u, const LatticeVector& v);
inline Rational squared_norm(const LatticeVector& v) { return inner_product(v, v); }

/// sum_i n_i omega_i
LatticeVector weight_lattice_point(int n, std::span<const long> coefficients);
/// sum_i m_i alpha_i
LatticeVector root_lattice_point(int n, std::span<const long> coefficients);

/// All points q of A_n* with (q, q) <= radius, sorted.
std::vector<LatticeVector> enumerate_weight_lattice(int n, const Rational& radius);
/// All points q of A_n* with (q - center, q - center) <= radius, sorted.
std::vector<LatticeVector> enumerate_weight_lattice(const LatticeVector& center, const Rational& radius);

/// Squared covering radius n(n+2) / (12(n+1)) of A_n*.
Rational covering_radius_squared(int n);

} // namespace anstar

template <> struct std::hash<anstar::LatticeVector> {
  std::size_t operator()(const anstar::LatticeVector& v) const noexcept { return v.hash(); }
};

#endif // ANSTAR_LATTICE_HPP
