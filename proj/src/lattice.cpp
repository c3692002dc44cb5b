#include "anstar/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace anstar {

namespace {

void check_rank(int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive, got " + std::to_string(n));
}

void check_same_rank(const LatticeVector& u, const LatticeVector& v) {
  if (u.rank() != v.rank()) {
    throw std::invalid_argument("rank mismatch: " + std::to_string(u.rank()) + " vs " +
                                std::to_string(v.rank()));
  }
}

// Largest integer b with b*b <= x, for x >= 0.
long isqrt_floor(const Rational& x) {
  if (x.sign() <= 0) return 0;
  mpz_class fl = x.floor();
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), fl.get_mpz_t());
  return r.get_si();
}

} // namespace

std::vector<Rational> canonicalize(std::vector<Rational> coeffs) {
  if (coeffs.empty()) return coeffs;
  Rational sum;
  for (const auto& c : coeffs) sum += c;
  if (sum.is_zero()) return coeffs;
  const Rational mean = sum / Rational(static_cast<long>(coeffs.size()));
  for (auto& c : coeffs) c -= mean;
  return coeffs;
}

LatticeVector::LatticeVector(int n) : rank_(n), coeffs_(static_cast<std::size_t>(n) + 1) { check_rank(n); }

LatticeVector::LatticeVector(int n, std::vector<Rational> coeffs) : rank_(n) {
  check_rank(n);
  if (coeffs.size() != static_cast<std::size_t>(n) + 1) {
    throw std::invalid_argument("expected " + std::to_string(n + 1) + " k-coefficients, got " +
                                std::to_string(coeffs.size()));
  }
  coeffs_ = canonicalize(std::move(coeffs));
}

bool LatticeVector::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

std::vector<Rational> LatticeVector::weight_coordinates() const {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i) out.push_back(coeffs_[i] - coeffs_[i + 1]);
  return out;
}

std::vector<Rational> LatticeVector::root_coordinates() const {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(rank_));
  Rational partial;
  for (int i = 0; i < rank_; ++i) {
    partial += coeffs_[i];
    out.push_back(partial);
  }
  return out;
}

bool LatticeVector::in_weight_lattice() const {
  auto w = weight_coordinates();
  return std::all_of(w.begin(), w.end(), [](const Rational& x) { return x.is_integer(); });
}

bool LatticeVector::in_root_lattice() const {
  auto m = root_coordinates();
  return std::all_of(m.begin(), m.end(), [](const Rational& x) { return x.is_integer(); });
}

std::string LatticeVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (j != 0) os << ", ";
    os << coeffs_[j];
  }
  os << ')';
  return os.str();
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
  check_same_rank(*this, o);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
  check_same_rank(*this, o);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
  return *this;
}

LatticeVector& LatticeVector::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

bool operator<(const LatticeVector& a, const LatticeVector& b) {
  if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
  return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(), b.coeffs_.end());
}

std::size_t LatticeVector::hash() const {
  std::size_t h = std::hash<int>{}(rank_);
  for (const auto& c : coeffs_) h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

CartanMatrix cartan_matrix(int n) {
  check_rank(n);
  CartanMatrix m;
  m.n = n;
  const auto sz = static_cast<std::size_t>(n);
  m.entries.assign(sz, std::vector<Rational>(sz));
  m.inverse.assign(sz, std::vector<Rational>(sz));
  for (int i = 0; i < n; ++i) {
    m.entries[i][i] = 2;
    if (i + 1 < n) {
      m.entries[i][i + 1] = -1;
      m.entries[i + 1][i] = -1;
    }
    // (C^-1)_ij = min(i,j) (n+1-max(i,j)) / (n+1), 1-based.
    for (int j = 0; j < n; ++j) {
      const long lo = std::min(i, j) + 1;
      const long hi = std::max(i, j) + 1;
      m.inverse[i][j] = Rational(lo * (n + 1 - hi), n + 1);
    }
  }
  return m;
}

LatticeVector k_vector(int n, int j) {
  check_rank(n);
  if (j < 1 || j > n + 1) {
    throw std::out_of_range("k-vector index " + std::to_string(j) + " outside 1.." + std::to_string(n + 1));
  }
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  c[j - 1] = 1;
  return {n, std::move(c)};
}

LatticeVector simple_root(int n, int i) {
  check_rank(n);
  if (i < 1 || i > n) throw std::out_of_range("simple root index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  return k_vector(n, i) - k_vector(n, i + 1);
}

LatticeVector fundamental_weight(int n, int i) {
  check_rank(n);
  if (i < 1 || i > n) {
    throw std::out_of_range("fundamental weight index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  }
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j < i; ++j) c[j] = 1;
  return {n, std::move(c)};
}

Rational inner_product(const LatticeVector& u, const LatticeVector& v) {
  check_same_rank(u, v);
  // sum_ij c_i d_j (delta_ij - 1/(n+1)) = c.d - (sum c)(sum d)/(n+1)
  Rational dot;
  Rational su;
  Rational sv;
  for (std::size_t j = 0; j < u.size(); ++j) {
    dot += u[j] * v[j];
    su += u[j];
    sv += v[j];
  }
  return dot - su * sv / Rational(u.rank() + 1);
}

LatticeVector weight_lattice_point(int n, std::span<const long> coefficients) {
  check_rank(n);
  if (coefficients.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("expected " + std::to_string(n) + " weight coefficients");
  }
  // omega_i has ones in the first i slots, so c_j = sum_{i >= j} n_i.
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  long tail = 0;
  for (int j = n - 1; j >= 0; --j) {
    tail += coefficients[j];
    c[j] = tail;
  }
  return {n, std::move(c)};
}

LatticeVector root_lattice_point(int n, std::span<const long> coefficients) {
  check_rank(n);
  if (coefficients.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("expected " + std::to_string(n) + " root coefficients");
  }
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) {
    c[i] += coefficients[i];
    c[i + 1] -= coefficients[i];
  }
  return {n, std::move(c)};
}

std::vector<LatticeVector> enumerate_weight_lattice(int n, const Rational& radius) {
  return enumerate_weight_lattice(LatticeVector(n), radius);
}

std::vector<LatticeVector> enumerate_weight_lattice(const LatticeVector& center, const Rational& radius) {
  const int n = center.rank();
  std::vector<LatticeVector> out;
  if (radius.sign() < 0) return out;

  // The weight Gram matrix is C^-1; Gershgorin gives lambda_max(C) <= 4, so
  // (d, C^-1 d) >= |d|^2 / 4 and every hit has |n_i - c_i| <= sqrt(4 radius).
  const long reach = isqrt_floor(Rational(4) * radius) + 1;
  const auto center_w = center.weight_coordinates();
  std::vector<long> lo(static_cast<std::size_t>(n));
  std::vector<long> hi(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const long c = center_w[i].floor().get_si();
    lo[i] = c - reach;
    hi[i] = c + reach + 1;
  }

  std::vector<long> coeff(lo);
  while (true) {
    LatticeVector q = weight_lattice_point(n, coeff);
    const LatticeVector d = q - center;
    if (inner_product(d, d) <= radius) out.push_back(std::move(q));

    int i = 0;
    while (i < n && ++coeff[i] > hi[i]) {
      coeff[i] = lo[i];
      ++i;
    }
    if (i == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational covering_radius_squared(int n) {
  check_rank(n);
  return Rational(static_cast<long>(n) * (n + 2), 12L * (n + 1));
}

} // namespace anstar
