#include "anstar/lattice.hpp"
#include "anstar/permutohedron.hpp"

#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

using namespace anstar;

namespace {

// Every A_n* point with integer weight coordinates in [-b, b]^n and squared
// norm at most r, with no pruning.
std::set<LatticeVector> brute_ball(int n, long b, const Rational& r) {
  std::set<LatticeVector> out;
  std::vector<long> c(static_cast<std::size_t>(n), -b);
  while (true) {
    const LatticeVector v = weight_lattice_point(n, c);
    if (squared_norm(v) <= r) out.insert(v);
    std::size_t i = 0;
    while (i < c.size() && c[i] == b) c[i++] = -b;
    if (i == c.size()) break;
    ++c[i];
  }
  return out;
}

} // namespace

TEST_CASE("Gram matrix of the k-vectors") {
  for (int n = 1; n <= 6; ++n) {
    for (int i = 1; i <= n + 1; ++i) {
      for (int j = 1; j <= n + 1; ++j) {
        const Rational expect = Rational(i == j ? 1 : 0) - Rational(1, n + 1);
        CHECK(inner_product(k_vector(n, i), k_vector(n, j)) == expect);
      }
    }
    LatticeVector sum(n);
    for (int i = 1; i <= n + 1; ++i) sum += k_vector(n, i);
    CHECK(sum.is_zero());
  }
}

TEST_CASE("roots and weights are dual bases") {
  for (int n = 1; n <= 6; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        CHECK(inner_product(simple_root(n, i), fundamental_weight(n, j)) == Rational(i == j ? 1 : 0));
      }
    }
  }
}

TEST_CASE("Cartan matrix inverse") {
  for (int n = 1; n <= 7; ++n) {
    const auto c = cartan_matrix(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        CHECK(c.entries[i][j] == inner_product(simple_root(n, i + 1), simple_root(n, j + 1)));
        Rational prod(0);
        for (int k = 0; k < n; ++k) prod += c.entries[i][k] * c.inverse[k][j];
        CHECK(prod == Rational(i == j ? 1 : 0));
        const int lo = std::min(i, j) + 1, hi = std::max(i, j) + 1;
        CHECK(c.inverse[i][j] == Rational(lo * (n + 1 - hi), n + 1));
        CHECK(c.inverse[i][j] == inner_product(fundamental_weight(n, i + 1), fundamental_weight(n, j + 1)));
      }
    }
  }
}

TEST_CASE("weight and root coordinates round trip") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> d(-6, 6);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<long> c(static_cast<std::size_t>(n));
      for (auto& x : c) x = d(rng);
      const LatticeVector w = weight_lattice_point(n, c);
      const auto wc = w.weight_coordinates();
      for (int i = 0; i < n; ++i) CHECK(wc[i] == Rational(c[i]));
      CHECK(w.in_weight_lattice());
      const LatticeVector r = root_lattice_point(n, c);
      const auto rc = r.root_coordinates();
      for (int i = 0; i < n; ++i) CHECK(rc[i] == Rational(c[i]));
      CHECK(r.in_root_lattice());
      CHECK(r.in_weight_lattice());
    }
    // omega_1 generates A_n* / A_n, a group of order n + 1.
    for (int k = 1; k <= n; ++k) CHECK_FALSE((fundamental_weight(n, 1) * Rational(k)).in_root_lattice());
    CHECK((fundamental_weight(n, 1) * Rational(n + 1)).in_root_lattice());
  }
}

TEST_CASE("canonical representative and ordering") {
  const LatticeVector a(2, {Rational(3), Rational(1), Rational(2)});
  const LatticeVector b(2, {Rational(1), Rational(-1), Rational(0)});
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
  CHECK(a.str() == "(1, -1, 0)");
  CHECK(inner_product(a, a) == Rational(2));
  CHECK_THROWS_AS(inner_product(a, LatticeVector(3)), std::invalid_argument);
  CHECK_THROWS_AS(k_vector(3, 5), std::out_of_range);
  CHECK_THROWS_AS(simple_root(3, 0), std::out_of_range);
}

TEST_CASE("ball enumeration matches an unpruned box search") {
  for (int n = 1; n <= 3; ++n) {
    for (const Rational r : {Rational(0), Rational(1), Rational(3), Rational(9, 2)}) {
      const auto fast = enumerate_weight_lattice(n, r);
      const auto slow = brute_ball(n, 8, r);
      CHECK(std::set<LatticeVector>(fast.begin(), fast.end()) == slow);
      CHECK(std::is_sorted(fast.begin(), fast.end()));
    }
  }
  // Shifted center.
  const LatticeVector c(2, {Rational(1, 3), Rational(0), Rational(0)});
  for (const auto& v : enumerate_weight_lattice(c, Rational(2))) CHECK(squared_norm(v - c) <= Rational(2));
  std::size_t count = 0;
  for (const auto& v : brute_ball(2, 8, Rational(8))) count += squared_norm(v - c) <= Rational(2);
  CHECK(enumerate_weight_lattice(c, Rational(2)).size() == count);
}

TEST_CASE("covering radius") {
  CHECK(covering_radius_squared(4) == Rational(2, 5));
  std::mt19937 rng(9);
  std::uniform_int_distribution<long> d(-30, 30);
  for (int n = 2; n <= 3; ++n) {
    const Rational r2 = covering_radius_squared(n);
    CHECK(r2 == Rational(n * (n + 2), 12 * (n + 1)));
    // Every sampled point has a lattice point within the covering radius.
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<Rational> c;
      for (int j = 0; j <= n; ++j) c.push_back(Rational(d(rng), 13));
      const LatticeVector x(n, c);
      CHECK_FALSE(enumerate_weight_lattice(x, r2).empty());
    }
    // A Voronoi vertex attains it: nothing strictly closer.
    const LatticeVector v = voronoi_vertices(n).front();
    for (const auto& q : enumerate_weight_lattice(v, r2)) CHECK(squared_norm(q - v) == r2);
    CHECK(enumerate_weight_lattice(v, r2).size() == static_cast<std::size_t>(n + 1));
  }
}
