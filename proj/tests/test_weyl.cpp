#include "anstar/permutohedron.hpp"
#include "anstar/projection.hpp"
#include "anstar/weyl.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

using namespace anstar;

namespace {

GroupElement power(const GroupElement& g, int k) {
  GroupElement r = GroupElement::identity(g.rank());
  for (int i = 0; i < k; ++i) r = r * g;
  return r;
}

LatticeVector random_vector(int n, std::mt19937& rng) {
  std::uniform_int_distribution<long> d(-9, 9);
  std::vector<Rational> c;
  for (int j = 0; j <= n; ++j) c.push_back(Rational(d(rng), 7));
  return LatticeVector(n, c);
}

} // namespace

TEST_CASE("Coxeter presentation of W(a_n)") {
  for (int n = 2; n <= 5; ++n) {
    const GroupElement e = GroupElement::identity(n);
    for (int i = 1; i <= n; ++i) {
      CHECK(power(reflection(n, i), 2) == e);
      CHECK(reflection(n, i) != e);
      for (int j = i + 1; j <= n; ++j) {
        const int m = j == i + 1 ? 3 : 2;
        CHECK(power(reflection(n, i) * reflection(n, j), m) == e);
        CHECK(power(reflection(n, i) * reflection(n, j), 1) != e);
      }
    }
  }
}

TEST_CASE("group orders") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(static_cast<long>(weyl_group_elements(n).size()) == factorial(n + 1));
    CHECK(static_cast<long>(weyl_group_elements(n, true).size()) == 2 * factorial(n + 1));
    CHECK(coxeter_element(n).order() == n + 1);
  }
  CHECK(dynkin_flip(4).order() == 2);
}

TEST_CASE("action is a faithful isometric representation") {
  std::mt19937 rng(17);
  const auto group = weyl_group_elements(3, true);
  std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto& a = group[pick(rng)];
    const auto& b = group[pick(rng)];
    const LatticeVector v = random_vector(3, rng);
    const LatticeVector u = random_vector(3, rng);
    CHECK(act(a * b, v) == act(a, act(b, v)));
    CHECK(act(a.inverse(), act(a, v)) == v);
    CHECK(inner_product(act(a, u), act(a, v)) == inner_product(u, v));
  }
  // Distinct elements act differently on a generic vector.
  const LatticeVector generic(3, {Rational(1), Rational(2), Rational(4), Rational(8)});
  std::set<LatticeVector> images;
  for (const auto& g : group) images.insert(act(g, generic));
  CHECK(images.size() == group.size());
}

TEST_CASE("reflections, the Dynkin flip and weights") {
  for (int n = 2; n <= 5; ++n) {
    const GroupElement g = dynkin_flip(n);
    for (int i = 1; i <= n; ++i) {
      CHECK(act(g, simple_root(n, i)) == simple_root(n, n + 1 - i));
      CHECK(act(g, fundamental_weight(n, i)) == fundamental_weight(n, n + 1 - i));
      CHECK(g * reflection(n, i) * g == reflection(n, n + 1 - i));
      CHECK(act(reflection(n, i), simple_root(n, i)) == -simple_root(n, i));
      // r_i(w_j) = w_j - delta_ij alpha_i
      for (int j = 1; j <= n; ++j) {
        const LatticeVector expect = i == j ? fundamental_weight(n, j) - simple_root(n, i) : fundamental_weight(n, j);
        CHECK(act(reflection(n, i), fundamental_weight(n, j)) == expect);
      }
    }
  }
}

TEST_CASE("Dynkin flip conjugates <r1,r2,r3> onto <r2,r3,r4>") {
  const GroupElement g = dynkin_flip(4);
  const auto h1 = subgroup_elements({4, {1, 2, 3}, false});
  const auto h2 = subgroup_elements({4, {2, 3, 4}, false});
  std::set<GroupElement> conj;
  for (const auto& h : h1) conj.insert(g * h * g);
  CHECK(conj == std::set<GroupElement>(h2.begin(), h2.end()));
  CHECK(h1.size() == 24);
}

TEST_CASE("orbit-stabilizer") {
  for (int n = 2; n <= 4; ++n) {
    const auto group = weyl_group_elements(n);
    std::vector<LatticeVector> probes = {fundamental_weight(n, 1), fundamental_weight(n, 2),
                                         fundamental_weight(n, 1) + fundamental_weight(n, 2),
                                         voronoi_vertices(n)[0]};
    for (const auto& v : probes) {
      CHECK(weyl_orbit(v).size() * stabilizer(group, v).size() == group.size());
    }
  }
  // Coset counts for the subgroups listed with the 2-faces and 3-faces.
  CHECK(coset_count({4, {1, 2}, false}) == 20);
  CHECK(coset_count({4, {1, 4}, false}) == 30);
  CHECK(coset_count({4, {1, 2, 3}, false}) == 5);
  CHECK(coset_count({4, {1, 2, 4}, false}) == 10);
  CHECK(coset_count({4, {2, 3}, true}) == 20);
}

TEST_CASE("Coxeter element rotates the Coxeter plane") {
  std::mt19937 rng(23);
  for (int n = 2; n <= 7; ++n) {
    const GroupElement c = coxeter_element(n);
    const double angle = 2 * std::numbers::pi / (n + 1);
    for (int trial = 0; trial < 10; ++trial) {
      const LatticeVector v = random_vector(n, rng);
      const PlanePoint p = project(v);
      const PlanePoint q = project(act(c, v));
      CHECK(q.x == doctest::Approx(std::cos(angle) * p.x - std::sin(angle) * p.y).epsilon(1e-9));
      CHECK(q.y == doctest::Approx(std::sin(angle) * p.x + std::cos(angle) * p.y).epsilon(1e-9));
    }
    CHECK(c == parse_word(n, [n] {
            std::string w;
            for (int i = 1; i <= n; ++i) w += "r" + std::to_string(i);
            return w;
          }()));
  }
}

TEST_CASE("words") {
  CHECK(parse_word(4, "e").is_identity());
  CHECK(parse_word(4, "r1 r2 r3") == reflection(4, 1) * reflection(4, 2) * reflection(4, 3));
  CHECK(parse_word(4, "g") == dynkin_flip(4));
  CHECK_THROWS(parse_word(4, "r5"));
  CHECK_THROWS(parse_word(4, "x1"));
  // a = r1 r2 r3 moves 54321 to 25431.
  const LatticeVector v = VertexWord::parse("54321").to_vector();
  CHECK(act(parse_word(4, "r1r2r3"), v) == VertexWord::parse("25431").to_vector());
}
