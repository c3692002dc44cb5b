#include "anstar/permutohedron.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace anstar;

namespace {

// Number of surjections {1..m} -> {1..k}, by listing all k^m maps.
long surjections(int m, int k) {
  long count = 0;
  std::vector<int> f(static_cast<std::size_t>(m), 0);
  while (true) {
    std::vector<bool> hit(static_cast<std::size_t>(k), false);
    for (int x : f) hit[x] = true;
    count += std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    std::size_t i = 0;
    while (i < f.size() && f[i] == k - 1) f[i++] = 0;
    if (i == f.size()) break;
    ++f[i];
  }
  return count;
}

std::set<LatticeVector> as_set(const std::vector<LatticeVector>& v) { return {v.begin(), v.end()}; }

} // namespace

TEST_CASE("face census matches the surjection count") {
  for (int n = 1; n <= 5; ++n) {
    const int m = n + 1;
    const auto counts = face_counts(n);
    REQUIRE(counts.size() == static_cast<std::size_t>(n + 1));
    for (int d = 0; d <= n; ++d) {
      CHECK(counts[d] == surjections(m, m - d));
      CHECK(static_cast<long>(faces_of_dimension(n, d).size()) == counts[d]);
    }
    CHECK(euler_check(n) == expected_euler(n));
  }
  const auto c4 = face_counts(4);
  CHECK(c4 == std::vector<long>{120, 240, 150, 30, 1});
}

TEST_CASE("census rows by block type at n = 4") {
  std::map<std::vector<int>, long> rows;
  for (const auto& r : face_census(4)) rows[r.block_sizes] = r.count;
  CHECK(rows[{3, 1, 1}] == 60);
  CHECK(rows[{2, 2, 1}] == 90);
  CHECK(rows[{4, 1}] == 10);
  CHECK(rows[{3, 2}] == 20);
}

TEST_CASE("Voronoi property of the permutohedron vertices") {
  for (int n = 2; n <= 4; ++n) {
    const Rational r2 = covering_radius_squared(n);
    for (const auto& v : voronoi_vertices(n)) {
      CHECK(squared_norm(v) == r2);
      // No lattice point strictly closer than the origin.
      for (const auto& q : enumerate_weight_lattice(v, r2)) CHECK(squared_norm(v - q) == r2);
    }
  }
}

TEST_CASE("facets lie on the bisectors of their neighbours") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& f : faces_of_dimension(n, n - 1)) {
      const LatticeVector e = facet_neighbor(n, f.blocks()[0]);
      for (const auto& v : face_vertices(f)) CHECK(squared_norm(v) == squared_norm(v - e));
    }
  }
}

TEST_CASE("2-face boundary cycles") {
  for (const auto& f : faces_of_dimension(4, 2)) {
    const auto vs = face_vertices(f);
    CHECK((vs.size() == 4 || vs.size() == 6));
    for (std::size_t i = 0; i < vs.size(); ++i) {
      CHECK(squared_norm(vs[(i + 1) % vs.size()] - vs[i]) == Rational(2, 25));
    }
    LatticeVector sum(4);
    for (const auto& v : vs) sum += v;
    CHECK(sum * Rational(1, static_cast<long>(vs.size())) == face_center(f));
  }
}

TEST_CASE("vertex words") {
  const VertexWord w = VertexWord::parse("54321");
  CHECK(w.str() == "54321");
  CHECK(as_set(voronoi_vertices(4)).count(w.to_vector()) == 1);
  CHECK_THROWS(VertexWord::parse("5432"));
  CHECK_THROWS(VertexWord::parse("55321"));
  CHECK(all_vertex_words(3).size() == 24);
}

TEST_CASE("center orbits of the 2- and 3-faces") {
  const auto fams = facet_center_orbits(4);
  REQUIRE(fams.size() == 4);
  std::map<std::string, std::vector<std::size_t>> sizes;
  for (const auto& f : fams) {
    CHECK(f.matches);
    for (const auto& o : f.orbits) sizes[f.label].push_back(o.size());
  }
  CHECK(sizes["truncated octahedra"] == std::vector<std::size_t>{5, 5});
  CHECK(sizes["hexagons"] == std::vector<std::size_t>{20, 20, 20});
  CHECK(sizes["hexagonal prisms"] == std::vector<std::size_t>{10, 10});
  CHECK(sizes["squares"] == std::vector<std::size_t>{30, 30, 30});
  CHECK_THROWS(facet_center_orbits(3));
}

TEST_CASE("Delone simplices around a lattice point") {
  for (int n = 2; n <= 4; ++n) {
    const LatticeVector q = fundamental_weight(n, 1);
    const auto simplices = delone_simplices_at(q);
    CHECK(static_cast<long>(simplices.size()) == factorial(n + 1));
    std::set<LatticeVector> centers;
    for (const auto& s : simplices) {
      const auto vs = s.vertices();
      CHECK(vs.size() == static_cast<std::size_t>(n + 1));
      CHECK(std::count(vs.begin(), vs.end(), q) == 1);
      const LatticeVector c = s.center();
      for (const auto& v : vs) CHECK(squared_norm(v - c) == covering_radius_squared(n));
      centers.insert(c - q);
    }
    // Their centers are exactly the Voronoi vertices of the cell at q.
    CHECK(centers == as_set(voronoi_vertices(n)));
  }
}

TEST_CASE("dual Delone triangles of the 2-faces") {
  // Equidistance search against the closed form {t, t + e_B1, t + e_(B1 u B2)}.
  const LatticeVector t = fundamental_weight(4, 2);
  for (const auto& f : faces_of_dimension(4, 2)) {
    std::vector<int> b12 = f.blocks()[0];
    b12.insert(b12.end(), f.blocks()[1].begin(), f.blocks()[1].end());
    const std::set<LatticeVector> expect = {t, t + facet_neighbor(4, f.blocks()[0]), t + facet_neighbor(4, b12)};
    CHECK(as_set(voronoi_face_dual(t, f)) == expect);
  }
}

TEST_CASE("a 2-face seen from its three dual lattice points") {
  for (const auto& f : faces_of_dimension(4, 2)) {
    const auto& b = f.blocks();
    const Face rotated({b[1], b[2], b[0]});
    std::set<LatticeVector> shifted;
    for (const auto& v : face_vertices(rotated)) shifted.insert(v + facet_neighbor(4, b[0]));
    CHECK(shifted == as_set(face_vertices(f)));
  }
}
