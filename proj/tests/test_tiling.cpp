#include "anstar/render.hpp"
#include "anstar/tiling.hpp"

#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <set>

using namespace anstar;

namespace {

// Window coordinates of the direction at angle theta (degrees) in the
// orthogonal plane, rounded to a rational.
GoldenVec2 direction(double degrees) {
  const double t = degrees * std::numbers::pi / 180;
  const double sx = std::sqrt(0.4);
  const double sy = sx * std::sin(0.4 * std::numbers::pi);
  auto dec = [](double v) { return Rational::parse(std::to_string(std::round(v * 1e6) / 1e6)); };
  return {GoldenNumber(dec(std::cos(t) / sx)), GoldenNumber(dec(std::sin(t) / sy))};
}

std::map<TileType, long> census(const Patch& p) {
  std::map<TileType, long> out;
  for (const auto& t : p.tiles) ++out[t.type];
  return out;
}

// Key of a tile by its rounded vertex set.
std::string shape_key(const Tile& t, double dx = 0, double dy = 0) {
  std::set<std::pair<long, long>> pts;
  for (const auto& v : t.vertices) pts.insert({std::lround((v.x + dx) * 1e7), std::lround((v.y + dy) * 1e7)});
  std::string s = to_string(t.type);
  for (const auto& [x, y] : pts) s += ":" + std::to_string(x) + "," + std::to_string(y);
  return s;
}

} // namespace

TEST_CASE("shadow tiling of the projected cell") {
  const auto hull = shadow_polygon();
  CHECK(hull.size() == 10);
  const double hull_area = geom::signed_area(hull);
  for (int k = 0; k < 10; ++k) {
    const Patch p = shadow_tiling_of_cell(direction(36.0 * k + 11.0));
    CHECK(p.tiles.size() == 20);
    for (TileType t : kTilingTileTypes) CHECK(census(p)[t] == 5);
    const auto r = check_tiling(p.tiles, 0);
    CHECK(r.ok());
    CHECK(r.max_overlap < 1e-12);
    CHECK(std::abs(r.total_area - hull_area) < 1e-9);
    const auto sym = dihedral_symmetries(p.tiles, 1e-9);
    CHECK(sym.rotations.empty());
    CHECK(sym.mirrors.size() == 1);
  }
}

TEST_CASE("shadow tiling rejects degenerate directions") {
  const GoldenVec2 ray = golden_perp(k_vector(4, 1));
  CHECK_THROWS_AS(shadow_tiling_of_cell(-ray), NonGenericError);
  // e_S for S = {2,3,4,5} is a negative multiple of k_1, so +ray is a boundary ray too.
  CHECK_THROWS_AS(shadow_tiling_of_cell(ray), NonGenericError);
  const GoldenVec2 nudge = golden_perp(k_vector(4, 2));
  const GoldenVec2 nearby{ray.x + nudge.x * GoldenNumber(Rational(1, 100)), ray.y + nudge.y * GoldenNumber(Rational(1, 100))};
  CHECK(shadow_tiling_of_cell(nearby).tiles.size() == 20);
  CHECK_THROWS_AS(shadow_tiling_of_cell(GoldenVec2{}), std::invalid_argument);
}

TEST_CASE("Klotz patches are valid tilings") {
  for (const auto& g : documented_generic_shifts()) {
    const Patch p = klotz_patch(g, Rational(4));
    CHECK(p.safe_radius > 0.9);
    const auto r = check_tiling(p.tiles, p.safe_radius);
    CHECK(r.foreign_types == 0);
    CHECK(r.non_convex == 0);
    CHECK(r.overlapping_pairs == 0);
    CHECK(r.t_junctions == 0);
    CHECK(r.unmatched_edges == 0);
    CHECK(std::abs(r.disc_covered - r.disc_area) < 1e-9);
    CHECK(r.edge_sq_classes.size() == 2);
    CHECK(r.ok());
    for (const auto& t : p.tiles) {
      // The recorded dual triangle contains gamma.
      const auto& w = t.window_triangle;
      const int s = golden_orientation(w[0], w[1], w[2]);
      CHECK(s != 0);
      CHECK(golden_orientation(w[0], w[1], g) == s);
      CHECK(golden_orientation(w[1], w[2], g) == s);
      CHECK(golden_orientation(w[2], w[0], g) == s);
    }
  }
}

TEST_CASE("Klotz selection matches a float brute force over all faces") {
  const GoldenVec2 g = documented_generic_shifts()[1];
  const PlanePoint gp{g.x.to_double(), g.y.to_double()};
  const Rational radius(3);
  std::set<std::string> brute;
  for (const auto& t : enumerate_weight_lattice(4, radius)) {
    for (const auto& f : faces_of_dimension(4, 2)) {
      std::vector<int> b12 = f.blocks()[0];
      b12.insert(b12.end(), f.blocks()[1].begin(), f.blocks()[1].end());
      const GoldenVec2 w0 = golden_perp(t);
      const GoldenVec2 w1 = golden_perp(t + facet_neighbor(4, f.blocks()[0]));
      const GoldenVec2 w2 = golden_perp(t + facet_neighbor(4, b12));
      const PlanePoint a{w0.x.to_double(), w0.y.to_double()};
      const PlanePoint b{w1.x.to_double(), w1.y.to_double()};
      const PlanePoint c{w2.x.to_double(), w2.y.to_double()};
      const double d1 = geom::cross(a, b, gp), d2 = geom::cross(b, c, gp), d3 = geom::cross(c, a, gp);
      if (!((d1 > 0 && d2 > 0 && d3 > 0) || (d1 < 0 && d2 < 0 && d3 < 0))) continue;
      Tile tile;
      tile.type = classify_face(f);
      for (const auto& v : face_vertices(f)) tile.vertices.push_back(project(t + v));
      brute.insert(shape_key(tile));
    }
  }
  std::set<std::string> fast;
  for (const auto& t : klotz_patch(g, radius).tiles) fast.insert(shape_key(t));
  CHECK(fast == brute);
}

TEST_CASE("Klotz patches are periodic in the window") {
  const GoldenVec2 g = default_window_shift();
  for (const LatticeVector& q : {fundamental_weight(4, 1), fundamental_weight(4, 2) - fundamental_weight(4, 4)}) {
    const Patch a = klotz_patch(g, Rational(6));
    const Patch b = klotz_patch(g + golden_perp(q), Rational(14));
    const PlanePoint shift = project(q);
    std::set<std::string> ka, kb;
    for (const auto& t : a.tiles) {
      if (!t.boundary_incomplete) ka.insert(shape_key(t));
    }
    for (const auto& t : b.tiles) kb.insert(shape_key(t, -shift.x, -shift.y));
    CHECK(!ka.empty());
    for (const auto& k : ka) CHECK(kb.count(k) == 1);
    // Recentering the ball on q reproduces the patch exactly.
    const Patch c = klotz_patch(g + golden_perp(q), Rational(6), q);
    REQUIRE(c.tiles.size() == a.tiles.size());
    for (std::size_t i = 0; i < a.tiles.size(); ++i) CHECK(shape_key(c.tiles[i]) == shape_key(a.tiles[i]));
  }
}

TEST_CASE("fivefold symmetric preset") {
  const Patch p = symmetric_patch(Rational(4));
  CHECK(p.tiles.size() % 5 == 0);
  for (int k = 1; k < 5; ++k) CHECK(tile_set_invariant(p.tiles, geom::rotate, 2 * std::numbers::pi * k / 5, 1e-6));
  CHECK(check_tiling(p.tiles, p.safe_radius).ok());
  // Each multiple of the fivefold point is fixed by the Coxeter element
  // modulo the lattice.
  const GroupElement c = coxeter_element(4);
  for (int m = 1; m <= 4; ++m) {
    const LatticeVector x = fivefold_center(m);
    CHECK((act(c, x) - x).in_weight_lattice());
    CHECK_FALSE(x.in_weight_lattice());
  }
  CHECK((act(c, fivefold_center(1)) - fivefold_center(1)) == k_vector(4, 1));
}

TEST_CASE("non-generic window shifts are reported") {
  try {
    klotz_patch(GoldenVec2{}, Rational(1));
    FAIL("expected NonGenericError");
  } catch (const NonGenericError& e) {
    CHECK(std::string(e.what()).find("face {") != std::string::npos);
    CHECK(std::string(e.what()).find("perturb") != std::string::npos);
  }
  // A point on an edge of a projected dual triangle.
  const GoldenVec2 a = golden_perp(k_vector(4, 1));
  const GoldenVec2 mid{a.x * GoldenNumber(Rational(1, 2)), a.y * GoldenNumber(Rational(1, 2))};
  CHECK_THROWS_AS(klotz_patch(mid, Rational(2)), NonGenericError);
  CHECK_THROWS_AS(klotz_patch(default_window_shift(), Rational(-1)), std::invalid_argument);
}

TEST_CASE("radius zero keeps the faces of the single cell") {
  const Patch p = klotz_patch(default_window_shift(), Rational(0));
  CHECK(!p.tiles.empty());
  const LatticeVector origin(4);
  for (const auto& t : p.tiles) {
    // The origin is a vertex of the dual triangle of each selected face.
    std::vector<int> b12 = t.face.blocks()[0];
    b12.insert(b12.end(), t.face.blocks()[1].begin(), t.face.blocks()[1].end());
    const std::set<LatticeVector> dual = {t.translate, t.translate + facet_neighbor(4, t.face.blocks()[0]),
                                          t.translate + facet_neighbor(4, b12)};
    CHECK(dual.count(origin) == 1);
  }
  CHECK(check_tiling(p.tiles, 0).ok());
}

TEST_CASE("patch statistics") {
  Patch empty;
  for (const auto& [type, s] : patch_statistics(empty)) {
    CHECK(s.count == 0);
    CHECK(s.frequency == 0.0);
  }
  const Patch cell = shadow_tiling_of_cell(default_shadow_direction());
  for (const auto& [type, s] : patch_statistics(cell)) CHECK(s.frequency == doctest::Approx(0.25));
  const Patch p = klotz_patch(default_window_shift(), Rational(5));
  double total = 0.0;
  for (const auto& [type, s] : patch_statistics(p)) total += s.frequency;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(patch_statistics(p).count(TileType::DegenerateSegment) == 0);
}

TEST_CASE("safe radius grows with the ball and output order is canonical") {
  const Patch a = klotz_patch(default_window_shift(), Rational(4));
  const Patch b = klotz_patch(default_window_shift(), Rational(8));
  CHECK(b.safe_radius > a.safe_radius);
  CHECK(b.tiles.size() > a.tiles.size());
  for (std::size_t i = 1; i < b.tiles.size(); ++i) {
    const auto& x = b.tiles[i - 1];
    const auto& y = b.tiles[i];
    CHECK((x.translate < y.translate || (x.translate == y.translate && x.face < y.face)));
  }
  CHECK(patch_to_json(a).dump() == patch_to_json(klotz_patch(default_window_shift(), Rational(4))).dump());
}

TEST_CASE("window coordinates") {
  const GoldenVec2 g = parse_window_point(" 1/7 , 0.25 ");
  CHECK(g.x == GoldenNumber(Rational(1, 7)));
  CHECK(g.y == GoldenNumber(Rational(1, 4)));
  CHECK(window_point_str(g) == "1/7,1/4");
  CHECK_THROWS_AS(parse_window_point("1/7"), std::invalid_argument);
  CHECK_THROWS_AS(parse_window_point("1,2,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_window_point("a,b"), std::invalid_argument);
}

TEST_CASE("planar geometry helpers") {
  const geom::Polygon sq = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const geom::Polygon shifted = {{0.5, 0.5}, {1.5, 0.5}, {1.5, 1.5}, {0.5, 1.5}};
  CHECK(geom::signed_area(sq) == doctest::Approx(1.0));
  CHECK(geom::intersection_area(sq, shifted) == doctest::Approx(0.25));
  CHECK(geom::intersection_area(sq, {{1, 0}, {2, 0}, {2, 1}, {1, 1}}) == doctest::Approx(0.0));
  CHECK(geom::convex_hull({{0, 0}, {1, 0}, {0.5, 0.2}, {1, 1}, {0, 1}, {0.5, 1}}).size() == 4);
  CHECK(geom::contains(sq, {0.5, 0.5}, 1e-12));
  CHECK_FALSE(geom::contains_strictly(sq, {1.0, 0.5}, 1e-12));
  const PlanePoint r = geom::reflect({1, 0}, std::numbers::pi / 4);
  CHECK(r.x == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(r.y == doctest::Approx(1.0));
}
