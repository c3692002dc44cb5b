#include "anstar/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

namespace anstar {

namespace {

constexpr double kPrefilter = 1e-9;

struct FaceData {
  Face face;
  TileType type = TileType::DegenerateSegment;
  /// Counter-clockwise boundary cycle.
  std::vector<LatticeVector> vertices;
  std::vector<GoldenVec2> par;
  LatticeVector e1;  // e_{B1}
  LatticeVector e12; // e_{B1 u B2}
  GoldenVec2 a;      // pi_perp(e1)
  GoldenVec2 b;      // pi_perp(e12)
  PlanePoint fa;     // float copies, golden frame
  PlanePoint fb;
  int cone_sign = 0; // sign of cross(a, b); 0 for degenerate faces
};

PlanePoint raw(const GoldenVec2& v) { return {v.x.to_double(), v.y.to_double()}; }

LatticeVector subset_sum(const std::vector<int>& block, const std::vector<int>& more = {}) {
  std::vector<int> s = block;
  s.insert(s.end(), more.begin(), more.end());
  return facet_neighbor(4, s);
}

const std::vector<FaceData>& face_table() {
  static const std::vector<FaceData> table = [] {
    std::vector<FaceData> out;
    for (const auto& f : faces_of_dimension(4, 2)) {
      FaceData d;
      d.face = f;
      const auto cls = classify_face_detailed(f);
      d.type = cls.type;
      d.vertices = face_vertices(f);
      d.par = cls.vertices;
      GoldenNumber twice_area;
      for (std::size_t i = 0; i < d.par.size(); ++i) twice_area += golden_cross(d.par[i], d.par[(i + 1) % d.par.size()]);
      if (twice_area.sign() < 0) {
        std::reverse(d.vertices.begin(), d.vertices.end());
        std::reverse(d.par.begin(), d.par.end());
      }
      d.e1 = subset_sum(f.blocks()[0]);
      d.e12 = subset_sum(f.blocks()[0], f.blocks()[1]);
      d.a = golden_perp(d.e1);
      d.b = golden_perp(d.e12);
      d.fa = raw(d.a);
      d.fb = raw(d.b);
      d.cone_sign = golden_cross(d.a, d.b).sign();
      out.push_back(std::move(d));
    }
    return out;
  }();
  return table;
}

std::size_t face_index(const Face& f) {
  const auto& table = face_table();
  auto it = std::lower_bound(table.begin(), table.end(), f,
                             [](const FaceData& d, const Face& key) { return d.face < key; });
  return static_cast<std::size_t>(it - table.begin());
}

double frame_cross(const PlanePoint& a, const PlanePoint& b) { return a.x * b.y - a.y * b.x; }

double euclid_norm(const GoldenVec2& v) {
  const PlanePoint p = v.to_plane();
  return std::hypot(p.x, p.y);
}

/// Largest |pi_perp(e_S)| over the dual-triangle offsets.
double window_reach() {
  static const double r = [] {
    double best = 0.0;
    for (const auto& d : face_table()) best = std::max({best, euclid_norm(d.a), euclid_norm(d.b)});
    return best;
  }();
  return r;
}

/// Largest |pi(v)| over the Voronoi vertices.
double cell_reach() {
  static const double r = [] {
    double best = 0.0;
    for (const auto& v : voronoi_vertices(4)) {
      const PlanePoint p = project(v);
      best = std::max(best, std::hypot(p.x, p.y));
    }
    return best;
  }();
  return r;
}

std::string golden_key(const GoldenVec2& v) { return v.x.str() + "|" + v.y.str(); }

[[noreturn]] void non_generic(const std::string& what, const FaceData& d, const LatticeVector& t) {
  throw NonGenericError(what + " lies on the boundary of the projected dual of face " + d.face.str() +
                        " at translate " + t.str() + "; perturb it slightly and retry");
}

enum class Hit { Outside, Inside };

/// Is q strictly inside the triangle {0, a, b}? Throws on boundary contact.
Hit window_test(const GoldenVec2& q_exact, const PlanePoint& q, const FaceData& d, const LatticeVector& t) {
  if (d.cone_sign == 0) {
    // Segment-shaped dual: can only be touched, never contain q.
    const PlanePoint o{0.0, 0.0};
    double dist = std::min({geom::segment_distance(o, d.fa, q), geom::segment_distance(o, d.fb, q),
                            geom::segment_distance(d.fa, d.fb, q)});
    if (dist > kPrefilter) return Hit::Outside;
    const GoldenVec2 zero{};
    for (const auto& [p, r] : {std::pair{zero, d.a}, std::pair{zero, d.b}, std::pair{d.a, d.b}}) {
      if (!golden_cross(r - p, q_exact - p).is_zero()) continue;
      const GoldenNumber s1 = golden_dot(q_exact - p, r - p);
      const GoldenNumber s2 = golden_dot(q_exact - r, p - r);
      if (s1.sign() >= 0 && s2.sign() >= 0) non_generic("window point", d, t);
    }
    return Hit::Outside;
  }
  const double s = d.cone_sign;
  const double e1 = s * frame_cross(d.fa, q);
  const double e2 = s * frame_cross(q, d.fb);
  const double e3 = s * frame_cross({d.fb.x - d.fa.x, d.fb.y - d.fa.y}, {q.x - d.fa.x, q.y - d.fa.y});
  if (e1 < -kPrefilter || e2 < -kPrefilter || e3 < -kPrefilter) return Hit::Outside;
  if (e1 > kPrefilter && e2 > kPrefilter && e3 > kPrefilter) return Hit::Inside;

  const int x1 = d.cone_sign * golden_cross(d.a, q_exact).sign();
  const int x2 = d.cone_sign * golden_cross(q_exact, d.b).sign();
  const int x3 = d.cone_sign * golden_cross(d.b - d.a, q_exact - d.a).sign();
  if (x1 < 0 || x2 < 0 || x3 < 0) return Hit::Outside;
  if (x1 == 0 || x2 == 0 || x3 == 0) non_generic("window point", d, t);
  return Hit::Inside;
}

Tile make_tile(const FaceData& d, const LatticeVector& t, const LatticeVector& center) {
  Tile tile;
  tile.type = d.type;
  tile.translate = t;
  tile.face = d.face;
  const GoldenVec2 shift = golden_parallel(t - center);
  for (const auto& v : d.par) {
    tile.exact_vertices.push_back(v + shift);
    tile.vertices.push_back(tile.exact_vertices.back().to_plane());
  }
  const GoldenVec2 base = golden_perp(t);
  tile.window_triangle = {base, base + d.a, base + d.b};
  return tile;
}

/// The representation of the face with dual vertex t whose first block holds 1.
std::pair<LatticeVector, std::size_t> canonical_rep(const LatticeVector& t, const FaceData& d) {
  const auto& blocks = d.face.blocks();
  auto holds_one = [](const std::vector<int>& b) { return std::find(b.begin(), b.end(), 1) != b.end(); };
  if (holds_one(blocks[0])) return {t, face_index(d.face)};
  if (holds_one(blocks[1])) return {t + d.e1, face_index(Face({blocks[1], blocks[2], blocks[0]}))};
  return {t + d.e12, face_index(Face({blocks[2], blocks[0], blocks[1]}))};
}

} // namespace

double Tile::area() const { return geom::signed_area(vertices); }

PlanePoint Tile::centroid() const {
  PlanePoint c;
  for (const auto& v : vertices) {
    c.x += v.x;
    c.y += v.y;
  }
  const double k = static_cast<double>(vertices.size());
  return {c.x / k, c.y / k};
}

GoldenVec2 parse_window_point(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
    throw std::invalid_argument("expected window coordinates as x,y but got '" + std::string(text) + "'");
  }
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  return {GoldenNumber(Rational::parse(trim(text.substr(0, comma)))),
          GoldenNumber(Rational::parse(trim(text.substr(comma + 1))))};
}

std::string window_point_str(const GoldenVec2& p) {
  auto one = [](const GoldenNumber& g) { return g.sqrt5_part().is_zero() ? g.rational_part().str() : g.str(); };
  return one(p.x) + "," + one(p.y);
}

GoldenVec2 default_shadow_direction() { return {GoldenNumber(1), GoldenNumber(Rational(1, 5))}; }

GoldenVec2 default_window_shift() { return {GoldenNumber(Rational(1, 7)), GoldenNumber(Rational(1, 11))}; }

std::vector<GoldenVec2> documented_generic_shifts() {
  return {default_window_shift(),
          {GoldenNumber(Rational(-2, 9)), GoldenNumber(Rational(1, 13))},
          {GoldenNumber(Rational(3, 17)), GoldenNumber(Rational(-5, 19))}};
}

LatticeVector fivefold_center(int multiple) {
  std::vector<Rational> c;
  for (int j = 1; j <= 5; ++j) c.push_back(Rational(multiple * j, 5));
  return LatticeVector(4, c);
}

int symmetric_preset_multiple() { return 1; }

Patch shadow_tiling_of_cell(const GoldenVec2& w) {
  if (w.x.is_zero() && w.y.is_zero()) throw std::invalid_argument("shadow direction must be nonzero");
  const GoldenVec2 target = -w;
  for (const auto& d : face_table()) {
    for (const auto& ray : {d.a, d.b}) {
      if (golden_cross(ray, target).is_zero() && golden_dot(ray, target).sign() > 0) {
        throw NonGenericError("direction w = " + window_point_str(w) +
                              " is degenerate: -w lies on a boundary ray of the projected normal cone of " +
                              d.face.str() + "; perturb it slightly and retry");
      }
    }
  }
  Patch p;
  p.kind = PatchKind::CellShadow;
  p.window = w;
  p.radius = Rational(0);
  p.center = LatticeVector(4);
  const LatticeVector origin(4);
  for (const auto& d : face_table()) {
    if (d.cone_sign == 0) continue;
    if (d.cone_sign * golden_cross(d.a, target).sign() > 0 && d.cone_sign * golden_cross(target, d.b).sign() > 0) {
      p.tiles.push_back(make_tile(d, origin, origin));
    }
  }
  double reach = 0.0;
  for (const auto& t : p.tiles) {
    for (const auto& v : t.vertices) reach = std::max(reach, std::hypot(v.x, v.y));
  }
  p.safe_radius = reach;
  return p;
}

Patch klotz_patch(const GoldenVec2& gamma, const Rational& radius, const LatticeVector& center) {
  if (radius.sign() < 0) throw std::invalid_argument("patch radius must be nonnegative");
  if (center.rank() != 4) throw std::invalid_argument("klotz_patch is defined for n = 4");
  const auto& table = face_table();
  const PlanePoint gf = raw(gamma);
  const double reach = window_reach();
  // Frame-coordinate bound: |v|_frame <= |v|_euclid / (sqrt(2/5) sin 72).
  const double frame_reach = reach / (std::sqrt(0.4) * std::sin(0.4 * std::numbers::pi)) + 1e-6;

  std::set<std::pair<LatticeVector, std::size_t>> candidates;
  for (const auto& t : enumerate_weight_lattice(center, radius)) {
    const PlanePoint tp = raw(golden_perp(t));
    if (std::hypot(gf.x - tp.x, gf.y - tp.y) > frame_reach) continue;
    for (const auto& d : table) candidates.insert(canonical_rep(t, d));
  }

  Patch p;
  p.kind = PatchKind::Klotz;
  p.window = gamma;
  p.radius = radius;
  p.center = center;
  for (const auto& [t, idx] : candidates) {
    const FaceData& d = table[idx];
    const GoldenVec2 tperp = golden_perp(t);
    const PlanePoint tp = raw(tperp);
    const PlanePoint q{gf.x - tp.x, gf.y - tp.y};
    if (std::hypot(q.x, q.y) > frame_reach) continue;
    const GoldenVec2 q_exact = gamma - tperp;
    if (window_test(q_exact, q, d, t) != Hit::Inside) continue;
    if (d.type == TileType::DegenerateSegment) {
      throw std::logic_error("degenerate face " + d.face.str() + " selected by the window");
    }
    p.tiles.push_back(make_tile(d, t, center));
  }

  const double delta = euclid_norm(gamma - golden_perp(center));
  const double slack = radius.to_double() - (reach + delta) * (reach + delta);
  p.safe_radius = slack > 0 ? std::max(0.0, std::sqrt(slack) - cell_reach()) : 0.0;
  for (auto& tile : p.tiles) {
    for (const auto& v : tile.vertices) {
      if (std::hypot(v.x, v.y) > p.safe_radius) tile.boundary_incomplete = true;
    }
  }
  return p;
}

Patch klotz_patch(const GoldenVec2& gamma, const Rational& radius) {
  return klotz_patch(gamma, radius, LatticeVector(4));
}

Patch symmetric_patch(const Rational& radius) {
  const LatticeVector c = fivefold_center(symmetric_preset_multiple());
  return klotz_patch(golden_perp(c), radius, c);
}

std::map<TileType, TypeStatistics> patch_statistics(const Patch& p) {
  std::map<TileType, TypeStatistics> out;
  for (TileType t : kTilingTileTypes) out[t] = {};
  for (const auto& tile : p.tiles) {
    auto& s = out[tile.type];
    ++s.count;
    if (!tile.boundary_incomplete) ++s.complete_count;
  }
  if (!p.tiles.empty()) {
    for (auto& [type, s] : out) s.frequency = static_cast<double>(s.count) / static_cast<double>(p.tiles.size());
  }
  return out;
}

bool ValidityReport::ok() const {
  if (foreign_types || non_convex || overlapping_pairs || t_junctions || unmatched_edges) return false;
  if (std::abs(disc_area - disc_covered) >= 1e-9) return false;
  if (edge_sq_classes.size() > 2) return false;
  if (edge_sq_classes.size() == 2) {
    const GoldenNumber tau = GoldenNumber::tau();
    if (edge_sq_classes[1] / edge_sq_classes[0] != tau * tau) return false;
  }
  return true;
}

ValidityReport check_tiling(const std::vector<Tile>& tiles, double disc_radius) {
  ValidityReport r;
  r.tiles = tiles.size();

  struct Box {
    double x0, y0, x1, y1;
  };
  std::vector<Box> boxes;
  std::set<GoldenNumber> classes;
  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& t : tiles) {
    if (std::find(kTilingTileTypes.begin(), kTilingTileTypes.end(), t.type) == kTilingTileTypes.end()) ++r.foreign_types;
    const std::size_t k = t.exact_vertices.size();
    bool convex = k >= 3;
    for (std::size_t i = 0; i < k && convex; ++i) {
      const auto& a = t.exact_vertices[i];
      const auto& b = t.exact_vertices[(i + 1) % k];
      const auto& c = t.exact_vertices[(i + 2) % k];
      if (golden_orientation(a, b, c) <= 0) convex = false;
    }
    if (!convex) ++r.non_convex;
    for (std::size_t i = 0; i < k; ++i) {
      const GoldenVec2 e = t.exact_vertices[(i + 1) % k] - t.exact_vertices[i];
      classes.insert(golden_dot(e, e));
      edges.insert({golden_key(t.exact_vertices[i]), golden_key(t.exact_vertices[(i + 1) % k])});
    }
    r.total_area += t.area();
    Box b{1e300, 1e300, -1e300, -1e300};
    for (const auto& v : t.vertices) {
      b.x0 = std::min(b.x0, v.x);
      b.y0 = std::min(b.y0, v.y);
      b.x1 = std::max(b.x1, v.x);
      b.y1 = std::max(b.y1, v.y);
    }
    boxes.push_back(b);
  }
  r.edge_sq_classes.assign(classes.begin(), classes.end());

  for (std::size_t i = 0; i < tiles.size(); ++i) {
    for (std::size_t j = 0; j < tiles.size(); ++j) {
      if (i == j) continue;
      const Box& a = boxes[i];
      const Box& b = boxes[j];
      if (a.x1 < b.x0 - 1e-9 || b.x1 < a.x0 - 1e-9 || a.y1 < b.y0 - 1e-9 || b.y1 < a.y0 - 1e-9) continue;
      if (i < j) {
        const double area = geom::intersection_area(tiles[i].vertices, tiles[j].vertices);
        r.max_overlap = std::max(r.max_overlap, area);
        if (area >= 1e-12) ++r.overlapping_pairs;
      }
      // T-junctions: a vertex of tile i in the relative interior of an edge of tile j.
      const auto& vs = tiles[j].vertices;
      for (const auto& v : tiles[i].vertices) {
        for (std::size_t e = 0; e < vs.size(); ++e) {
          const PlanePoint& p = vs[e];
          const PlanePoint& q = vs[(e + 1) % vs.size()];
          if (geom::segment_distance(p, q, v) < kFloatTolerance && geom::distance(p, v) > kFloatTolerance &&
              geom::distance(q, v) > kFloatTolerance) {
            ++r.t_junctions;
          }
        }
      }
    }
  }

  if (disc_radius > 0) {
    for (const auto& t : tiles) {
      const std::size_t k = t.vertices.size();
      for (std::size_t i = 0; i < k; ++i) {
        const PlanePoint& a = t.vertices[i];
        const PlanePoint& b = t.vertices[(i + 1) % k];
        if (std::hypot(a.x, a.y) >= disc_radius || std::hypot(b.x, b.y) >= disc_radius) continue;
        if (!edges.count({golden_key(t.exact_vertices[(i + 1) % k]), golden_key(t.exact_vertices[i])})) {
          ++r.unmatched_edges;
        }
      }
    }
    geom::Polygon disc;
    constexpr int kSides = 256;
    for (int i = 0; i < kSides; ++i) {
      const double a = 2.0 * std::numbers::pi * i / kSides;
      disc.push_back({disc_radius * std::cos(a), disc_radius * std::sin(a)});
    }
    r.disc_area = geom::signed_area(disc);
    for (std::size_t i = 0; i < tiles.size(); ++i) {
      const Box& b = boxes[i];
      if (b.x0 > disc_radius || b.x1 < -disc_radius || b.y0 > disc_radius || b.y1 < -disc_radius) continue;
      r.disc_covered += geom::intersection_area(tiles[i].vertices, disc);
    }
  }
  return r;
}

bool tile_set_invariant(const std::vector<Tile>& tiles, PlanePoint (*f)(const PlanePoint&, double), double param,
                        double tol) {
  std::vector<std::pair<PlanePoint, const Tile*>> index;
  for (const auto& t : tiles) index.push_back({t.centroid(), &t});
  std::sort(index.begin(), index.end(), [](const auto& a, const auto& b) { return a.first.x < b.first.x; });

  for (const auto& t : tiles) {
    std::vector<PlanePoint> image;
    for (const auto& v : t.vertices) image.push_back(f(v, param));
    PlanePoint c;
    for (const auto& v : image) {
      c.x += v.x / static_cast<double>(image.size());
      c.y += v.y / static_cast<double>(image.size());
    }
    auto lo = std::lower_bound(index.begin(), index.end(), c.x - tol,
                               [](const auto& e, double x) { return e.first.x < x; });
    bool found = false;
    for (auto it = lo; it != index.end() && it->first.x <= c.x + tol && !found; ++it) {
      const Tile& u = *it->second;
      if (u.type != t.type || std::abs(it->first.y - c.y) > tol || u.vertices.size() != image.size()) continue;
      found = std::all_of(image.begin(), image.end(), [&](const PlanePoint& v) {
        return std::any_of(u.vertices.begin(), u.vertices.end(),
                           [&](const PlanePoint& w) { return geom::distance(v, w) <= tol; });
      });
    }
    if (!found) return false;
  }
  return true;
}

SymmetryReport dihedral_symmetries(const std::vector<Tile>& tiles, double tol) {
  SymmetryReport out;
  for (int k = 1; k < 10; ++k) {
    if (tile_set_invariant(tiles, geom::rotate, k * std::numbers::pi / 5, tol)) out.rotations.push_back(k);
  }
  for (int k = 0; k < 10; ++k) {
    if (tile_set_invariant(tiles, geom::reflect, k * std::numbers::pi / 10, tol)) out.mirrors.push_back(k);
  }
  return out;
}

SymmetryReport dihedral_symmetries_about_centroid(const std::vector<Tile>& tiles, double tol) {
  double area = 0.0;
  PlanePoint c;
  for (const auto& t : tiles) {
    const double a = t.area();
    const PlanePoint m = t.centroid();
    area += a;
    c.x += a * m.x;
    c.y += a * m.y;
  }
  if (area <= 0) return dihedral_symmetries(tiles, tol);
  c = {c.x / area, c.y / area};
  std::vector<Tile> shifted = tiles;
  for (auto& t : shifted) {
    for (auto& v : t.vertices) v = {v.x - c.x, v.y - c.y};
  }
  return dihedral_symmetries(shifted, tol);
}

geom::Polygon shadow_polygon() {
  std::vector<PlanePoint> pts;
  for (const auto& v : voronoi_vertices(4)) pts.push_back(project(v));
  return geom::convex_hull(pts);
}

} // namespace anstar
