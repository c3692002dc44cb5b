#ifndef ANSTAR_TILING_HPP
#define ANSTAR_TILING_HPP

#include "anstar/geometry2d.hpp"
#include "anstar/projection.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace anstar {

/// Raised when the window point (or shadow direction) sits on the boundary of
/// a projected dual cell. Retrying with a slightly perturbed value fixes it.
class NonGenericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Tile {
  TileType type = TileType::DegenerateSegment;
  /// Counter-clockwise planar vertices.
  std::vector<PlanePoint> vertices;
  /// The same vertices in the golden frame of the Coxeter plane.
  std::vector<GoldenVec2> exact_vertices;
  LatticeVector translate;
  Face face;
  /// Orthogonal-space images of the dual triangle vertices t, t + e_{B1},
  /// t + e_{B1 u B2}, in golden window coordinates.
  std::array<GoldenVec2, 3> window_triangle;
  bool boundary_incomplete = false;

  double area() const;
  PlanePoint centroid() const;
};

enum class PatchKind { CellShadow, Klotz };

struct Patch {
  PatchKind kind = PatchKind::Klotz;
  std::vector<Tile> tiles;
  /// Window shift (Klotz patches) or shadow direction w, golden window frame.
  GoldenVec2 window;
  /// Squared-norm bound on |t - center|^2 for the lattice translates.
  Rational radius;
  /// Planar output is pi(x - center).
  LatticeVector center;
  /// Tiles covering the disc of this radius about the origin are complete.
  double safe_radius = 0.0;
};

/// Parses window coordinates "x,y" (rationals or decimals).
GoldenVec2 parse_window_point(std::string_view text);
std::string window_point_str(const GoldenVec2& p);

/// Default documented generic choices.
GoldenVec2 default_shadow_direction();
GoldenVec2 default_window_shift();
/// Generic shifts used by the validity checks.
std::vector<GoldenVec2> documented_generic_shifts();

/// m p with p = (1/5)(k_1 + 2k_2 + 3k_3 + 4k_4 + 5k_5). The Coxeter element
/// fixes p modulo the lattice, so patches centered there are fivefold
/// symmetric.
LatticeVector fivefold_center(int multiple);
/// The multiple used for the symmetric preset.
int symmetric_preset_multiple();

/// Lower shadow section of the projected Voronoi cell V(0): the 2-faces whose
/// normal cone projects onto a cone containing -w.
Patch shadow_tiling_of_cell(const GoldenVec2& w);

/// Dual-window selection over lattice translates t with |t - center|^2 <=
/// radius. A 2-face is kept when gamma lies strictly inside the
/// orthogonal-space image of its dual Delone triangle. Each face appears once,
/// keyed by the dual vertex whose first block contains index 1.
Patch klotz_patch(const GoldenVec2& gamma, const Rational& radius, const LatticeVector& center);
Patch klotz_patch(const GoldenVec2& gamma, const Rational& radius);
/// The fivefold-symmetric preset: gamma = pi_perp(c), output centered at c.
Patch symmetric_patch(const Rational& radius);

struct TypeStatistics {
  long count = 0;
  double frequency = 0.0;
  long complete_count = 0;
};

/// Counts and frequencies for the four tile types, in enum order.
std::map<TileType, TypeStatistics> patch_statistics(const Patch& p);

struct ValidityReport {
  std::size_t tiles = 0;
  double total_area = 0.0;
  double max_overlap = 0.0;
  long overlapping_pairs = 0;
  long t_junctions = 0;
  long non_convex = 0;
  long foreign_types = 0;
  /// Edges inside the safe disc without a reversed partner.
  long unmatched_edges = 0;
  /// Area of the inscribed polygon of the safe disc and the part of it covered.
  double disc_area = 0.0;
  double disc_covered = 0.0;
  /// Edge lengths in units of the short class, with the exact class count.
  std::vector<GoldenNumber> edge_sq_classes;

  bool ok() const;
};

/// Overlap, T-junction, convexity, edge matching and disc coverage checks.
/// Coverage is skipped when disc_radius <= 0.
ValidityReport check_tiling(const std::vector<Tile>& tiles, double disc_radius);

/// Whether the tile set maps to itself under the planar map f, within tol.
bool tile_set_invariant(const std::vector<Tile>& tiles, PlanePoint (*f)(const PlanePoint&, double), double param,
                        double tol);

struct SymmetryReport {
  /// Rotations by multiples of 36 degrees that preserve the tile set.
  std::vector<int> rotations;
  /// Mirror axes (angles in multiples of 18 degrees) that preserve it.
  std::vector<int> mirrors;
};

/// Dihedral symmetries of order dividing 20 about the origin.
SymmetryReport dihedral_symmetries(const std::vector<Tile>& tiles, double tol);
/// Same, about the centroid of the tile set.
SymmetryReport dihedral_symmetries_about_centroid(const std::vector<Tile>& tiles, double tol);

/// Convex hull of the projected Voronoi vertices.
geom::Polygon shadow_polygon();

} // namespace anstar

#endif // ANSTAR_TILING_HPP
