#ifndef ANSTAR_PROJECTION_HPP
#define ANSTAR_PROJECTION_HPP

#include "anstar/exact_field.hpp"
#include "anstar/lattice.hpp"
#include "anstar/permutohedron.hpp"

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace anstar {

/// Comparison tolerance for all floating-point geometry.
inline constexpr double kFloatTolerance = 1e-9;

struct PlanePoint {
  double x = 0.0;
  double y = 0.0;
};

/// Ambient orthonormal coordinates of v: the Coxeter-plane pair first, then
/// the pairs for the higher harmonics, then (odd n) the alternating component.
std::vector<double> ambient_coordinates(const LatticeVector& v);

/// Orthogonal projection onto the Coxeter plane.
PlanePoint project(const LatticeVector& v);
/// The remaining n-2 ambient components.
std::vector<double> project_perp(const LatticeVector& v);

// --- Exact n = 4 geometry --------------------------------------------------
//
// A point of the Coxeter plane (or of its orthogonal complement) is stored in
// the golden frame (x, y), meaning the Euclidean point sqrt(2/5)(x, y sin 72).
// Lattice images have x, y in Q(sqrt5). The frame is a positive diagonal
// rescaling, so orientation and incidence tests can run on (x, y) directly.

struct GoldenVec2 {
  GoldenNumber x;
  GoldenNumber y;

  PlanePoint to_plane() const;
  friend GoldenVec2 operator+(const GoldenVec2& a, const GoldenVec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend GoldenVec2 operator-(const GoldenVec2& a, const GoldenVec2& b) { return {a.x - b.x, a.y - b.y}; }
  GoldenVec2 operator-() const { return {-x, -y}; }
  friend bool operator==(const GoldenVec2& a, const GoldenVec2& b) { return a.x == b.x && a.y == b.y; }
};

/// sin^2(72 deg) = (5 + sqrt5) / 8
GoldenNumber sin72_squared();

GoldenVec2 golden_parallel(const LatticeVector& v);
GoldenVec2 golden_perp(const LatticeVector& v);

/// Euclidean dot product of the points a, b given in the golden frame.
GoldenNumber golden_dot(const GoldenVec2& a, const GoldenVec2& b);
/// x_a y_b - y_a x_b; the Euclidean cross product is (2/5) sin 72 times this.
GoldenNumber golden_cross(const GoldenVec2& a, const GoldenVec2& b);
/// Sign of the turn a -> b -> c.
int golden_orientation(const GoldenVec2& a, const GoldenVec2& b, const GoldenVec2& c);

/// |pi(v)|^2 = (2/5) sum_ij c_i c_j cos(2 pi (i-j)/5), exact.
GoldenNumber projected_sq_length_exact(const LatticeVector& v);

/// Projected squared length of an edge (1/5)(k_i - k_{i+1}) of the order-5
/// permutohedron: 2 / (25 (2 + tau)).
GoldenNumber unit_edge_sq_length();

enum class TileType { ThinHexagon, ThickHexagon, ThinRhombus, ThickRhombus, DegenerateSegment };

inline constexpr std::array<TileType, 4> kTilingTileTypes = {TileType::ThinHexagon, TileType::ThickHexagon,
                                                             TileType::ThinRhombus, TileType::ThickRhombus};

std::string to_string(TileType t);
TileType tile_type_from_string(std::string_view s);

/// Projected edge length class, with sqrt(2/(2+tau))/5 as the unit.
enum class EdgeClass { Unit, Tau };

struct FaceClassification {
  TileType type = TileType::DegenerateSegment;
  /// Edge classes around the boundary cycle.
  std::vector<EdgeClass> edge_pattern;
  /// Projected vertices in the golden frame, boundary-cycle order.
  std::vector<GoldenVec2> vertices;
  /// Whether two consecutive edges project to parallel vectors.
  bool collapsed = false;
};

/// Classification from exact projected edge lengths and parallelism, checked
/// against the combinatorial rule; throws std::logic_error if they disagree.
FaceClassification classify_face_detailed(const Face& f);
TileType classify_face(const Face& f);
/// Rule on Z_5 adjacency of the block elements.
TileType classify_face_combinatorial(const Face& f);
/// Counts over all 150 two-faces of the order-5 permutohedron.
std::map<TileType, long> classify_all_faces();

/// True when the two sequences agree up to rotation and reversal.
bool same_cyclic_pattern(const std::vector<EdgeClass>& a, const std::vector<EdgeClass>& b);
std::string pattern_string(const std::vector<EdgeClass>& p);

struct DeloneTriangle {
  std::array<int, 3> corners{};
  /// Squared side lengths, ascending.
  std::array<double, 3> sq_sides{};
  std::string label;
};

struct DeloneProjection {
  int n = 0;
  /// Images of 0, omega_1, ..., omega_n.
  std::vector<PlanePoint> points;
  std::vector<DeloneTriangle> triangles;
  /// n = 4: distinct exact squared distances between projected vertices.
  std::vector<GoldenNumber> exact_sq_distance_classes;
};

DeloneProjection project_delone_simplex(int n);

} // namespace anstar

#endif // ANSTAR_PROJECTION_HPP
