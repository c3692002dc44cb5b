#ifndef ANSTAR_RENDER_HPP
#define ANSTAR_RENDER_HPP

#include "anstar/tiling.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace anstar {

struct RenderStyle {
  std::map<TileType, std::string> fill;
  std::string stroke = "#222222";
  double stroke_width = 1.5;
  /// Pixels per unit projected edge.
  double scale = 100.0;
  double margin = 20.0;
  bool color = true;
};

/// Thin rhombus red, thick rhombus blue, hexagons amber and green.
RenderStyle default_style();

/// Euclidean length of the short projected edge, sqrt(2 / (2 + tau)) / 5.
double unit_edge_length();

/// SVG 1.1 document with one polygon per tile. Output is a pure function of
/// the tiles, the style and the library version.
std::string render_svg(const std::vector<Tile>& tiles, const RenderStyle& style, const std::string& title);

/// Shortest readable form of v: the coefficient occurring most often is
/// shifted to zero, e.g. "(1/5)(-2k_4-3k_5)" or "(1/2)(k_1+k_3)".
std::string k_expression(const LatticeVector& v);

nlohmann::ordered_json tile_to_json(const Tile& t);
/// {"gamma" or "w", "radius", "center", "safe_radius", "tiles", "statistics"}.
nlohmann::ordered_json patch_to_json(const Patch& p);
nlohmann::ordered_json statistics_to_json(const Patch& p);
/// {"ThinHexagon": 5, ...}
nlohmann::ordered_json type_census_json(const Patch& p);

/// Face counts per dimension and block type; at n = 4 also the labeled
/// center orbits of the 2- and 3-faces.
nlohmann::ordered_json facets_json(int n);
std::string facets_table(int n);

} // namespace anstar

#endif // ANSTAR_RENDER_HPP
