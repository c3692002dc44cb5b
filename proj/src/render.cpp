#include "anstar/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace anstar {

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  std::string s = buf;
  if (s == "-0" || s.find_first_not_of("-0.") == std::string::npos) s = s.substr(s[0] == '-' ? 1 : 0);
  return s;
}

std::string sizes_str(const std::vector<int>& sizes) {
  std::string s;
  for (std::size_t i = 0; i < sizes.size(); ++i) s += (i ? "+" : "") + std::to_string(sizes[i]);
  return s;
}

std::vector<std::string> coeff_strings(const LatticeVector& v) {
  std::vector<std::string> out;
  for (const auto& c : v.coeffs()) out.push_back(c.str());
  return out;
}

} // namespace

RenderStyle default_style() {
  RenderStyle s;
  s.fill = {{TileType::ThinRhombus, "#d62728"},
            {TileType::ThickRhombus, "#1f4fb4"},
            {TileType::ThinHexagon, "#f2b134"},
            {TileType::ThickHexagon, "#3f9b5a"},
            {TileType::DegenerateSegment, "#888888"}};
  return s;
}

double unit_edge_length() { return std::sqrt(unit_edge_sq_length().to_double()); }

std::string render_svg(const std::vector<Tile>& tiles, const RenderStyle& style, const std::string& title) {
  const double px = style.scale / unit_edge_length();
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  bool first = true;
  for (const auto& t : tiles) {
    for (const auto& v : t.vertices) {
      if (first) {
        x0 = x1 = v.x;
        y0 = y1 = v.y;
        first = false;
      }
      x0 = std::min(x0, v.x);
      x1 = std::max(x1, v.x);
      y0 = std::min(y0, v.y);
      y1 = std::max(y1, v.y);
    }
  }
  const double width = (x1 - x0) * px + 2 * style.margin;
  const double height = (y1 - y0) * px + 2 * style.margin;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<!-- anstar " << ANSTAR_VERSION << " -->\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fixed(width, 2) << "\" height=\""
     << fixed(height, 2) << "\" viewBox=\"0 0 " << fixed(width, 2) << " " << fixed(height, 2) << "\">\n";
  os << "<title>" << title << "</title>\n";
  os << "<g stroke=\"" << style.stroke << "\" stroke-width=\"" << fixed(style.stroke_width, 2)
     << "\" stroke-linejoin=\"round\">\n";
  for (const auto& t : tiles) {
    os << "<polygon class=\"" << to_string(t.type) << "\" fill=\"";
    if (style.color) {
      auto it = style.fill.find(t.type);
      os << (it == style.fill.end() ? std::string("#cccccc") : it->second);
    } else {
      os << "none";
    }
    os << "\" points=\"";
    for (std::size_t i = 0; i < t.vertices.size(); ++i) {
      const double sx = (t.vertices[i].x - x0) * px + style.margin;
      const double sy = (y1 - t.vertices[i].y) * px + style.margin;
      os << (i ? " " : "") << fixed(sx, 4) << "," << fixed(sy, 4);
    }
    os << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string k_expression(const LatticeVector& v) {
  if (v.is_zero()) return "0";
  // Most frequent coefficient, ties to the smallest value.
  const auto& c = v.coeffs();
  Rational shift = c[0];
  long best = 0;
  for (const auto& x : c) {
    const long k = std::count(c.begin(), c.end(), x);
    if (k > best || (k == best && x < shift)) {
      best = k;
      shift = x;
    }
  }
  std::vector<Rational> d;
  mpz_class den = 1;
  for (const auto& x : c) {
    d.push_back(x - shift);
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.back().denominator().get_mpz_t());
  }
  std::string body;
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (d[j].is_zero()) continue;
    const Rational scaled = d[j] * Rational(mpq_class(den));
    const mpz_class num = scaled.numerator();
    std::string term;
    if (num < 0) {
      term += "-";
    } else if (!body.empty()) {
      term += "+";
    }
    const mpz_class mag = abs(num);
    if (mag != 1) term += mag.get_str();
    term += "k_" + std::to_string(j + 1);
    body += term;
  }
  if (den == 1) return body;
  return "(1/" + den.get_str() + ")(" + body + ")";
}

nlohmann::ordered_json tile_to_json(const Tile& t) {
  nlohmann::ordered_json j;
  j["type"] = to_string(t.type);
  auto verts = nlohmann::ordered_json::array();
  for (const auto& v : t.vertices) verts.push_back({std::round(v.x * 1e12) / 1e12, std::round(v.y * 1e12) / 1e12});
  j["vertices"] = verts;
  auto tr = nlohmann::ordered_json::array();
  for (const auto& w : t.translate.weight_coordinates()) tr.push_back(w.str());
  j["translate"] = tr;
  j["blocks"] = t.face.blocks();
  j["boundary_incomplete"] = t.boundary_incomplete;
  return j;
}

nlohmann::ordered_json statistics_to_json(const Patch& p) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [type, s] : patch_statistics(p)) {
    j[to_string(type)] = {{"count", s.count}, {"frequency", s.frequency}, {"complete", s.complete_count}};
  }
  return j;
}

nlohmann::ordered_json type_census_json(const Patch& p) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [type, s] : patch_statistics(p)) j[to_string(type)] = s.count;
  return j;
}

nlohmann::ordered_json patch_to_json(const Patch& p) {
  nlohmann::ordered_json j;
  const std::string window = window_point_str(p.window);
  const auto comma = window.find(',');
  j[p.kind == PatchKind::Klotz ? "gamma" : "w"] = {window.substr(0, comma), window.substr(comma + 1)};
  j["radius"] = p.radius.str();
  j["center"] = coeff_strings(p.center);
  j["safe_radius"] = std::round(p.safe_radius * 1e12) / 1e12;
  auto tiles = nlohmann::ordered_json::array();
  for (const auto& t : p.tiles) tiles.push_back(tile_to_json(t));
  j["tiles"] = tiles;
  j["statistics"] = statistics_to_json(p);
  return j;
}

nlohmann::ordered_json facets_json(int n) {
  nlohmann::ordered_json j;
  j["n"] = n;
  auto counts = face_counts(n);
  j["counts"] = counts;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : face_census(n)) {
    rows.push_back({{"dimension", r.dimension}, {"block_sizes", r.block_sizes}, {"count", r.count}});
  }
  j["census"] = rows;
  j["euler"] = {{"alternating_sum", euler_check(n)}, {"expected", expected_euler(n)}};
  if (n == 4) {
    auto fams = nlohmann::ordered_json::array();
    for (const auto& f : facet_center_orbits(4)) {
      nlohmann::ordered_json fj;
      fj["family"] = f.label;
      fj["dimension"] = f.dimension;
      fj["block_sizes"] = f.block_sizes;
      fj["face_count"] = f.face_centers.size();
      auto orbits = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < f.orbits.size(); ++i) {
        nlohmann::ordered_json oj;
        oj["generator"] = f.generator_labels[i];
        oj["size"] = f.orbits[i].size();
        auto centers = nlohmann::ordered_json::array();
        for (const auto& c : f.orbits[i]) centers.push_back({{"k", coeff_strings(c)}, {"expr", k_expression(c)}});
        oj["centers"] = centers;
        orbits.push_back(oj);
      }
      fj["orbits"] = orbits;
      fj["matches_face_centers"] = f.matches;
      fams.push_back(fj);
    }
    j["center_orbits"] = fams;
  }
  return j;
}

std::string facets_table(int n) {
  std::ostringstream os;
  os << "n = " << n << "\n";
  os << "dim  blocks        count\n";
  for (const auto& r : face_census(n)) {
    std::string b = sizes_str(r.block_sizes);
    b.resize(std::max<std::size_t>(b.size(), 12), ' ');
    os << "  " << r.dimension << "  " << b << "  " << r.count << "\n";
  }
  const auto counts = face_counts(n);
  os << "totals:";
  for (std::size_t d = 0; d < counts.size(); ++d) os << " N" << d << "=" << counts[d];
  os << "\nalternating sum over proper faces: " << euler_check(n) << " (expected " << expected_euler(n) << ")\n";
  if (n == 4) {
    for (const auto& f : facet_center_orbits(4)) {
      os << "\n" << f.label << " (" << f.face_centers.size() << " faces, block sizes " << sizes_str(f.block_sizes)
         << ")" << (f.matches ? "" : "  MISMATCH") << "\n";
      for (std::size_t i = 0; i < f.orbits.size(); ++i) {
        os << "  orbit of " << f.generator_labels[i] << ", size " << f.orbits[i].size() << "\n";
        for (const auto& c : f.orbits[i]) os << "    " << k_expression(c) << "\n";
      }
    }
  }
  return os.str();
}

} // namespace anstar
