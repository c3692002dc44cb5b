#include "anstar/projection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace anstar {

namespace {

void require_rank4(const LatticeVector& v, const char* what) {
  if (v.rank() != 4) throw std::invalid_argument(std::string(what) + " is exact only for n = 4");
}

GoldenNumber g(long a_num, long a_den, long b_num, long b_den) {
  return {Rational(a_num, a_den), Rational(b_num, b_den)};
}

// cos(2 pi j / 5) and sin(2 pi j / 5) / sin 72 for j = 1..5.
const std::array<GoldenNumber, 5>& par_cos() {
  static const std::array<GoldenNumber, 5> t = {g(-1, 4, 1, 4), g(-1, 4, -1, 4), g(-1, 4, -1, 4), g(-1, 4, 1, 4),
                                                GoldenNumber(1)};
  return t;
}
const std::array<GoldenNumber, 5>& par_sin() {
  static const std::array<GoldenNumber, 5> t = {GoldenNumber(1), g(-1, 2, 1, 2), g(1, 2, -1, 2), GoldenNumber(-1),
                                                GoldenNumber(0)};
  return t;
}
// cos(4 pi j / 5) and sin(4 pi j / 5) / sin 72 for j = 1..5.
const std::array<GoldenNumber, 5>& perp_cos() {
  static const std::array<GoldenNumber, 5> t = {g(-1, 4, -1, 4), g(-1, 4, 1, 4), g(-1, 4, 1, 4), g(-1, 4, -1, 4),
                                                GoldenNumber(1)};
  return t;
}
const std::array<GoldenNumber, 5>& perp_sin() {
  static const std::array<GoldenNumber, 5> t = {g(-1, 2, 1, 2), GoldenNumber(-1), GoldenNumber(1), g(1, 2, -1, 2),
                                                GoldenNumber(0)};
  return t;
}

GoldenVec2 golden_image(const LatticeVector& v, const std::array<GoldenNumber, 5>& cs,
                        const std::array<GoldenNumber, 5>& sn) {
  GoldenVec2 out;
  for (std::size_t j = 0; j < 5; ++j) {
    if (v[j].is_zero()) continue;
    out.x += cs[j] * GoldenNumber(v[j]);
    out.y += sn[j] * GoldenNumber(v[j]);
  }
  return out;
}

bool adjacent_mod5(int i, int j) {
  const int d = ((i - j) % 5 + 5) % 5;
  return d == 1 || d == 4;
}

} // namespace

std::vector<double> ambient_coordinates(const LatticeVector& v) {
  const int n = v.rank();
  const int m = n + 1;
  const double pref = std::sqrt(2.0 / m);
  std::vector<double> c(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) c[j] = v[j].to_double();

  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int h = 1; 2 * h <= n; ++h) {
    double cx = 0.0;
    double cy = 0.0;
    for (int j = 1; j <= m; ++j) {
      const double theta = 2.0 * std::numbers::pi * h * j / m;
      cx += c[j - 1] * std::cos(theta);
      cy += c[j - 1] * std::sin(theta);
    }
    out.push_back(pref * cx);
    out.push_back(pref * cy);
  }
  if (n % 2 == 1) {
    double alt = 0.0;
    for (int j = 1; j <= m; ++j) alt += (j % 2 == 0 ? 1.0 : -1.0) * c[j - 1];
    out.push_back(pref * alt / std::numbers::sqrt2);
  }
  return out;
}

PlanePoint project(const LatticeVector& v) {
  const int m = v.rank() + 1;
  const double pref = std::sqrt(2.0 / m);
  double x = 0.0;
  double y = 0.0;
  for (int j = 1; j <= m; ++j) {
    const double c = v[j - 1].to_double();
    if (c == 0.0) continue;
    const double theta = 2.0 * std::numbers::pi * j / m;
    x += c * std::cos(theta);
    y += c * std::sin(theta);
  }
  return {pref * x, pref * y};
}

std::vector<double> project_perp(const LatticeVector& v) {
  auto all = ambient_coordinates(v);
  all.erase(all.begin(), all.begin() + std::min<std::ptrdiff_t>(2, static_cast<std::ptrdiff_t>(all.size())));
  return all;
}

GoldenNumber sin72_squared() { return {Rational(5, 8), Rational(1, 8)}; }

PlanePoint GoldenVec2::to_plane() const {
  static const double scale = std::sqrt(0.4);
  static const double sin72 = std::sin(0.4 * std::numbers::pi);
  return {scale * x.to_double(), scale * sin72 * y.to_double()};
}

GoldenVec2 golden_parallel(const LatticeVector& v) {
  require_rank4(v, "golden_parallel");
  return golden_image(v, par_cos(), par_sin());
}

GoldenVec2 golden_perp(const LatticeVector& v) {
  require_rank4(v, "golden_perp");
  return golden_image(v, perp_cos(), perp_sin());
}

GoldenNumber golden_dot(const GoldenVec2& a, const GoldenVec2& b) {
  return GoldenNumber(Rational(2, 5)) * (a.x * b.x + sin72_squared() * a.y * b.y);
}

GoldenNumber golden_cross(const GoldenVec2& a, const GoldenVec2& b) { return a.x * b.y - a.y * b.x; }

int golden_orientation(const GoldenVec2& a, const GoldenVec2& b, const GoldenVec2& c) {
  return golden_cross(b - a, c - a).sign();
}

GoldenNumber projected_sq_length_exact(const LatticeVector& v) {
  require_rank4(v, "projected_sq_length_exact");
  // cos(2 pi d / 5) for d = 0, 1, 2 (and d = 4, 3 by symmetry).
  const std::array<GoldenNumber, 3> cos_by_gap = {GoldenNumber(1), g(-1, 4, 1, 4), g(-1, 4, -1, 4)};
  GoldenNumber sum;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      const int d = ((i - j) % 5 + 5) % 5;
      sum += GoldenNumber(v[i] * v[j]) * cos_by_gap[std::min(d, 5 - d)];
    }
  }
  return GoldenNumber(Rational(2, 5)) * sum;
}

GoldenNumber unit_edge_sq_length() {
  return GoldenNumber(Rational(2, 25)) / (GoldenNumber(2) + GoldenNumber::tau());
}

std::string to_string(TileType t) {
  switch (t) {
  case TileType::ThinHexagon: return "ThinHexagon";
  case TileType::ThickHexagon: return "ThickHexagon";
  case TileType::ThinRhombus: return "ThinRhombus";
  case TileType::ThickRhombus: return "ThickRhombus";
  case TileType::DegenerateSegment: return "DegenerateSegment";
  }
  return "?";
}

TileType tile_type_from_string(std::string_view s) {
  for (TileType t : {TileType::ThinHexagon, TileType::ThickHexagon, TileType::ThinRhombus, TileType::ThickRhombus,
                     TileType::DegenerateSegment}) {
    if (to_string(t) == s) return t;
  }
  throw std::invalid_argument("unknown tile type '" + std::string(s) + "'");
}

TileType classify_face_combinatorial(const Face& f) {
  if (f.rank() != 4 || f.dimension() != 2) {
    throw std::invalid_argument("classify_face: " + f.str() + " is not a 2-face of the order-5 permutohedron");
  }
  std::vector<const std::vector<int>*> big;
  for (const auto& b : f.blocks()) {
    if (b.size() > 1) big.push_back(&b);
  }
  if (big.size() == 1) {
    const auto& s = *big.front();
    int adjacent_pairs = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) adjacent_pairs += adjacent_mod5(s[i], s[j]) ? 1 : 0;
    }
    return adjacent_pairs == 2 ? TileType::ThinHexagon : TileType::ThickHexagon;
  }
  const bool p = adjacent_mod5((*big[0])[0], (*big[0])[1]);
  const bool q = adjacent_mod5((*big[1])[0], (*big[1])[1]);
  if (p && q) return TileType::ThinRhombus;
  if (!p && !q) return TileType::ThickRhombus;
  return TileType::DegenerateSegment;
}

FaceClassification classify_face_detailed(const Face& f) {
  const TileType rule = classify_face_combinatorial(f);

  FaceClassification out;
  for (const auto& v : face_vertices(f)) out.vertices.push_back(golden_parallel(v));

  const GoldenNumber unit = unit_edge_sq_length();
  const GoldenNumber tau_sq = GoldenNumber::tau() * GoldenNumber::tau();
  const std::size_t k = out.vertices.size();
  std::vector<GoldenVec2> edges;
  for (std::size_t i = 0; i < k; ++i) {
    edges.push_back(out.vertices[(i + 1) % k] - out.vertices[i]);
    const GoldenNumber ratio = golden_dot(edges.back(), edges.back()) / unit;
    if (ratio == GoldenNumber(1)) {
      out.edge_pattern.push_back(EdgeClass::Unit);
    } else if (ratio == tau_sq) {
      out.edge_pattern.push_back(EdgeClass::Tau);
    } else {
      throw std::logic_error("classify_face: edge of " + f.str() + " has normalized squared length " + ratio.str());
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (golden_cross(edges[i], edges[(i + 1) % k]).is_zero()) out.collapsed = true;
  }

  const auto taus = std::count(out.edge_pattern.begin(), out.edge_pattern.end(), EdgeClass::Tau);
  if (k == 6) {
    if (out.collapsed) throw std::logic_error("classify_face: hexagon " + f.str() + " collapses");
    out.type = taus == 2 ? TileType::ThinHexagon : TileType::ThickHexagon;
  } else if (k == 4) {
    if (out.collapsed) {
      out.type = TileType::DegenerateSegment;
    } else if (taus == 0) {
      out.type = TileType::ThinRhombus;
    } else if (taus == 4) {
      out.type = TileType::ThickRhombus;
    } else {
      throw std::logic_error("classify_face: square " + f.str() + " has mixed edges but does not collapse");
    }
  } else {
    throw std::logic_error("classify_face: unexpected vertex count for " + f.str());
  }
  if (out.type != rule) {
    throw std::logic_error("classify_face: metric type " + to_string(out.type) + " disagrees with rule " +
                           to_string(rule) + " for " + f.str());
  }
  return out;
}

TileType classify_face(const Face& f) { return classify_face_detailed(f).type; }

std::map<TileType, long> classify_all_faces() {
  std::map<TileType, long> census;
  for (const auto& f : faces_of_dimension(4, 2)) ++census[classify_face(f)];
  return census;
}

bool same_cyclic_pattern(const std::vector<EdgeClass>& a, const std::vector<EdgeClass>& b) {
  if (a.size() != b.size()) return false;
  const std::size_t k = a.size();
  std::vector<EdgeClass> rev(b.rbegin(), b.rend());
  const std::vector<EdgeClass>* cands[] = {&b, &rev};
  for (const auto* cand : cands) {
    for (std::size_t shift = 0; shift < std::max<std::size_t>(k, 1); ++shift) {
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) ok = a[i] == (*cand)[(i + shift) % k];
      if (ok) return true;
    }
  }
  return false;
}

std::string pattern_string(const std::vector<EdgeClass>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += p[i] == EdgeClass::Unit ? "1" : "tau";
  }
  return s + ")";
}

DeloneProjection project_delone_simplex(int n) {
  if (n < 2) throw std::invalid_argument("project_delone_simplex: n must be at least 2");
  DeloneProjection out;
  out.n = n;
  std::vector<LatticeVector> verts{LatticeVector(n)};
  for (int i = 1; i <= n; ++i) verts.push_back(fundamental_weight(n, i));
  for (const auto& v : verts) out.points.push_back(project(v));

  auto sq = [&](int a, int b) {
    const double dx = out.points[a].x - out.points[b].x;
    const double dy = out.points[a].y - out.points[b].y;
    return dx * dx + dy * dy;
  };

  // Float length classes; exact at n = 4.
  std::vector<double> classes;
  const int count = n + 1;
  for (int a = 0; a < count; ++a) {
    for (int b = a + 1; b < count; ++b) {
      const double d = sq(a, b);
      if (std::none_of(classes.begin(), classes.end(), [&](double c) { return std::abs(c - d) <= kFloatTolerance; })) {
        classes.push_back(d);
      }
    }
  }
  std::sort(classes.begin(), classes.end());
  auto class_of = [&](double d) {
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (std::abs(classes[i] - d) <= kFloatTolerance) return static_cast<int>(i);
    }
    return -1;
  };

  if (n == 4) {
    for (std::size_t a = 0; a < verts.size(); ++a) {
      for (std::size_t b = a + 1; b < verts.size(); ++b) {
        const GoldenNumber d = projected_sq_length_exact(verts[a] - verts[b]);
        if (std::find(out.exact_sq_distance_classes.begin(), out.exact_sq_distance_classes.end(), d) ==
            out.exact_sq_distance_classes.end()) {
          out.exact_sq_distance_classes.push_back(d);
        }
      }
    }
    std::sort(out.exact_sq_distance_classes.begin(), out.exact_sq_distance_classes.end(),
              [](const GoldenNumber& a, const GoldenNumber& b) { return a < b; });
  }

  for (int a = 0; a < count; ++a) {
    for (int b = a + 1; b < count; ++b) {
      for (int c = b + 1; c < count; ++c) {
        DeloneTriangle t;
        t.corners = {a, b, c};
        t.sq_sides = {sq(a, b), sq(b, c), sq(a, c)};
        std::sort(t.sq_sides.begin(), t.sq_sides.end());
        std::array<int, 3> cls = {class_of(t.sq_sides[0]), class_of(t.sq_sides[1]), class_of(t.sq_sides[2])};
        if (cls[0] == cls[2]) {
          t.label = "equilateral";
        } else if (n == 4 && classes.size() == 2) {
          // Robinson triangles: sides (1,1,tau) and (1,tau,tau).
          t.label = cls[1] == 0 ? "golden gnomon" : "golden triangle";
        } else {
          std::ostringstream os;
          os << "classes " << cls[0] << "," << cls[1] << "," << cls[2];
          t.label = os.str();
        }
        out.triangles.push_back(t);
      }
    }
  }
  return out;
}

} // namespace anstar
