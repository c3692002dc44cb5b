#include "anstar/commands.hpp"

#include "anstar/render.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <system_error>

namespace anstar {

namespace {

/// Ordered set partitions of an m-set into k blocks: k! S(m, k).
long ordered_partitions(int m, int k) {
  std::vector<std::vector<long>> s(static_cast<std::size_t>(m + 1), std::vector<long>(static_cast<std::size_t>(m + 1), 0));
  s[0][0] = 1;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= i; ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  }
  return factorial(k) * s[m][k];
}

CheckResult check(std::string name, const std::string& expected, const std::string& actual) {
  return {std::move(name), expected, actual, expected == actual};
}

CheckResult check(std::string name, long expected, long actual) {
  return check(std::move(name), std::to_string(expected), std::to_string(actual));
}

CheckResult check_bool(std::string name, bool ok, const std::string& detail = "") {
  return {std::move(name), "true", ok ? "true" : "false" + (detail.empty() ? "" : " (" + detail + ")"), ok};
}

std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

std::string word_set(const std::vector<VertexWord>& words) {
  std::set<std::string> s;
  for (const auto& w : words) s.insert(w.str());
  std::string out;
  for (const auto& w : s) out += (out.empty() ? "" : " ") + w;
  return out;
}

void add_rank4_checks(std::vector<CheckResult>& out) {
  const LatticeVector k1 = k_vector(4, 1);
  const LatticeVector k2 = k_vector(4, 2);
  out.push_back(check("(k_i,k_i)", "4/5", inner_product(k1, k1).str()));
  out.push_back(check("(k_i,k_j)", "-1/5", inner_product(k1, k2).str()));
  out.push_back(check("|k_i-k_j|^2", "2", squared_norm(k1 - k2).str()));

  const GoldenNumber short_sq = GoldenNumber(2) / (GoldenNumber(2) + GoldenNumber::tau());
  const GoldenNumber long_sq = GoldenNumber::tau() * GoldenNumber::tau() * short_sq;
  std::set<std::string> lengths;
  for (int i = 1; i <= 5; ++i) {
    for (int j = i + 1; j <= 5; ++j) lengths.insert(projected_sq_length_exact(k_vector(4, i) - k_vector(4, j)).str());
  }
  std::string actual;
  for (const auto& s : lengths) actual += (actual.empty() ? "" : " ") + s;
  std::set<std::string> want = {short_sq.str(), long_sq.str()};
  std::string expected;
  for (const auto& s : want) expected += (expected.empty() ? "" : " ") + s;
  out.push_back(check("projected |k_i-k_j|^2 classes", expected, actual));

  for (const auto& fam : facet_center_orbits(4)) {
    std::string sizes;
    for (const auto& o : fam.orbits) sizes += (sizes.empty() ? "" : "+") + std::to_string(o.size());
    out.push_back(check_bool("center orbits: " + fam.label + " [" + sizes + "]", fam.matches));
  }

  const Face hex({{1, 2, 3}, {4}, {5}});
  out.push_back(check("face {1,2,3}{4}{5} vertex words", "34521 35421 43521 45321 53421 54321",
                      word_set(face_vertex_words(hex))));
  out.push_back(check("face {1,2,3}{4}{5} center", "(1/5)(-2k_4-3k_5)", k_expression(face_center(hex))));
  const Face prism({{1, 2, 3}, {4, 5}});
  out.push_back(check("face {1,2,3}{4,5} vertex count", 12, static_cast<long>(face_vertex_words(prism).size())));
  out.push_back(check("face {1,2,3}{4,5} center", k_expression(fundamental_weight(4, 3) * Rational(1, 2)),
                      k_expression(face_center(prism))));

  const auto types = classify_all_faces();
  for (TileType t : {TileType::ThinHexagon, TileType::ThickHexagon, TileType::ThinRhombus, TileType::ThickRhombus,
                     TileType::DegenerateSegment}) {
    const auto it = types.find(t);
    out.push_back(check("2-faces classified " + to_string(t), 30, it == types.end() ? 0 : it->second));
  }

  double worst = 0.0;
  for (const auto& v : voronoi_vertices(4)) {
    const PlanePoint a = golden_parallel(v).to_plane();
    const PlanePoint b = project(v);
    worst = std::max({worst, std::abs(a.x - b.x), std::abs(a.y - b.y)});
  }
  out.push_back(check_bool("golden frame vs float projection within 1e-9", worst < 1e-9, sci(worst)));

  const Patch shadow = shadow_tiling_of_cell(default_shadow_direction());
  std::string census;
  for (const auto& [type, s] : patch_statistics(shadow)) census += (census.empty() ? "" : " ") + std::to_string(s.count);
  out.push_back(check("shadow tiling census", "5 5 5 5", census));
}

} // namespace

std::vector<CheckResult> verification_checks(int n) {
  if (n < 1 || n > kMaxEnumerationRank) {
    throw std::invalid_argument("n must lie in 1.." + std::to_string(kMaxEnumerationRank));
  }
  std::vector<CheckResult> out;
  const int m = n + 1;
  const auto counts = face_counts(n);
  for (int d = 0; d <= n; ++d) {
    out.push_back(check("faces of dimension " + std::to_string(d), ordered_partitions(m, m - d), counts[d]));
  }
  if (n <= 5) {
    for (int d = 0; d < n; ++d) {
      out.push_back(check("enumerated faces of dimension " + std::to_string(d), counts[d],
                          static_cast<long>(faces_of_dimension(n, d).size())));
    }
  }
  out.push_back(check("alternating face sum", expected_euler(n), euler_check(n)));

  const auto vertices = voronoi_vertices(n);
  out.push_back(check("distinct vertices", factorial(m), static_cast<long>(vertices.size())));
  const Rational r2 = covering_radius_squared(n);
  bool on_sphere = true;
  double worst = 0.0;
  const auto base = ambient_coordinates(vertices.front());
  for (const auto& v : vertices) {
    if (squared_norm(v) != r2) on_sphere = false;
    const auto a = ambient_coordinates(v);
    double dot = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * base[i];
    worst = std::max(worst, std::abs(dot - inner_product(v, vertices.front()).to_double()));
  }
  out.push_back(check_bool("vertices at squared distance " + r2.str(), on_sphere));
  out.push_back(check_bool("exact vs float inner products within 1e-9", worst < 1e-9, sci(worst)));

  if (n == 2) {
    const Face all({{1, 2, 3}});
    const auto vs = face_vertices(all);
    std::set<Rational> sides;
    std::set<Rational> turns;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const LatticeVector e = vs[(i + 1) % vs.size()] - vs[i];
      const LatticeVector f = vs[(i + 2) % vs.size()] - vs[(i + 1) % vs.size()];
      sides.insert(squared_norm(e));
      turns.insert(inner_product(e, f));
    }
    out.push_back(check("hexagon vertices", 6, static_cast<long>(vs.size())));
    out.push_back(check("distinct edge lengths", 1, static_cast<long>(sides.size())));
    out.push_back(check("distinct edge angles", 1, static_cast<long>(turns.size())));
  }
  if (n == 3) {
    long hexagons = 0;
    long squares = 0;
    for (const auto& f : faces_of_dimension(3, 2)) {
      const auto sizes = f.block_sizes();
      if (sizes == std::vector<int>{3, 1}) ++hexagons;
      if (sizes == std::vector<int>{2, 2}) ++squares;
    }
    out.push_back(check("hexagonal 2-faces", 8, hexagons));
    out.push_back(check("square 2-faces", 6, squares));
  }
  if (n == 4) add_rank4_checks(out);
  return out;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw std::runtime_error("cannot write " + path.string() + ": directory does not exist");
  fs::path tmp = path;
  tmp += ".partial";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + path.string() + ": unable to open for writing");
    f << content;
    f.flush();
    if (!f) {
      f.close();
      fs::remove(tmp, ec);
      throw std::runtime_error("cannot write " + path.string() + ": write failed");
    }
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot write " + path.string() + ": " + ec.message());
  }
}

int cmd_verify(int n, bool json, std::ostream& out, std::ostream& err) {
  std::vector<CheckResult> checks;
  try {
    checks = verification_checks(n);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  bool all = true;
  for (const auto& c : checks) all = all && c.pass;
  if (json) {
    nlohmann::ordered_json j;
    j["command"] = "verify";
    j["n"] = n;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
      arr.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    }
    j["checks"] = arr;
    j["pass"] = all;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& c : checks) {
      out << (c.pass ? "PASS  " : "FAIL  ") << c.name << ": expected " << c.expected << ", got " << c.actual << "\n";
    }
    long passed = 0;
    for (const auto& c : checks) passed += c.pass;
    out << "verify --n " << n << ": " << (all ? "PASS" : "FAIL") << " (" << passed << "/" << checks.size()
        << " checks)\n";
  }
  return all ? 0 : 1;
}

int cmd_project_cell(const ProjectCellOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const GoldenVec2 w = opts.w.empty() ? default_shadow_direction() : parse_window_point(opts.w);
    const Patch p = shadow_tiling_of_cell(w);
    if (opts.types_only) {
      out << type_census_json(p).dump(2) << "\n";
      return 0;
    }
    if (opts.out.empty() && opts.json_out.empty()) {
      err << "error: project-cell needs --out (SVG path), --json or --types-only\n";
      return 2;
    }
    RenderStyle style = default_style();
    style.color = !opts.no_color;
    if (!opts.out.empty()) write_file_atomic(opts.out, render_svg(p.tiles, style, "Projected Voronoi cell of A4*"));
    if (!opts.json_out.empty()) write_file_atomic(opts.json_out, patch_to_json(p).dump(2) + "\n");
    out << "shadow tiling: " << p.tiles.size() << " tiles, w = " << window_point_str(w) << "\n";
    return 0;
  } catch (const NonGenericError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_patch(const PatchOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const Rational radius = Rational::parse(opts.radius);
    Patch p;
    if (opts.gamma == "symmetric") {
      p = symmetric_patch(radius);
    } else {
      const GoldenVec2 g = opts.gamma.empty() ? default_window_shift() : parse_window_point(opts.gamma);
      p = klotz_patch(g, radius);
    }
    const std::string json = patch_to_json(p).dump(2) + "\n";
    if (!opts.out.empty()) {
      RenderStyle style = default_style();
      style.color = !opts.no_color;
      write_file_atomic(opts.out, render_svg(p.tiles, style, "A4* patch, gamma = " + window_point_str(p.window)));
    }
    if (!opts.json_out.empty()) write_file_atomic(opts.json_out, json);
    if (opts.out.empty() && opts.json_out.empty()) {
      out << json;
    } else {
      out << "patch: " << p.tiles.size() << " tiles, gamma = " << window_point_str(p.window)
          << ", radius = " << p.radius.str() << "\n";
    }
    return 0;
  } catch (const NonGenericError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_facets(int n, const std::string& format, std::ostream& out, std::ostream& err) {
  if (n < 1 || n > kMaxEnumerationRank) {
    err << "error: n must lie in 1.." << kMaxEnumerationRank << "\n";
    return 2;
  }
  if (format == "json") {
    out << facets_json(n).dump(2) << "\n";
  } else if (format == "table") {
    out << facets_table(n);
  } else {
    err << "error: unknown format '" << format << "' (use table or json)\n";
    return 2;
  }
  return 0;
}

} // namespace anstar
