#include "anstar/permutohedron.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace anstar {

namespace {

// Restricted-growth enumeration of the unordered set partitions of
// {1..m} into exactly k blocks.
void set_partitions(int m, int k, std::vector<int>& labels, int next, int used,
                    std::vector<std::vector<std::vector<int>>>& out) {
  if (next == m) {
    if (used != k) return;
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(k));
    for (int e = 0; e < m; ++e) blocks[labels[e]].push_back(e + 1);
    out.push_back(std::move(blocks));
    return;
  }
  if (k - used > m - next) return;
  for (int b = 0; b < used; ++b) {
    labels[next] = b;
    set_partitions(m, k, labels, next + 1, used, out);
  }
  if (used < k) {
    labels[next] = used;
    set_partitions(m, k, labels, next + 1, used + 1, out);
  }
}

void compositions(int remaining, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (int s = 1; s <= remaining - (parts - 1); ++s) {
    cur.push_back(s);
    compositions(remaining - s, parts - 1, cur, out);
    cur.pop_back();
  }
}

bool words_adjacent(const VertexWord& a, const VertexWord& b) {
  int diffs = 0;
  int first = -1;
  int second = -1;
  for (std::size_t j = 0; j < a.values().size(); ++j) {
    if (a.values()[j] != b.values()[j]) {
      ++diffs;
      (first < 0 ? first : second) = static_cast<int>(j);
    }
  }
  if (diffs != 2) return false;
  return a.values()[first] == b.values()[second] && a.values()[second] == b.values()[first] &&
         std::abs(a.values()[first] - a.values()[second]) == 1;
}

} // namespace

VertexWord::VertexWord(std::vector<int> values) : values_(std::move(values)) {
  std::vector<int> check = values_;
  std::sort(check.begin(), check.end());
  for (std::size_t j = 0; j < check.size(); ++j) {
    if (check[j] != static_cast<int>(j) + 1) throw std::invalid_argument("VertexWord: not a permutation of 1..n+1");
  }
  if (values_.size() < 2) throw std::invalid_argument("VertexWord: rank must be positive");
}

VertexWord VertexWord::parse(const std::string& digits) {
  std::vector<int> v;
  for (char c : digits) {
    if (c < '1' || c > '9') throw std::invalid_argument("VertexWord: bad digit in '" + digits + "'");
    v.push_back(c - '0');
  }
  return VertexWord(std::move(v));
}

LatticeVector VertexWord::to_vector() const {
  const int m = static_cast<int>(values_.size());
  std::vector<Rational> c;
  c.reserve(values_.size());
  for (int v : values_) c.emplace_back(v, m);
  return {m - 1, std::move(c)};
}

std::string VertexWord::str() const {
  std::string s;
  for (int v : values_) s += std::to_string(v);
  return s;
}

Face::Face(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
  std::vector<int> all;
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("Face: empty block");
    std::sort(b.begin(), b.end());
    all.insert(all.end(), b.begin(), b.end());
  }
  std::sort(all.begin(), all.end());
  for (std::size_t j = 0; j < all.size(); ++j) {
    if (all[j] != static_cast<int>(j) + 1) throw std::invalid_argument("Face: blocks must partition {1..n+1}");
  }
  if (all.size() < 2) throw std::invalid_argument("Face: rank must be positive");
  rank_ = static_cast<int>(all.size()) - 1;
}

std::vector<int> Face::block_sizes() const {
  std::vector<int> s;
  for (const auto& b : blocks_) s.push_back(static_cast<int>(b.size()));
  std::sort(s.rbegin(), s.rend());
  return s;
}

std::string Face::str() const {
  std::ostringstream os;
  for (const auto& b : blocks_) {
    os << '{';
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
    os << '}';
  }
  return os.str();
}

std::vector<VertexWord> all_vertex_words(int n) {
  std::vector<int> v(static_cast<std::size_t>(n) + 1);
  std::iota(v.begin(), v.end(), 1);
  std::vector<VertexWord> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<LatticeVector> voronoi_vertices(int n) {
  if (n < 1) throw std::invalid_argument("voronoi_vertices: rank must be positive");
  std::vector<LatticeVector> out;
  for (const auto& w : all_vertex_words(n)) out.push_back(w.to_vector());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Face> faces_of_dimension(int n, int d) {
  if (n < 1) throw std::invalid_argument("faces_of_dimension: rank must be positive");
  if (d < 0 || d > n) throw std::out_of_range("face dimension " + std::to_string(d) + " outside 0.." + std::to_string(n));
  const int m = n + 1;
  const int k = m - d;
  std::vector<std::vector<std::vector<int>>> unordered;
  std::vector<int> labels(static_cast<std::size_t>(m));
  set_partitions(m, k, labels, 0, 0, unordered);

  std::vector<Face> out;
  for (auto& blocks : unordered) {
    std::vector<int> order(static_cast<std::size_t>(k));
    std::iota(order.begin(), order.end(), 0);
    do {
      std::vector<std::vector<int>> ordered;
      ordered.reserve(order.size());
      for (int i : order) ordered.push_back(blocks[i]);
      out.emplace_back(std::move(ordered));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexWord> face_vertex_words(const Face& f) {
  const int m = f.rank() + 1;
  // Block t receives the next |B_t| values counting down from m.
  std::vector<std::vector<int>> allotted;
  int top = m;
  for (const auto& b : f.blocks()) {
    std::vector<int> vals;
    for (std::size_t i = 0; i < b.size(); ++i) vals.push_back(top--);
    std::sort(vals.begin(), vals.end());
    allotted.push_back(std::move(vals));
  }

  std::vector<VertexWord> words;
  std::vector<int> word(static_cast<std::size_t>(m));
  auto recurse = [&](auto&& self, std::size_t t) -> void {
    if (t == f.blocks().size()) {
      words.emplace_back(word);
      return;
    }
    std::vector<int> vals = allotted[t];
    do {
      for (std::size_t i = 0; i < vals.size(); ++i) word[f.blocks()[t][i] - 1] = vals[i];
      self(self, t + 1);
    } while (std::next_permutation(vals.begin(), vals.end()));
  };
  recurse(recurse, 0);
  std::sort(words.begin(), words.end());

  if (f.dimension() != 2) return words;

  // Walk the boundary cycle from the smallest word, taking the smaller
  // neighbour first.
  std::vector<VertexWord> cycle{words.front()};
  std::vector<bool> used(words.size(), false);
  used[0] = true;
  while (cycle.size() < words.size()) {
    bool advanced = false;
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (!used[i] && words_adjacent(cycle.back(), words[i])) {
        used[i] = true;
        cycle.push_back(words[i]);
        advanced = true;
        break;
      }
    }
    if (!advanced) throw std::logic_error("face_vertex_words: 2-face boundary is not a cycle");
  }
  return cycle;
}

std::vector<LatticeVector> face_vertices(const Face& f) {
  std::vector<LatticeVector> out;
  for (const auto& w : face_vertex_words(f)) out.push_back(w.to_vector());
  return out;
}

LatticeVector face_center(const Face& f) {
  const int m = f.rank() + 1;
  std::vector<Rational> c(static_cast<std::size_t>(m));
  long top = m;
  for (const auto& b : f.blocks()) {
    const long size = static_cast<long>(b.size());
    // mean of top, top-1, ..., top-size+1
    const Rational mean(2 * top - size + 1, 2);
    for (int e : b) c[e - 1] = mean / Rational(m);
    top -= size;
  }
  return {m - 1, std::move(c)};
}

LatticeVector facet_neighbor(int n, const std::vector<int>& subset) {
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int e : subset) {
    if (e < 1 || e > n + 1) throw std::out_of_range("facet_neighbor: index outside 1..n+1");
    c[e - 1] = 1;
  }
  return {n, std::move(c)};
}

std::vector<CensusRow> face_census(int n) {
  if (n < 1) throw std::invalid_argument("face_census: rank must be positive");
  const int m = n + 1;
  std::map<std::pair<int, std::vector<int>>, long> counts;
  for (int k = 1; k <= m; ++k) {
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    compositions(m, k, cur, comps);
    for (const auto& sizes : comps) {
      // multinomial m! / prod s_i!
      long ways = factorial(m);
      for (int s : sizes) ways /= factorial(s);
      std::vector<int> key = sizes;
      std::sort(key.rbegin(), key.rend());
      counts[{m - k, key}] += ways;
    }
  }
  std::vector<CensusRow> rows;
  for (const auto& [key, count] : counts) rows.push_back({key.first, key.second, count});
  std::stable_sort(rows.begin(), rows.end(), [](const CensusRow& a, const CensusRow& b) {
    if (a.dimension != b.dimension) return a.dimension < b.dimension;
    return a.block_sizes > b.block_sizes;
  });
  return rows;
}

std::vector<long> face_counts(int n) {
  std::vector<long> out(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& row : face_census(n)) out[row.dimension] += row.count;
  return out;
}

long euler_check(int n) {
  const auto counts = face_counts(n);
  long chi = 0;
  for (int d = 0; d < n; ++d) chi += (d % 2 == 0 ? 1 : -1) * counts[d];
  return chi;
}

long expected_euler(int n) { return n % 2 == 0 ? 0 : 2; }

std::vector<CenterFamily> facet_center_orbits(int n) {
  if (n != 4) throw std::invalid_argument("facet_center_orbits is defined for n = 4 only");
  auto w = [](int i) { return fundamental_weight(4, i); };
  auto r = [](long p, long q) { return Rational(p, q); };

  std::vector<CenterFamily> families(4);
  families[0].label = "truncated octahedra";
  families[0].dimension = 3;
  families[0].block_sizes = {4, 1};
  families[0].generators = {r(1, 2) * w(1), r(1, 2) * w(4)};
  families[0].generator_labels = {"(1/2)w1", "(1/2)w4"};

  families[1].label = "hexagons";
  families[1].dimension = 2;
  families[1].block_sizes = {3, 1, 1};
  families[1].generators = {r(1, 5) * (Rational(2) * w(3) + w(4)), r(1, 5) * (Rational(2) * w(2) + w(1)),
                            r(2, 5) * (w(1) + w(4))};
  families[1].generator_labels = {"(1/5)(2w3+w4)", "(1/5)(2w2+w1)", "(2/5)(w1+w4)"};

  families[2].label = "hexagonal prisms";
  families[2].dimension = 3;
  families[2].block_sizes = {3, 2};
  families[2].generators = {r(1, 2) * w(3), r(1, 2) * w(2)};
  families[2].generator_labels = {"(1/2)w3", "(1/2)w2"};

  families[3].label = "squares";
  families[3].dimension = 2;
  families[3].block_sizes = {2, 2, 1};
  families[3].generators = {r(3, 10) * (w(2) + w(3)), r(1, 10) * (Rational(4) * w(2) + Rational(3) * w(4)),
                            r(1, 10) * (Rational(3) * w(1) + Rational(4) * w(3))};
  families[3].generator_labels = {"(3/10)(w2+w3)", "(1/10)(4w2+3w4)", "(1/10)(3w1+4w3)"};

  for (auto& fam : families) {
    std::set<LatticeVector> from_orbits;
    for (const auto& g : fam.generators) {
      fam.orbits.push_back(weyl_orbit(g));
      from_orbits.insert(fam.orbits.back().begin(), fam.orbits.back().end());
    }
    std::set<LatticeVector> from_faces;
    for (const auto& f : faces_of_dimension(4, fam.dimension)) {
      if (f.block_sizes() == fam.block_sizes) from_faces.insert(face_center(f));
    }
    fam.face_centers.assign(from_faces.begin(), from_faces.end());
    std::size_t orbit_total = 0;
    for (const auto& o : fam.orbits) orbit_total += o.size();
    // Orbits must be disjoint and jointly equal to the face centers.
    fam.matches = from_orbits == from_faces && orbit_total == from_orbits.size();
  }
  return families;
}

std::vector<LatticeVector> DeloneSimplex::vertices() const {
  const int n = base.rank();
  std::vector<LatticeVector> out{base};
  for (int i = 1; i <= n; ++i) out.push_back(base + act(element, fundamental_weight(n, i)));
  return out;
}

LatticeVector DeloneSimplex::center() const {
  const auto vs = vertices();
  LatticeVector sum(base.rank());
  for (const auto& v : vs) sum += v;
  return sum * Rational(1, static_cast<long>(vs.size()));
}

std::vector<DeloneSimplex> delone_simplices_at(const LatticeVector& q) {
  if (!q.in_weight_lattice()) throw std::invalid_argument("delone_simplices_at: point is not in the weight lattice");
  std::vector<DeloneSimplex> out;
  for (auto& g : weyl_group_elements(q.rank())) out.push_back({q, std::move(g)});
  return out;
}

std::vector<LatticeVector> voronoi_face_dual(const LatticeVector& t, const Face& f) {
  if (f.dimension() != 2) {
    throw std::invalid_argument("voronoi_face_dual: face " + f.str() + " has dimension " +
                                std::to_string(f.dimension()) + ", expected 2");
  }
  if (f.rank() != t.rank()) throw std::invalid_argument("voronoi_face_dual: rank mismatch");
  const int n = t.rank();
  const auto verts = face_vertices(f);
  // Both s and t lie within the covering radius of each face vertex.
  const Rational reach = Rational(4) * covering_radius_squared(n);
  std::vector<LatticeVector> out;
  for (const auto& u : enumerate_weight_lattice(n, reach)) {
    const Rational uu = inner_product(u, u);
    const bool equidistant = std::all_of(verts.begin(), verts.end(), [&](const LatticeVector& v) {
      return Rational(2) * inner_product(v, u) == uu;
    });
    if (equidistant) out.push_back(t + u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace anstar
