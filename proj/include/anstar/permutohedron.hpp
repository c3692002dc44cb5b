#ifndef ANSTAR_PERMUTOHEDRON_HPP
#define ANSTAR_PERMUTOHEDRON_HPP

#include "anstar/lattice.hpp"
#include "anstar/weyl.hpp"

#include <string>
#include <vector>

namespace anstar {

/// Assignment of the values n+1, n, ..., 1 to the k-indices. The word
/// {5,4,3,2,1} is the vertex (1/5)(5k_1 + 4k_2 + 3k_3 + 2k_4 + k_5).
class VertexWord {
public:
  VertexWord() = default;
  explicit VertexWord(std::vector<int> values);
  /// Parses a digit string such as "54321".
  static VertexWord parse(const std::string& digits);

  int rank() const { return static_cast<int>(values_.size()) - 1; }
  const std::vector<int>& values() const { return values_; }
  LatticeVector to_vector() const;
  std::string str() const;

  friend bool operator==(const VertexWord& a, const VertexWord& b) { return a.values_ == b.values_; }
  friend bool operator<(const VertexWord& a, const VertexWord& b) { return a.values_ < b.values_; }

private:
  std::vector<int> values_;
};

/// A face of the order-(n+1) permutohedron as an ordered set partition
/// (B_1, ..., B_k) of {1, ..., n+1}. Elements of earlier blocks receive
/// larger values. Blocks are stored sorted.
class Face {
public:
  Face() = default;
  explicit Face(std::vector<std::vector<int>> blocks);

  int rank() const { return rank_; }
  int dimension() const { return rank_ + 1 - static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  /// Block sizes sorted in decreasing order, e.g. {3,1,1} for a hexagon.
  std::vector<int> block_sizes() const;
  /// "{1,2,3}{4}{5}"
  std::string str() const;

  friend bool operator==(const Face& a, const Face& b) { return a.blocks_ == b.blocks_; }
  friend bool operator<(const Face& a, const Face& b) { return a.blocks_ < b.blocks_; }

private:
  int rank_ = 0;
  std::vector<std::vector<int>> blocks_;
};

/// All (n+1)! vertices, sorted.
std::vector<LatticeVector> voronoi_vertices(int n);
std::vector<VertexWord> all_vertex_words(int n);

/// Ordered set partitions of {1..n+1} into n+1-d blocks, sorted.
std::vector<Face> faces_of_dimension(int n, int d);

/// Vertex words of the face; for 2-faces in boundary-cycle order starting at
/// the smallest word, otherwise sorted.
std::vector<VertexWord> face_vertex_words(const Face& f);
std::vector<LatticeVector> face_vertices(const Face& f);
LatticeVector face_center(const Face& f);

/// The lattice neighbour sum_{j in S} k_j across the facet (S, complement).
LatticeVector facet_neighbor(int n, const std::vector<int>& subset);

struct CensusRow {
  int dimension = 0;
  std::vector<int> block_sizes;
  long count = 0;
};

/// Face counts per dimension and block-size type, d = 0..n.
std::vector<CensusRow> face_census(int n);
/// N_d for d = 0..n.
std::vector<long> face_counts(int n);
/// sum_{d=0}^{n-1} (-1)^d N_d over the proper faces.
long euler_check(int n);
/// Euler characteristic of the boundary sphere S^{n-1}: 1 - (-1)^n.
long expected_euler(int n);

struct CenterFamily {
  std::string label;
  int dimension = 0;
  std::vector<int> block_sizes;
  /// Generating vectors; the family is the union of their W(a_4)-orbits.
  std::vector<LatticeVector> generators;
  std::vector<std::string> generator_labels;
  std::vector<std::vector<LatticeVector>> orbits;
  /// Centers of all faces of this combinatorial type.
  std::vector<LatticeVector> face_centers;
  bool matches = false;
};

/// Truncated octahedra, hexagons, hexagonal prisms and squares of the order-5
/// permutohedron, with their center orbits. Only defined for n = 4.
std::vector<CenterFamily> facet_center_orbits(int n);

/// Copy of the fundamental simplex {t, t + g(omega_1), ..., t + g(omega_n)}.
struct DeloneSimplex {
  LatticeVector base;
  GroupElement element;

  std::vector<LatticeVector> vertices() const;
  /// Circumcenter; equals the centroid for these simplices.
  LatticeVector center() const;
};

/// The (n+1)! Delone simplices having q as a vertex.
std::vector<DeloneSimplex> delone_simplices_at(const LatticeVector& q);

/// Lattice points s whose Voronoi cell contains the 2-face t + f, i.e. every
/// vertex of the face is equidistant from s and t. Sorted; includes t.
std::vector<LatticeVector> voronoi_face_dual(const LatticeVector& t, const Face& f);

} // namespace anstar

#endif // ANSTAR_PERMUTOHEDRON_HPP
