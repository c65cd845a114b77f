#pragma once

// Finite simplicial complexes given by their facets. Vertices are 0-based
// internally; the JSON format uses 1-based indices.

#include <esb/vectors.hpp>

#include <cstdint>
#include <vector>

namespace esb {

/// Vertex subset as a bitmask: bit v set iff vertex v belongs to the set.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 63;

/// Sorted vertex indices of a bitmask.
std::vector<int> vertices_of(VertexSet s);
VertexSet to_vertex_set(const std::vector<int>& vertices);
int cardinality(VertexSet s);

class SimplicialComplex {
 public:
  /// Facets are lists of 0-based vertex indices. Duplicate and non-maximal
  /// facets are dropped. Vertices in no facet are allowed; they are
  /// non-faces. Throws ValidationError on out-of-range vertices and
  /// SizeLimitError if n_vertices > kMaxVertices.
  SimplicialComplex(int n_vertices, const std::vector<std::vector<int>>& facets);

  int n_vertices() const { return n_vertices_; }
  /// Maximal faces, sorted by (size, colex).
  const std::vector<VertexSet>& facets() const { return facets_; }
  std::vector<std::vector<int>> facet_lists() const;

  bool is_face(VertexSet s) const;
  /// Largest facet size minus one; -1 for the complex {empty set}.
  int dimension() const;
  /// Every face, the empty face included, sorted by (size, colex).
  std::vector<VertexSet> faces() const;
  /// Faces contained in `w`: the induced subcomplex on w.
  std::vector<VertexSet> induced_faces(VertexSet w) const;

 private:
  int n_vertices_;
  std::vector<VertexSet> facets_;
};

/// Face numbers (f_{-1}, ..., f_{d-1}) with d = dimension() + 1, so the
/// boundary of a d-polytope yields its usual f-vector.
FVector f_vector(const SimplicialComplex& c);

/// Inclusion-minimal non-faces (empty simplices), sorted by (size, lex).
std::vector<std::vector<int>> minimal_nonfaces(const SimplicialComplex& c);

/// Boundary of the cyclic polytope C(n, d) via Gale evenness. Needs n >= d+1 >= 3.
SimplicialComplex cyclic_polytope_boundary(int n, int d);
/// Boundary of the d-dimensional cross-polytope; vertices v and v+d are antipodal.
SimplicialComplex cross_polytope_boundary(int d);
/// Boundary of a convex n-gon.
SimplicialComplex polygon_boundary(int n);
/// Boundary of the d-simplex on d+1 vertices.
SimplicialComplex simplex_boundary(int d);
/// The full simplex on n vertices.
SimplicialComplex full_simplex(int n);

}  // namespace esb
