#include <esb/complex.hpp>

#include <esb/binomial.hpp>
#include <esb/errors.hpp>

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace esb {
namespace {

bool size_colex_less(VertexSet a, VertexSet b) {
  const int ca = cardinality(a), cb = cardinality(b);
  return ca != cb ? ca < cb : a < b;
}

bool size_lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

// All k-subsets of {0..n-1} as bitmasks, in colex order.
std::vector<VertexSet> subsets_of_size(int n, int k) {
  std::vector<VertexSet> out;
  if (k < 0 || k > n) return out;
  if (k == 0) return {0};
  VertexSet s = (VertexSet{1} << k) - 1;
  const VertexSet limit = VertexSet{1} << n;
  while (s < limit) {
    out.push_back(s);
    // Gosper's hack: next larger integer with the same popcount
    const VertexSet c = s & (~s + 1);
    const VertexSet r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

}  // namespace

std::vector<int> vertices_of(VertexSet s) {
  std::vector<int> out;
  for (int v = 0; s; ++v, s >>= 1)
    if (s & 1) out.push_back(v);
  return out;
}

VertexSet to_vertex_set(const std::vector<int>& vertices) {
  VertexSet s = 0;
  for (int v : vertices) s |= VertexSet{1} << v;
  return s;
}

int cardinality(VertexSet s) { return std::popcount(s); }

SimplicialComplex::SimplicialComplex(int n_vertices, const std::vector<std::vector<int>>& facets)
    : n_vertices_(n_vertices) {
  if (n_vertices < 0) throw ValidationError("number of vertices must be non-negative");
  if (n_vertices > kMaxVertices)
    throw SizeLimitError("at most " + std::to_string(kMaxVertices) + " vertices are supported, got " +
                         std::to_string(n_vertices));
  if (facets.empty()) throw ValidationError("a complex needs at least one facet (use [[]] for the empty face)");
  std::vector<VertexSet> sets;
  for (const auto& facet : facets) {
    for (int v : facet)
      if (v < 0 || v >= n_vertices)
        throw ValidationError("vertex " + std::to_string(v) + " out of range for " + std::to_string(n_vertices) +
                              " vertices");
    sets.push_back(to_vertex_set(facet));
  }
  std::sort(sets.begin(), sets.end(), size_colex_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool contained = false;
    for (std::size_t j = i + 1; j < sets.size() && !contained; ++j) contained = (sets[i] & ~sets[j]) == 0;
    if (!contained) facets_.push_back(sets[i]);
  }
}

std::vector<std::vector<int>> SimplicialComplex::facet_lists() const {
  std::vector<std::vector<int>> out;
  for (VertexSet f : facets_) out.push_back(vertices_of(f));
  return out;
}

bool SimplicialComplex::is_face(VertexSet s) const {
  return std::any_of(facets_.begin(), facets_.end(), [s](VertexSet f) { return (s & ~f) == 0; });
}

int SimplicialComplex::dimension() const {
  int top = 0;
  for (VertexSet f : facets_) top = std::max(top, cardinality(f));
  return top - 1;
}

std::vector<VertexSet> SimplicialComplex::faces() const {
  std::unordered_set<VertexSet> seen;
  for (VertexSet f : facets_) {
    // enumerate all submasks of f, including f and 0
    for (VertexSet s = f;; s = (s - 1) & f) {
      seen.insert(s);
      if (s == 0) break;
    }
  }
  std::vector<VertexSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), size_colex_less);
  return out;
}

std::vector<VertexSet> SimplicialComplex::induced_faces(VertexSet w) const {
  std::vector<VertexSet> out;
  for (VertexSet f : faces())
    if ((f & ~w) == 0) out.push_back(f);
  return out;
}

FVector f_vector(const SimplicialComplex& c) {
  const int d = c.dimension() + 1;
  IntVector counts(static_cast<std::size_t>(d + 1), 0);
  for (VertexSet f : c.faces()) counts[static_cast<std::size_t>(cardinality(f))] += 1;
  return FVector(d, std::move(counts));
}

std::vector<std::vector<int>> minimal_nonfaces(const SimplicialComplex& c) {
  // A minimal non-face is G + v with G a face, v outside G, and every
  // facet of G + v a face.
  std::unordered_set<VertexSet> found;
  const auto faces = c.faces();
  const std::unordered_set<VertexSet> face_set(faces.begin(), faces.end());
  for (VertexSet g : faces) {
    for (int v = 0; v < c.n_vertices(); ++v) {
      const VertexSet bit = VertexSet{1} << v;
      if (g & bit) continue;
      const VertexSet s = g | bit;
      if (face_set.count(s) || found.count(s)) continue;
      bool minimal = true;
      for (VertexSet rest = s; rest && minimal; rest &= rest - 1) {
        const VertexSet low = rest & (~rest + 1);
        minimal = face_set.count(s & ~low) > 0;
      }
      if (minimal) found.insert(s);
    }
  }
  std::vector<std::vector<int>> out;
  for (VertexSet s : found) out.push_back(vertices_of(s));
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

SimplicialComplex cyclic_polytope_boundary(int n, int d) {
  if (d < 2 || n < d + 1)
    throw ValidationError("cyclic polytope C(n, d) needs n >= d + 1 >= 3, got n = " + std::to_string(n) +
                          ", d = " + std::to_string(d));
  if (n > kMaxVertices) throw SizeLimitError("too many vertices: " + std::to_string(n));
  std::vector<std::vector<int>> facets;
  for (VertexSet s : subsets_of_size(n, d)) {
    // Gale evenness: between two non-members lies an even number of members.
    bool even = true;
    int previous_gap = -1;
    for (int v = 0; v < n && even; ++v) {
      if (s & (VertexSet{1} << v)) continue;
      if (previous_gap >= 0) {
        const VertexSet between = s & ((VertexSet{1} << v) - 1) & ~((VertexSet{1} << (previous_gap + 1)) - 1);
        even = cardinality(between) % 2 == 0;
      }
      previous_gap = v;
    }
    if (even) facets.push_back(vertices_of(s));
  }
  return SimplicialComplex(n, facets);
}

SimplicialComplex cross_polytope_boundary(int d) {
  if (d < 1) throw ValidationError("cross-polytope dimension must be >= 1");
  if (2 * d > kMaxVertices) throw SizeLimitError("too many vertices: " + std::to_string(2 * d));
  std::vector<std::vector<int>> facets;
  for (VertexSet choice = 0; choice < (VertexSet{1} << d); ++choice) {
    std::vector<int> facet;
    for (int i = 0; i < d; ++i) facet.push_back((choice >> i) & 1 ? i + d : i);
    std::sort(facet.begin(), facet.end());
    facets.push_back(facet);
  }
  return SimplicialComplex(2 * d, facets);
}

SimplicialComplex polygon_boundary(int n) {
  if (n < 3) throw ValidationError("a polygon needs at least 3 vertices");
  return cyclic_polytope_boundary(n, 2);
}

SimplicialComplex simplex_boundary(int d) {
  if (d < 1) throw ValidationError("simplex dimension must be >= 1");
  std::vector<std::vector<int>> facets;
  for (VertexSet s : subsets_of_size(d + 1, d)) facets.push_back(vertices_of(s));
  return SimplicialComplex(d + 1, facets);
}

SimplicialComplex full_simplex(int n) {
  std::vector<int> all;
  for (int v = 0; v < n; ++v) all.push_back(v);
  return SimplicialComplex(n, {all});
}

}  // namespace esb
