#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace icp {

struct EdgeRec {
  int u = -1;
  int v = -1;
  double theta = 0.0;  // exterior intersection angle, in (0, pi)
};

// Finite truncation of a cellular decomposition. Vertices are 0..n-1 with
// external labels kept for IO; faces are cyclic edge-index lists. An optional
// distinguished 2-cell marks the cell at infinity.
struct CellComplex {
  std::vector<std::int64_t> labels;
  std::vector<EdgeRec> edges;
  std::vector<std::vector<int>> faces;
  int infinity_face = -1;
  std::vector<int> infinity_marks;  // explicit infinity vertices (optional)

  // derived, filled by finalize()
  std::vector<std::vector<int>> vertex_edges;
  std::vector<std::array<int, 2>> edge_faces;      // -1 when absent
  std::vector<std::vector<int>> face_vertices;     // cycle, v_k v_{k+1} = edge k

  int n_vertices() const { return static_cast<int>(labels.size()); }
  int n_edges() const { return static_cast<int>(edges.size()); }
  int n_faces() const { return static_cast<int>(faces.size()); }

  // Builds adjacency and face cycles; throws std::runtime_error when the
  // incidence data is malformed (dangling edge, face that does not chain
  // into a single cycle, duplicate edge, ...).
  void finalize();
  bool finalized() const { return !vertex_edges.empty() || labels.empty(); }

  int other_endpoint(int e, int v) const;
  int degree(int v) const { return static_cast<int>(vertex_edges[v].size()); }

  // Explicit marks plus vertices of the marked infinity face, sorted and
  // deduplicated (empty when nothing is marked).
  std::vector<int> infinity_vertices() const;

  // True for vertices whose every incident edge carries two faces and whose
  // incident faces close into a full fan (none of them the infinity face).
  std::vector<char> interior_mask() const;

  // Sum of edge weights over the coboundary of v.
  double character(int v) const;
  // (character - 2 pi) / degree
  double normalized_character(int v) const;
};

struct FaceDeficit {
  int face;
  double deficit;  // actual sum minus (m - 2) pi
};

// Faces whose weight sum misses (m-2) pi by more than tau, plus edges with
// weights outside (0, pi). Throws on structural problems.
std::vector<FaceDeficit> validate_c1(const CellComplex& cc, double tau = 1e-9);

// Hop-distance balls around center, one per radius (radii must be
// increasing). Each ball is a sorted vertex list.
std::vector<std::vector<int>> build_exhaustion(const CellComplex& cc,
                                               int center,
                                               const std::vector<int>& radii);

std::vector<int> hop_distances(const CellComplex& cc, int center);

// Poincare dual of a closed complex (every edge bordered by two faces).
// Edge weights are carried over edge-to-edge.
CellComplex dual_complex(const CellComplex& cc);

// Face cycles with a globally consistent orientation: any edge shared by two
// faces is traversed in opposite directions. Orientation is seeded per
// connected component of the face adjacency graph.
std::vector<std::vector<int>> oriented_face_cycles(const CellComplex& cc);

// Order-independent summary used for comparing complexes up to relabeling.
struct ComplexStats {
  int n_vertices, n_edges, n_faces;
  std::vector<int> degrees;        // sorted
  std::vector<int> face_sizes;     // sorted
  std::vector<double> thetas;      // sorted
};
ComplexStats complex_stats(const CellComplex& cc);

// FNV-1a over a canonical serialization; stable across runs and platforms.
std::uint64_t complex_hash(const CellComplex& cc);

}  // namespace icp
