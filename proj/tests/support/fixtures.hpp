#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sz5/catalog.hpp"
#include "sz5/multigraph.hpp"
#include "sz5/orientation.hpp"
#include "sz5/partition.hpp"
#include "sz5/planar.hpp"

namespace fixtures {

using sz5::Multigraph;

Multigraph named(const char* text);

/// Id of the (skip+1)-th edge joining u and v; throws if there is none.
sz5::EdgeId edge_between(const Multigraph& g, int u, int v, int skip = 0);

/// v1..v5 = 0..4. Lifting v1v2v4 turns {v1,v4,v5} into T233.
Multigraph lift_example();

/// T222 on x,y,z = 0,1,2 with u = 3 joined to x,y and v = 4 joined to x,z.
/// Edge ids: 0,1 xy (inner, outer); 2,3 yz; 4,5 xz; 6 uy; 7 ux; 8 vz; 9 vx.
Multigraph two_path_plane();
/// The plane drawing with u and v outside the triangle: the inner T222 face
/// sees the two 3-faces through xy and xz and the outer 5-face through yz.
sz5::RotationSystem two_path_plane_rotation();

/// Connected graph on n vertices: random spanning tree plus extra edges,
/// multiplicities capped at mu_max.
Multigraph random_connected(std::mt19937_64& rng, int n, int extra_edges, int mu_max);

/// Random labelling with `parts` classes (some may be empty, then renumbered).
sz5::VertexPartition random_partition(std::mt19937_64& rng, int n, int max_parts);

sz5::Orientation random_orientation(std::mt19937_64& rng, const Multigraph& g);

/// Legal boundary with uniformly random residues on vertices 0..n-2.
sz5::Boundary random_boundary(std::mt19937_64& rng, int k, int n);

/// Connected graphs with 2..4 vertices, at most max_edges edges and
/// multiplicities at most mu_max, one per isomorphism class.
std::vector<Multigraph> small_corpus(int max_edges, int mu_max);

}  // namespace fixtures
