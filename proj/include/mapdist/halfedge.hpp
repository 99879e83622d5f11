#pragma once

#include <vector>

#include "mapdist/blossom.hpp"

namespace mapdist {

/// Planar map as darts (oriented half-edges) with an opposite involution and
/// counterclockwise rotation at each vertex.  Faces are the orbits of
/// d -> next[opp[d]]; face_of(d) is the face on the left of d.
struct HalfEdgeMap {
    std::vector<int> opp;   // dart involution
    std::vector<int> nxt;   // next dart CCW around the origin vertex
    std::vector<int> vert;  // origin vertex of each dart
    std::vector<signed char> vert_color;  // 0 black, 1 white, -1 uncolored/leg
    int n_vertices = 0;
    int in_leg_dart = -1;   // dart leaving the incoming univalent vertex (-1 if absent)
    int out_leg_dart = -1;  // dart leaving the outgoing univalent vertex (the root)
    std::vector<int> stub_darts_cw;  // former leaf darts in clockwise contour order
    std::vector<int> stub_steps_cw;  // +1 black, -1 white

    int n_darts() const { return static_cast<int>(opp.size()); }
    int n_edges() const { return n_darts() / 2; }
};

struct FaceStructure {
    std::vector<int> face_of;  // dart -> face id
    int n_faces = 0;
    int f0 = -1;  // external face (adjacent to the incoming leg)
    int f1 = -1;  // face adjacent to the outgoing leg
};

FaceStructure faces(const HalfEdgeMap& m);

/// V - E + F == 2 for the closed map (planarity check).
bool euler_ok(const HalfEdgeMap& m);

/// Closes a blossom tree into its planar map: matches each black leaf with
/// the first available white leaf counterclockwise; for charge 1 the single
/// unmatched white leaf becomes the incoming leg and the root the outgoing
/// one.  Charge 0 trees produce a one-leg map (no incoming leg).
HalfEdgeMap close_tree(const BlossomTree& t);

/// BFS distance from F0 to F1, counting crossed edges.  With `directed`,
/// a crossing is allowed only with the white endpoint on the right (the
/// bipartite distance); edges without two colored endpoints stay two-way.
int dual_distance(const HalfEdgeMap& m, bool directed = false);

/// The iterative cutting procedure applied to a closed two-leg map; inverse
/// of close_tree on charge-1 trees.
BlossomTree cut_map(const HalfEdgeMap& m, OracleFamily family, int p);

}  // namespace mapdist
