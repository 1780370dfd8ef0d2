#pragma once

#include "mockgl/gauss.hpp"
#include "mockgl/matrix.hpp"

#include <array>
#include <vector>

namespace mgl {

/// Half-edge types at a crossing.
enum class HalfEdge { Oout = 0, Uout = 1, Oin = 2, Uin = 3 };

/// Arc k runs from passage k to passage k+1; its tail dart is 2k and its head dart 2k+1.
struct Dart {
    int vertex = 0;  // index into Diagram::crossings
    HalfEdge type = HalfEdge::Oout;
    int sigma = 0;   // next dart counterclockwise around the vertex
    int face = 0;
    int face_pos = 0;
};

inline int arc_of(int dart) { return dart / 2; }
inline bool is_tail(int dart) { return dart % 2 == 0; }
inline int alpha(int dart) { return dart ^ 1; }

struct CarrierSurface {
    int vertices = 0;
    int edges = 0;
    std::vector<Dart> darts;
    /// Each face is a closed dart walk; the face lies to the right of the walk.
    std::vector<std::vector<int>> faces;
    int euler_characteristic = 2;
    int genus = 0;
    /// One (face right of arc, face left of arc) pair per arc.
    std::vector<std::pair<int, int>> face_adjacency;
    /// darts_at[v] lists the four darts of vertex v indexed by HalfEdge.
    std::vector<std::array<int, 4>> darts_at;

    int phi(int dart) const { return darts[alpha(dart)].sigma; }
    int right_face(int arc) const { return face_adjacency[arc].first; }
    int left_face(int arc) const { return face_adjacency[arc].second; }
};

CarrierSurface build_carrier(const Diagram& d);

/// Integer 1-chain on the arcs.
using Chain = std::vector<Int>;

Chain chain_of_walk(const CarrierSurface& s, const std::vector<int>& walk);
/// Pushes a closed dart walk to its right and records the signed crossings with each arc.
Chain push_right(const CarrierSurface& s, const std::vector<int>& walk);
/// Algebraic intersection x . y of a chain with a pushed-off dual chain.
Int pair_chains(const Chain& x, const Chain& y_dual);
Int intersection(const CarrierSurface& s, const std::vector<int>& x, const std::vector<int>& y);

struct IntersectionData {
    std::vector<std::vector<int>> basis;  // closed dart walks
    IntMatrix pairing;
};

/// Homology basis of the closed carrier by tree-cotree decomposition, with its intersection matrix.
IntersectionData face_cycle_pairing(const CarrierSurface& s);
IntersectionData pairing_of(const CarrierSurface& s, const std::vector<std::vector<int>>& walks);

}  // namespace mgl
