#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klein/psl2.hpp"

namespace klein {

/// A 2-complex given by triangles over integer vertex ids. Triangle entries
/// are stored as oriented triples once an orientation pass has run; the list
/// may contain two triangles with equal vertex sets (the two-triangle sphere),
/// so incidence is tracked per triangle index.
struct SimplicialSurface {
    int vertexCount = 0;
    std::vector<std::string> labels;               // optional, size vertexCount
    std::vector<std::array<int, 2>> edges;         // sorted pairs, lexicographic
    std::vector<std::array<int, 3>> triangles;     // oriented if orientable
    std::vector<std::vector<int>> edgeTriangles;   // edge index -> incident triangle ids
    std::vector<std::vector<int>> links;           // cyclic neighbor order, empty when no cycle
    std::map<std::array<int, 2>, int> edgeIndex;   // sorted pair -> edge id

    static SimplicialSurface from_triangles(int vertexCount,
                                            std::vector<std::array<int, 3>> triangles,
                                            std::vector<std::string> labels = {});

    bool hasEdge(int u, int v) const;
    const std::vector<int>& link(int v) const { return links[static_cast<size_t>(v)]; }
    std::string vertexName(int v) const;
};

struct SurfaceReport {
    bool ok = false;
    std::string failure; // names the offending vertex/edge when not ok

    int vertices = 0, edges = 0, triangles = 0;
    std::int64_t euler = 0;
    std::int64_t genus = -1;
    bool connected = false;
    bool edgesInTwoTriangles = false;
    bool linksSingleCycle = false;
    bool orientable = false;
    int minLinkLength = 0, maxLinkLength = 0;
};

/// Closed-surface checks: every edge in exactly two triangles, every link a
/// single cycle, a global orientation, Euler characteristic and genus.
SurfaceReport verify_surface(const SimplicialSurface& s);

/// The complex K on V_p: vertices +-(x,y), edges where the 2x2 determinant of
/// representatives is +-1 mod p, triangles where three edges close up. Vertex
/// order is slot-major (infinity column first), level ascending.
SimplicialSurface build_modular_complex(const PrimeContext& ctx);

struct SurfaceAction {
    PrimeContext ctx;
    SimplicialSurface surface;
    std::vector<GroupElement> group;            // enumeration order
    std::vector<std::vector<int>> vertexPerm;   // per element, vertex id -> vertex id
    int identityIndex = -1;

    int elementIndex(const GroupElement& g) const; // -1 if absent
    const std::vector<int>& perm(const GroupElement& g) const;
};

/// Attaches the PSL(2,p) action to the modular complex; verifies every
/// element induces a simplicial automorphism and the action is faithful and
/// vertex-transitive. Throws not_equivariant_error with a counterexample.
SurfaceAction attach_action(SimplicialSurface s, const PrimeContext& ctx);

std::vector<int> fixed_vertices(const SurfaceAction& a, const GroupElement& g);

/// The shift m such that g advances the oriented link cycle of the fixed
/// vertex v by m positions. Throws not_fixed_error when g does not fix v.
int rotation_step(const SurfaceAction& a, const GroupElement& g, int v);

/// Barycentric stellation: one new vertex per triangle, each original
/// triangle replaced by three. New vertices are appended after the originals.
SimplicialSurface stellated(const SimplicialSurface& s);

/// Extends vertex permutations of `base` automorphisms to its stellation
/// (barycenters follow the triangle permutation).
std::vector<std::vector<int>> stellated_action(const SimplicialSurface& base,
                                               const std::vector<std::vector<int>>& basePerms,
                                               const SimplicialSurface& stel);

} // namespace klein
