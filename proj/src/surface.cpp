#include "klein/surface.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "klein/errors.hpp"

namespace klein {

namespace {

std::array<int, 2> sorted_pair(int u, int v) { return u < v ? std::array{u, v} : std::array{v, u}; }

// Orients triangles consistently by breadth-first propagation across shared
// edges (triangle 0 of each component keeps its given order). Returns false
// on a parity contradiction.
bool propagate_orientation(std::vector<std::array<int, 3>>& tris,
                           const std::vector<std::vector<int>>& edgeTriangles,
                           const std::map<std::array<int, 2>, int>& edgeIndex)
{
    const int T = static_cast<int>(tris.size());
    std::vector<int> state(T, 0); // 0 unvisited, 1 oriented
    auto edgeDirection = [](const std::array<int, 3>& t, int u, int v) {
        // +1 if boundary of t traverses u->v, -1 if v->u
        for (int i = 0; i < 3; ++i) {
            if (t[i] == u && t[(i + 1) % 3] == v)
                return +1;
            if (t[i] == v && t[(i + 1) % 3] == u)
                return -1;
        }
        return 0;
    };

    for (int seed = 0; seed < T; ++seed) {
        if (state[seed])
            continue;
        state[seed] = 1;
        std::deque<int> queue{seed};
        while (!queue.empty()) {
            const int t = queue.front();
            queue.pop_front();
            for (int i = 0; i < 3; ++i) {
                const int u = tris[t][i], v = tris[t][(i + 1) % 3];
                const auto it = edgeIndex.find(sorted_pair(u, v));
                if (it == edgeIndex.end())
                    continue;
                for (int t2 : edgeTriangles[it->second]) {
                    if (t2 == t)
                        continue;
                    const int d1 = edgeDirection(tris[t], u, v);
                    const int d2 = edgeDirection(tris[t2], u, v);
                    if (state[t2] == 0) {
                        if (d1 == d2)
                            std::swap(tris[t2][1], tris[t2][2]);
                        state[t2] = 1;
                        queue.push_back(t2);
                    } else if (d1 == d2) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

// Cyclic neighbor order around each vertex. With an orientation, link edges
// are directed (triangle (v,a,b) gives a->b at v) and the cycle is traversed
// along that direction; otherwise an undirected walk is attempted.
std::vector<std::vector<int>> compute_links(int vertexCount,
                                            const std::vector<std::array<int, 3>>& tris,
                                            bool oriented)
{
    std::vector<std::vector<std::array<int, 2>>> linkEdges(vertexCount);
    for (const auto& t : tris) {
        for (int i = 0; i < 3; ++i) {
            const int v = t[i], a = t[(i + 1) % 3], b = t[(i + 2) % 3];
            linkEdges[v].push_back(oriented ? std::array{a, b} : sorted_pair(a, b));
        }
    }

    std::vector<std::vector<int>> links(vertexCount);
    for (int v = 0; v < vertexCount; ++v) {
        const auto& es = linkEdges[v];
        if (es.empty())
            continue;
        if (oriented) {
            std::map<int, int> next;
            bool good = true;
            for (const auto& e : es)
                good = good && next.emplace(e[0], e[1]).second;
            if (!good || next.size() != es.size())
                continue;
            std::vector<int> cycle;
            int cur = es[0][0];
            do {
                cycle.push_back(cur);
                auto it = next.find(cur);
                if (it == next.end()) {
                    cycle.clear();
                    break;
                }
                cur = it->second;
            } while (cur != es[0][0] && cycle.size() <= next.size());
            if (cycle.size() == next.size() && !cycle.empty() && cur == es[0][0])
                links[v] = std::move(cycle);
        } else {
            // undirected multigraph walk; requires every node of degree 2
            std::map<int, std::vector<std::pair<int, int>>> adj; // node -> (other, edge id)
            for (int i = 0; i < static_cast<int>(es.size()); ++i) {
                adj[es[i][0]].push_back({es[i][1], i});
                adj[es[i][1]].push_back({es[i][0], i});
            }
            bool degree2 = true;
            for (const auto& [node, nbrs] : adj)
                degree2 = degree2 && nbrs.size() == 2;
            if (!degree2 || adj.size() != es.size())
                continue;
            std::vector<int> cycle;
            std::vector<bool> used(es.size(), false);
            int cur = es[0][0];
            int steps = 0;
            while (steps <= static_cast<int>(es.size())) {
                cycle.push_back(cur);
                int nxt = -1;
                for (const auto& [other, id] : adj[cur]) {
                    if (!used[id]) {
                        used[id] = true;
                        nxt = other;
                        break;
                    }
                }
                if (nxt == -1)
                    break;
                cur = nxt;
                ++steps;
            }
            if (cycle.size() == es.size() + 1 && cycle.front() == cycle.back()) {
                cycle.pop_back();
                links[v] = std::move(cycle);
            }
        }
    }
    return links;
}

} // namespace

SimplicialSurface SimplicialSurface::from_triangles(int vertexCount,
                                                    std::vector<std::array<int, 3>> triangles,
                                                    std::vector<std::string> labels)
{
    SimplicialSurface s;
    s.vertexCount = vertexCount;
    s.labels = std::move(labels);
    s.triangles = std::move(triangles);

    std::set<std::array<int, 2>> edgeSet;
    for (const auto& t : s.triangles) {
        edgeSet.insert(sorted_pair(t[0], t[1]));
        edgeSet.insert(sorted_pair(t[1], t[2]));
        edgeSet.insert(sorted_pair(t[0], t[2]));
    }
    s.edges.assign(edgeSet.begin(), edgeSet.end());
    for (int i = 0; i < static_cast<int>(s.edges.size()); ++i)
        s.edgeIndex[s.edges[i]] = i;

    s.edgeTriangles.assign(s.edges.size(), {});
    for (int t = 0; t < static_cast<int>(s.triangles.size()); ++t) {
        const auto& tri = s.triangles[t];
        s.edgeTriangles[s.edgeIndex.at(sorted_pair(tri[0], tri[1]))].push_back(t);
        s.edgeTriangles[s.edgeIndex.at(sorted_pair(tri[1], tri[2]))].push_back(t);
        s.edgeTriangles[s.edgeIndex.at(sorted_pair(tri[0], tri[2]))].push_back(t);
    }

    const bool oriented = propagate_orientation(s.triangles, s.edgeTriangles, s.edgeIndex);
    s.links = compute_links(vertexCount, s.triangles, oriented);
    return s;
}

bool SimplicialSurface::hasEdge(int u, int v) const
{
    return edgeIndex.count(sorted_pair(u, v)) != 0;
}

std::string SimplicialSurface::vertexName(int v) const
{
    if (v >= 0 && v < static_cast<int>(labels.size()) && !labels[v].empty())
        return labels[v];
    return "#" + std::to_string(v);
}

SurfaceReport verify_surface(const SimplicialSurface& s)
{
    SurfaceReport rep;
    rep.vertices = s.vertexCount;
    rep.edges = static_cast<int>(s.edges.size());
    rep.triangles = static_cast<int>(s.triangles.size());
    rep.euler = static_cast<std::int64_t>(rep.vertices) - rep.edges + rep.triangles;

    rep.edgesInTwoTriangles = true;
    for (size_t e = 0; e < s.edges.size(); ++e) {
        if (s.edgeTriangles[e].size() != 2) {
            rep.edgesInTwoTriangles = false;
            rep.failure = "edge {" + s.vertexName(s.edges[e][0]) + "," + s.vertexName(s.edges[e][1]) +
                          "} lies in " + std::to_string(s.edgeTriangles[e].size()) + " triangles";
            break;
        }
    }

    rep.linksSingleCycle = true;
    rep.minLinkLength = rep.vertices > 0 ? 1 << 30 : 0;
    for (int v = 0; v < s.vertexCount && rep.linksSingleCycle; ++v) {
        const int len = static_cast<int>(s.links[v].size());
        if (len == 0) {
            rep.linksSingleCycle = false;
            if (rep.failure.empty())
                rep.failure = "link of vertex " + s.vertexName(v) + " is not a single cycle";
            break;
        }
        rep.minLinkLength = std::min(rep.minLinkLength, len);
        rep.maxLinkLength = std::max(rep.maxLinkLength, len);
    }

    // connectivity over the 1-skeleton
    if (s.vertexCount > 0) {
        std::vector<bool> seen(s.vertexCount, false);
        std::deque<int> queue{0};
        seen[0] = true;
        int count = 1;
        std::vector<std::vector<int>> adj(s.vertexCount);
        for (const auto& e : s.edges) {
            adj[e[0]].push_back(e[1]);
            adj[e[1]].push_back(e[0]);
        }
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = true;
                    ++count;
                    queue.push_back(w);
                }
        }
        rep.connected = count == s.vertexCount;
    }

    // orientation: re-run propagation on a copy and confirm consistency
    {
        auto tris = s.triangles;
        rep.orientable = propagate_orientation(tris, s.edgeTriangles, s.edgeIndex);
        if (!rep.orientable && rep.failure.empty())
            rep.failure = "no consistent orientation";
    }

    rep.ok = rep.edgesInTwoTriangles && rep.linksSingleCycle && rep.orientable && rep.connected;
    if (rep.ok && (2 - rep.euler) % 2 == 0)
        rep.genus = (2 - rep.euler) / 2;
    if (rep.ok && rep.genus < 0) {
        rep.ok = false;
        rep.failure = "negative genus from Euler characteristic";
    }
    if (!rep.connected && rep.failure.empty())
        rep.failure = "1-skeleton is not connected";
    return rep;
}

SimplicialSurface build_modular_complex(const PrimeContext& ctx)
{
    const int n = vertex_count(ctx);
    const std::int64_t p = ctx.p();

    std::vector<ProjVertex> reps(n);
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) {
        reps[i] = vertex_at(ctx, i);
        labels[i] = reps[i].str();
    }

    std::vector<std::vector<char>> adjacent(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const std::int64_t det = ctx.reduce(reps[i].x * reps[j].y - reps[j].x * reps[i].y);
            if (det == 1 || det == p - 1)
                adjacent[i][j] = adjacent[j][i] = 1;
        }

    // seed triangle [1:0], [0:1], [1:1] in this orientation; the rest sorted
    const int half = static_cast<int>(ctx.halfOrder());
    const std::array<int, 3> seed{0, half, 2 * half};
    std::vector<std::array<int, 3>> tris{seed};
    std::array<int, 3> seedSorted = seed;
    std::sort(seedSorted.begin(), seedSorted.end());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!adjacent[i][j])
                continue;
            for (int k = j + 1; k < n; ++k) {
                if (adjacent[i][k] && adjacent[j][k]) {
                    const std::array<int, 3> t{i, j, k};
                    if (t != seedSorted)
                        tris.push_back(t);
                }
            }
        }

    return SimplicialSurface::from_triangles(n, std::move(tris), std::move(labels));
}

int SurfaceAction::elementIndex(const GroupElement& g) const
{
    auto it = std::lower_bound(group.begin(), group.end(), g,
                               [](const GroupElement& l, const GroupElement& r) {
                                   return l.key() < r.key();
                               });
    if (it == group.end() || !(*it == g))
        return -1;
    return static_cast<int>(it - group.begin());
}

const std::vector<int>& SurfaceAction::perm(const GroupElement& g) const
{
    const int idx = elementIndex(g);
    if (idx < 0)
        throw mixed_modulus_error("element does not belong to the attached group");
    return vertexPerm[idx];
}

SurfaceAction attach_action(SimplicialSurface s, const PrimeContext& ctx)
{
    SurfaceAction action;
    action.ctx = ctx;
    action.group = enumerate_group(ctx);
    const int n = s.vertexCount;

    std::vector<ProjVertex> reps(n);
    for (int i = 0; i < n; ++i)
        reps[i] = vertex_at(ctx, i);

    action.vertexPerm.reserve(action.group.size());
    for (const auto& g : action.group) {
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i)
            perm[i] = vertex_index(ctx, act(ctx, g, reps[i]));
        action.vertexPerm.push_back(std::move(perm));
    }

    // simplicial automorphism check: edges to edges, triangles to triangles
    std::set<std::array<int, 3>> triSet;
    for (auto t : s.triangles) {
        std::sort(t.begin(), t.end());
        triSet.insert(t);
    }
    for (size_t gi = 0; gi < action.group.size(); ++gi) {
        const auto& perm = action.vertexPerm[gi];
        for (const auto& e : s.edges)
            if (!s.hasEdge(perm[e[0]], perm[e[1]]))
                throw not_equivariant_error("element " + action.group[gi].str() +
                                            " does not preserve edge {" + s.vertexName(e[0]) +
                                            "," + s.vertexName(e[1]) + "}");
        for (auto t : s.triangles) {
            std::array<int, 3> img{perm[t[0]], perm[t[1]], perm[t[2]]};
            std::sort(img.begin(), img.end());
            if (!triSet.count(img))
                throw not_equivariant_error("element " + action.group[gi].str() +
                                            " does not preserve a triangle");
        }
    }

    // faithfulness: only the identity fixes every vertex
    int trivial = 0;
    for (size_t gi = 0; gi < action.group.size(); ++gi) {
        bool isId = true;
        for (int i = 0; i < n && isId; ++i)
            isId = action.vertexPerm[gi][i] == i;
        if (isId) {
            ++trivial;
            action.identityIndex = static_cast<int>(gi);
        }
    }
    if (trivial != 1)
        throw not_equivariant_error("action is not faithful: " + std::to_string(trivial) +
                                    " elements act trivially");

    action.surface = std::move(s);
    return action;
}

std::vector<int> fixed_vertices(const SurfaceAction& a, const GroupElement& g)
{
    const auto& perm = a.perm(g);
    std::vector<int> fixed;
    for (int i = 0; i < static_cast<int>(perm.size()); ++i)
        if (perm[i] == i)
            fixed.push_back(i);
    return fixed;
}

int rotation_step(const SurfaceAction& a, const GroupElement& g, int v)
{
    const auto& perm = a.perm(g);
    if (perm[v] != v)
        throw not_fixed_error("element " + g.str() + " does not fix vertex " +
                              a.surface.vertexName(v));
    const auto& cycle = a.surface.link(v);
    const int len = static_cast<int>(cycle.size());
    if (len == 0)
        throw not_a_surface_error("vertex " + a.surface.vertexName(v) + " has no link cycle");

    std::vector<int> position(a.surface.vertexCount, -1);
    for (int i = 0; i < len; ++i)
        position[cycle[i]] = i;
    const int m = (position[perm[cycle[0]]] - 0 + len) % len;
    for (int i = 0; i < len; ++i)
        if (cycle[(i + m) % len] != perm[cycle[i]])
            throw not_equivariant_error("link of " + a.surface.vertexName(v) +
                                        " is not rotated uniformly");
    return m;
}

SimplicialSurface stellated(const SimplicialSurface& s)
{
    const int V = s.vertexCount;
    const int T = static_cast<int>(s.triangles.size());
    std::vector<std::array<int, 3>> tris;
    tris.reserve(3 * static_cast<size_t>(T));
    std::vector<std::string> labels(static_cast<size_t>(V + T));
    for (int v = 0; v < V; ++v)
        labels[v] = s.vertexName(v);
    for (int t = 0; t < T; ++t) {
        const auto& tri = s.triangles[t];
        const int m = V + t;
        labels[m] = "bary(" + s.vertexName(tri[0]) + "," + s.vertexName(tri[1]) + "," +
                    s.vertexName(tri[2]) + ")";
        tris.push_back({m, tri[0], tri[1]});
        tris.push_back({m, tri[1], tri[2]});
        tris.push_back({m, tri[2], tri[0]});
    }
    return SimplicialSurface::from_triangles(V + T, std::move(tris), std::move(labels));
}

std::vector<std::vector<int>> stellated_action(const SimplicialSurface& base,
                                               const std::vector<std::vector<int>>& basePerms,
                                               const SimplicialSurface& stel)
{
    const int V = base.vertexCount;
    std::map<std::array<int, 3>, int> triIndex;
    for (int t = 0; t < static_cast<int>(base.triangles.size()); ++t) {
        auto key = base.triangles[t];
        std::sort(key.begin(), key.end());
        triIndex[key] = t;
    }

    std::vector<std::vector<int>> out;
    out.reserve(basePerms.size());
    for (const auto& perm : basePerms) {
        std::vector<int> ext(static_cast<size_t>(stel.vertexCount));
        for (int v = 0; v < V; ++v)
            ext[v] = perm[v];
        for (int t = 0; t < static_cast<int>(base.triangles.size()); ++t) {
            const auto& tri = base.triangles[t];
            std::array<int, 3> img{perm[tri[0]], perm[tri[1]], perm[tri[2]]};
            std::sort(img.begin(), img.end());
            ext[V + t] = V + triIndex.at(img);
        }
        out.push_back(std::move(ext));
    }
    return out;
}

} // namespace klein
