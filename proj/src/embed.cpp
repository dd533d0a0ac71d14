#include "klein/embed.hpp"

#include <algorithm>
#include <set>

#include "klein/errors.hpp"

namespace klein {

ComplexEmbedding complex_embedding(const SurfaceAction& a)
{
    const PrimeContext& ctx = a.ctx;
    const int n = a.surface.vertexCount;
    ComplexEmbedding e;
    e.p = ctx.p();
    e.slot.resize(n);
    e.phase.resize(n);
    for (int i = 0; i < n; ++i) {
        const ProjVertex v = vertex_at(ctx, i);
        e.slot[i] = v.slot;
        e.phase[i] = v.level;
    }
    return e;
}

MonomialMatrix rho_of(const PrimeContext& ctx, const GroupElement& g)
{
    const int slots = static_cast<int>(ctx.p()) + 1;
    MonomialMatrix m;
    m.p = ctx.p();
    m.perm.resize(slots);
    m.phase.resize(slots);
    for (int s = 0; s < slots; ++s) {
        const ProjVertex image = act(ctx, g, slot_representative(ctx, s));
        m.perm[s] = image.slot;
        m.phase[s] = image.level;
    }
    return m;
}

EquivarianceResult check_equivariance(const ComplexEmbedding& e, const SurfaceAction& a,
                                      const GroupElement& g)
{
    const std::int64_t half = (e.p - 1) / 2;
    const MonomialMatrix rho = rho_of(a.ctx, g);
    const auto& perm = a.perm(g);
    for (int v = 0; v < static_cast<int>(perm.size()); ++v) {
        const int lhsSlot = e.slot[perm[v]];
        const int lhsPhase = e.phase[perm[v]];
        const int rhsSlot = rho.perm[e.slot[v]];
        const int rhsPhase = static_cast<int>((e.phase[v] + rho.phase[e.slot[v]]) % half);
        if (lhsSlot != rhsSlot || lhsPhase != rhsPhase)
            return {false, v};
    }
    return {true, -1};
}

Eigen::VectorXcd complex_coordinates(const PrimeContext& ctx, const ComplexEmbedding& e, int v)
{
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(ctx.p() + 1);
    out(e.slot[v]) = ctx.phaseValue(e.phase[v]);
    return out;
}

EmbeddedMesh realified_mesh(const PrimeContext& ctx, const ComplexEmbedding& e,
                            const SimplicialSurface& s)
{
    const Eigen::Index n = ctx.p() + 1;
    EmbeddedMesh mesh;
    mesh.ambientDim = static_cast<int>(2 * n);
    mesh.triangles = s.triangles;
    mesh.coords.reserve(s.vertexCount);
    for (int v = 0; v < s.vertexCount; ++v) {
        const Eigen::VectorXcd xi = complex_coordinates(ctx, e, v);
        Eigen::VectorXd rv(2 * n);
        rv.head(n) = xi.real();
        rv.tail(n) = xi.imag();
        mesh.coords.push_back(std::move(rv));
    }
    return mesh;
}

EmbeddedMesh real_embedding(const PrimeContext& ctx, const ComplexEmbedding& e,
                            const SimplicialSurface& s, const Mat& z)
{
    if (z.rows() != ctx.p() + 1 || z.cols() != ctx.p() + 1)
        throw std::invalid_argument("conjugating basis has the wrong shape for this p");
    EmbeddedMesh mesh;
    mesh.ambientDim = static_cast<int>(z.rows());
    mesh.triangles = s.triangles;
    mesh.coords.reserve(s.vertexCount);
    for (int v = 0; v < s.vertexCount; ++v) {
        const Eigen::VectorXcd xi = complex_coordinates(ctx, e, v);
        mesh.coords.push_back((z.adjoint() * xi).real());
    }
    return mesh;
}

namespace {

struct SimplexSets {
    std::set<int> vertices;
    std::set<std::array<int, 2>> edges;
    std::set<std::array<int, 3>> triangles;

    bool operator==(const SimplexSets&) const = default;

    SimplexSets intersect(const SimplexSets& o) const
    {
        SimplexSets out;
        std::set_intersection(vertices.begin(), vertices.end(), o.vertices.begin(),
                              o.vertices.end(), std::inserter(out.vertices, out.vertices.end()));
        std::set_intersection(edges.begin(), edges.end(), o.edges.begin(), o.edges.end(),
                              std::inserter(out.edges, out.edges.end()));
        std::set_intersection(triangles.begin(), triangles.end(), o.triangles.begin(),
                              o.triangles.end(),
                              std::inserter(out.triangles, out.triangles.end()));
        return out;
    }
};

std::array<int, 2> spair(int a, int b) { return a < b ? std::array{a, b} : std::array{b, a}; }

SimplexSets closed_star(const SimplicialSurface& s, int v)
{
    SimplexSets out;
    for (const auto& t : s.triangles) {
        if (t[0] != v && t[1] != v && t[2] != v)
            continue;
        std::array<int, 3> key = t;
        std::sort(key.begin(), key.end());
        out.triangles.insert(key);
        for (int i = 0; i < 3; ++i) {
            out.vertices.insert(t[i]);
            out.edges.insert(spair(t[i], t[(i + 1) % 3]));
        }
    }
    for (const auto& e : s.edges)
        if (e[0] == v || e[1] == v) {
            out.edges.insert(e);
            out.vertices.insert(e[0]);
            out.vertices.insert(e[1]);
        }
    return out;
}

SimplexSets link_of(const SimplicialSurface& s, int v)
{
    SimplexSets out;
    for (const auto& t : s.triangles) {
        for (int i = 0; i < 3; ++i) {
            if (t[i] == v) {
                out.vertices.insert(t[(i + 1) % 3]);
                out.vertices.insert(t[(i + 2) % 3]);
                out.edges.insert(spair(t[(i + 1) % 3], t[(i + 2) % 3]));
            }
        }
    }
    for (const auto& e : s.edges) {
        if (e[0] == v)
            out.vertices.insert(e[1]);
        else if (e[1] == v)
            out.vertices.insert(e[0]);
    }
    return out;
}

} // namespace

UmbrellaResult umbrella_embed(const SimplicialSurface& s, const std::vector<bool>& inU,
                              const std::vector<std::vector<int>>* actionPerms)
{
    const int n = s.vertexCount;
    if (static_cast<int>(inU.size()) != n)
        throw std::invalid_argument("partition flag size does not match vertex count");

    std::vector<int> uVerts, vVerts;
    for (int v = 0; v < n; ++v)
        (inU[v] ? uVerts : vVerts).push_back(v);

    // Hypotheses of the umbrella construction.
    std::vector<SimplexSets> stars(n), links(n);
    for (int u : uVerts) {
        stars[u] = closed_star(s, u);
        links[u] = link_of(s, u);
        for (int w : links[u].vertices)
            if (inU[w])
                throw hypothesis_error("link of U-vertex " + s.vertexName(u) +
                                       " contains U-vertex " + s.vertexName(w));
    }
    for (size_t i = 0; i < uVerts.size(); ++i)
        for (size_t j = i + 1; j < uVerts.size(); ++j) {
            const int v = uVerts[i], w = uVerts[j];
            if (!(stars[v].intersect(stars[w]) == links[v].intersect(links[w])))
                throw hypothesis_error("St(v) and St(w) meet outside Lk(v) and Lk(w) for v=" +
                                       s.vertexName(v) + ", w=" + s.vertexName(w));
            if (links[v].vertices == links[w].vertices)
                throw hypothesis_error("U-vertices " + s.vertexName(v) + " and " +
                                       s.vertexName(w) + " have identical link vertex sets");
        }

    UmbrellaResult res;
    const int dim = static_cast<int>(vVerts.size());
    res.basisIndex.assign(n, -1);
    for (int i = 0; i < dim; ++i)
        res.basisIndex[vVerts[i]] = i;

    res.mesh.ambientDim = dim;
    res.mesh.triangles = s.triangles;
    res.mesh.coords.assign(n, Eigen::VectorXd::Zero(dim));
    for (int i = 0; i < dim; ++i)
        res.mesh.coords[vVerts[i]](i) = 1.0;
    for (int u : uVerts) {
        Eigen::VectorXd sum = Eigen::VectorXd::Zero(dim);
        for (int w : links[u].vertices)
            sum(res.basisIndex[w]) += 1.0;
        res.mesh.coords[u] = std::move(sum);
    }

    if (actionPerms) {
        for (const auto& perm : *actionPerms)
            for (int v = 0; v < n; ++v)
                if (inU[perm[v]] != inU[v])
                    throw hypothesis_error("action does not preserve the U/V split at vertex " +
                                           s.vertexName(v));
        res.axisPerms.reserve(actionPerms->size());
        res.equivariant = true;
        for (const auto& perm : *actionPerms) {
            std::vector<int> axisPerm(dim);
            for (int i = 0; i < dim; ++i)
                axisPerm[i] = res.basisIndex[perm[vVerts[i]]];
            // exact equivariance: permuted coordinates match the image vertex
            for (int v = 0; v < n && res.equivariant; ++v) {
                const auto& src = res.mesh.coords[v];
                const auto& dst = res.mesh.coords[perm[v]];
                for (int i = 0; i < dim; ++i)
                    if (dst(axisPerm[i]) != src(i)) {
                        res.equivariant = false;
                        break;
                    }
            }
            res.axisPerms.push_back(std::move(axisPerm));
        }
    }
    return res;
}

} // namespace klein
