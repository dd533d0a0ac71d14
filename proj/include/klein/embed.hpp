#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "klein/linalg.hpp"
#include "klein/monomial.hpp"
#include "klein/surface.hpp"

namespace klein {

/// The equivariant map V_p -> C^{p+1} in exact form: vertex [s r^q : r^q]
/// carries slot  s and phase exponent q (and [r^q : 0] slot infinity), i.e.
/// e(v) = omega^{phase} eta_{slot}.
struct ComplexEmbedding {
    std::int64_t p = 0;
    std::vector<int> slot;  // per vertex id, 0 = infinity
    std::vector<int> phase; // per vertex id, mod (p-1)/2

    friend bool operator==(const ComplexEmbedding&, const ComplexEmbedding&) = default;
};

ComplexEmbedding complex_embedding(const SurfaceAction& a);

/// The monomial matrix of an arbitrary group element, obtained by rewriting
/// g([1:0]) and g([s:1]) in column/level form. Exact; a homomorphism on the
/// nose in (perm, phase) data.
MonomialMatrix rho_of(const PrimeContext& ctx, const GroupElement& g);

struct EquivarianceResult {
    bool ok = true;
    int badVertex = -1;
};

/// Exact check of e(g v) = rho(g) e(v) on every vertex.
EquivarianceResult check_equivariance(const ComplexEmbedding& e, const SurfaceAction& a,
                                      const GroupElement& g);

/// A straight-line embedded triangle mesh in R^n.
struct EmbeddedMesh {
    int ambientDim = 0;
    std::vector<Eigen::VectorXd> coords;       // per vertex
    std::vector<std::array<int, 3>> triangles; // indices into coords
};

Eigen::VectorXcd complex_coordinates(const PrimeContext& ctx, const ComplexEmbedding& e, int v);

/// Realification of the complex embedding into R^{2p+2}.
EmbeddedMesh realified_mesh(const PrimeContext& ctx, const ComplexEmbedding& e,
                            const SimplicialSurface& s);

/// The real embedding into R^{p+1}: coordinates Re(z^* xi) of each complex
/// image xi in the conjugating basis z.
EmbeddedMesh real_embedding(const PrimeContext& ctx, const ComplexEmbedding& e,
                            const SimplicialSurface& s, const Mat& z);

/// Umbrella construction: V-vertices map to distinct standard basis vectors
/// of R^{|V|}, U-vertices to the sum over their link. Hypotheses (links of U
/// inside V, star/link intersection identity, distinct link vertex sets) are
/// checked and violations throw hypothesis_error. If an action preserving the
/// split is supplied, the induced permutation representation is returned and
/// equivariance verified exactly.
struct UmbrellaResult {
    EmbeddedMesh mesh;
    std::vector<int> basisIndex;             // vertex -> coordinate axis, -1 for U-vertices
    std::vector<std::vector<int>> axisPerms; // per group element, axis permutation (empty if no action)
    bool equivariant = false;
};

UmbrellaResult umbrella_embed(const SimplicialSurface& s, const std::vector<bool>& inU,
                              const std::vector<std::vector<int>>* actionPerms = nullptr);

} // namespace klein
