#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "klein/reps.hpp"

namespace klein {

/// 2 - 2g = |G| (2 - 2 gbar - sum_k (1 - 1/n_k)); throws non_integral_error
/// when the data is inconsistent.
std::int64_t riemann_hurwitz_genus(std::int64_t baseGenus,
                                   const std::vector<std::int64_t>& coneIndices,
                                   std::int64_t groupOrder);

/// The inverse solve for |G| from the genus.
std::int64_t riemann_hurwitz_order(std::int64_t baseGenus,
                                   const std::vector<std::int64_t>& coneIndices,
                                   std::int64_t genus);

/// The signatures p <= q <= r with 5/6 < 1/p + 1/q + 1/r < 1, grouped into
/// their four families; family 1 is unbounded in r.
struct SignatureFamily {
    std::int64_t p = 0, q = 0;
    std::int64_t rMin = 0;
    std::optional<std::int64_t> rMax; // absent: unbounded
    std::string text() const;
};

struct SignatureTable {
    std::vector<SignatureFamily> families;
    bool contains(std::int64_t p, std::int64_t q, std::int64_t r) const;
    std::vector<std::array<std::int64_t, 3>> boundedTriples() const;
};

SignatureTable enumerate_large_signatures();

/// One singular-point class of the quotient orbifold: cone index n, a group
/// element generating the stabilizer, and the tangent rotation numerators of
/// that generator at the fixed points over the cone (eigenvalues
/// e^{+-2 pi i m/n}).
struct Cone {
    std::int64_t index = 2;
    int generator = 0;
    std::vector<std::int64_t> rotations;
};

struct OrbifoldAction {
    std::int64_t baseGenus = 0;
    std::vector<Cone> cones;
};

struct ConditionReport {
    std::string name;
    bool ok = true;
    std::string failure; // first witness when not ok
    std::int64_t pairsChecked = 0;

    nlohmann::json to_json() const;
};

/// Dimension inequality, quantified over the cone stabilizers (plus the
/// trivial stabilizer of regular points) and all of their single-generator
/// overgroup extensions; includes the global fixed-set clause.
ConditionReport check_dimension_inequality(const Rep& rep, const GroupTable& table,
                                           const OrbifoldAction& action);

/// Variant quantifying over every cyclic subgroup as a potential stabilizer
/// (what the regular-representation argument needs, with no action given).
ConditionReport check_dimension_inequality_all_cyclic(const Rep& rep, const GroupTable& table);

ConditionReport check_eigenvalue_condition(const Rep& rep, const OrbifoldAction& action);

/// Regular-representation flavour: every element of order s must carry all
/// s-th roots of unity, with -1 multiple for s = 2.
ConditionReport check_all_roots_eigenvalues(const Rep& rep, const GroupTable& table);

/// n > 4 and codim Fix(rho(h)) > 2 for every nontrivial h.
ConditionReport check_codimension(const Rep& rep, const GroupTable& table);

struct RegularRepResult {
    PermutationRep rep;
    ConditionReport dimensionInequality;
    ConditionReport eigenvalue;
    ConditionReport codimension;
    int fixDimWholeGroup = 0;
    std::optional<std::int64_t> upperBound; // |G| when all conditions pass

    bool allPass() const
    {
        return dimensionInequality.ok && eigenvalue.ok && codimension.ok;
    }
};

/// Left-translation permutation representation with the three conditions.
RegularRepResult regular_representation(const GroupTable& table);

/// Orthogonal representation of Z/m by 2x2 rotation blocks with the given
/// exponents, plus an optional 1-dimensional trivial block.
DenseRealRep cyclic_block_rep(int m, const std::vector<std::int64_t>& exponents, bool fixedAxis);

/// Minimal-dimension certificate assembled stage by stage; `conclusion` is
/// set only when every stage passed and the bounds meet.
struct Certificate {
    std::int64_t p = 0;
    std::string branch; // "p = 3 mod 4" or "p = 1 mod 4"
    std::optional<std::int64_t> lowerBound;
    std::optional<std::int64_t> upperBound;
    std::optional<std::int64_t> conclusion;
    nlohmann::json stages = nlohmann::json::array();
    bool ok = false;
    std::string failedStage;

    nlohmann::json to_json() const;
};

struct CertifyOptions {
    double tol = 1e-9;
    double plTol = 1e-7;
    std::uint64_t seed = 0;
    int threads = 1;
    int equivarianceSamples = 100;
};

/// The full pipeline for one prime: complex K, action, embeddings, the
/// realification, the PL-embedding oracle, the three conditions, and the
/// lower-bound argument, concluding d = p+1.
Certificate full_certificate(std::int64_t p, const CertifyOptions& opts = {});

} // namespace klein
