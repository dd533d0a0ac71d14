#include <doctest.h>

#include <map>
#include <set>
#include <random>

#include "klein/certify.hpp"
#include "klein/embed.hpp"
#include "klein/errors.hpp"
#include "klein/realify.hpp"
#include "oracles.hpp"

using namespace klein;

TEST_CASE("Riemann-Hurwitz arithmetic")
{
    CHECK(riemann_hurwitz_genus(0, {2, 3, 7}, 168) == 3);
    CHECK(riemann_hurwitz_genus(1, {}, 1) == 1);
    CHECK(riemann_hurwitz_order(0, {2, 4, 8}, 2) == 16);
    CHECK(riemann_hurwitz_order(0, {2, 4, 6}, 2) == 24);
    CHECK(riemann_hurwitz_genus(0, {2, 3, 13}, 1092) == 50);
    // orders of the groups behind the two-triangle tilings agree both ways
    for (std::int64_t p : {7, 11, 13})
        CHECK(riemann_hurwitz_order(0, {2, 3, p}, (p * p - 1) * (p - 6) / 24 + 1) ==
              p * (p * p - 1) / 2);
    CHECK_THROWS_AS(riemann_hurwitz_genus(0, {2, 3, 7}, 100), non_integral_error);
    CHECK_THROWS_AS(riemann_hurwitz_genus(0, {2, 2}, 3), non_integral_error);
    CHECK_THROWS_AS(riemann_hurwitz_order(0, {2, 4, 4}, 5), non_integral_error);
}

TEST_CASE("signature families match the brute-force enumeration")
{
    const auto table = enumerate_large_signatures();
    REQUIRE(table.families.size() == 4);
    CHECK(table.families[0].text() == "(2,3,r), r >= 7");

    const std::int64_t bound = 60;
    const auto brute = oracles::brute_signatures(bound);
    for (const auto& t : brute)
        CHECK(table.contains(t[0], t[1], t[2]));
    // and conversely, every family member below the bound appears in brute
    std::int64_t familyCount = 0;
    for (std::int64_t p = 2; p <= bound; ++p)
        for (std::int64_t q = p; q <= bound; ++q)
            for (std::int64_t r = q; r <= bound; ++r)
                familyCount += table.contains(p, q, r);
    CHECK(familyCount == static_cast<std::int64_t>(brute.size()));

    const auto finite = table.boundedTriples();
    CHECK(finite.size() == 7 + 3 + 2); // (2,4,5..11), (2,5,5..7), (3,3,4..5)
}

TEST_CASE("regular representations of small groups")
{
    for (int m = 5; m <= 12; ++m) {
        const auto res = regular_representation(GroupTable::cyclic(m));
        CHECK(res.allPass());
        CHECK(res.fixDimWholeGroup == 1);
        CHECK(res.upperBound == m);
    }
    for (int m = 3; m <= 6; ++m) {
        const auto res = regular_representation(GroupTable::dihedral(m));
        CHECK(res.allPass());
        CHECK(res.fixDimWholeGroup == 1);
        CHECK(res.upperBound == 2 * m);
    }

    const auto z4 = regular_representation(GroupTable::cyclic(4));
    CHECK_FALSE(z4.codimension.ok); // n = 4 violates n > 4
    CHECK(z4.dimensionInequality.ok);
    CHECK(z4.eigenvalue.ok);

    // nontrivial translation in Z/5 is one 5-cycle
    const auto z5 = regular_representation(GroupTable::cyclic(5));
    CHECK(z5.rep.fixDim({1}) == 1);
}

TEST_CASE("cyclic block representations")
{
    // antipodal map: single block with exponent 1 at m = 2
    const auto anti = cyclic_block_rep(2, {1}, false);
    CHECK(max_abs(RMat(anti.matrix(1) + RMat::Identity(2, 2))) < 1e-15);

    // d = 2t+1 construction at m = 5, t = 2: exponents r_k with k r_k = 1
    const auto table5 = GroupTable::cyclic(5);
    const auto rep5 = cyclic_block_rep(5, {1, 3}, true); // 1*1 = 1, 2*3 = 1
    OrbifoldAction act5;
    act5.cones = {{5, 1, {1}}, {5, 4, {1}}, {5, 2, {1}}, {5, 3, {1}}};
    // rotation data rewritten for the canonical generator: 2 pi r/m at each cone
    OrbifoldAction canonical5;
    canonical5.cones = {{5, 1, {1, 4, 3, 2}}};
    CHECK(check_dimension_inequality(rep5, table5, act5).ok);
    CHECK(check_eigenvalue_condition(rep5, canonical5).ok);
    CHECK(check_codimension(rep5, table5).ok);
    CHECK(rep5.dim() == 5);

    // the five-dimensional representation of Z/m with two equal blocks
    for (int m : {3, 5, 8}) {
        const auto table = GroupTable::cyclic(m);
        const auto rep = cyclic_block_rep(m, {1, 1}, true);
        OrbifoldAction act;
        act.cones.assign(static_cast<size_t>(m), Cone{m, 1, {1}});
        CHECK(rep.dim() == 5);
        CHECK(check_dimension_inequality(rep, table, act).ok);
        CHECK(check_eigenvalue_condition(rep, act).ok);
        CHECK(check_codimension(rep, table).ok);
    }
}

TEST_CASE("constructed violations are caught")
{
    // rep of Z/4 through the quotient Z/2: element 2 acts trivially
    const auto table4 = GroupTable::cyclic(4);
    const auto rep = cyclic_block_rep(4, {2}, true);
    OrbifoldAction act;
    act.cones = {{4, 1, {1}}};
    const auto dims = check_dimension_inequality(rep, table4, act);
    CHECK_FALSE(dims.ok);

    // order-5 cone with rotation exponent 2 against a rep holding only e^{2 pi i/5}
    const auto rep5 = cyclic_block_rep(5, {1}, false);
    OrbifoldAction act5;
    act5.cones = {{5, 1, {2}}};
    CHECK_FALSE(check_eigenvalue_condition(rep5, act5).ok);

    // any 4-dimensional representation fails the codimension clause
    const auto rep4 = cyclic_block_rep(5, {1, 2}, false);
    CHECK_FALSE(check_codimension(rep4, GroupTable::cyclic(5)).ok);
}

TEST_CASE("overgroup reduction soundness against the all-subgroups oracle")
{
    std::vector<GroupTable> tables;
    for (int m = 2; m <= 16; ++m)
        tables.push_back(GroupTable::cyclic(m));
    for (int m = 3; m <= 8; ++m)
        tables.push_back(GroupTable::dihedral(m));

    for (const auto& table : tables) {
        const auto subgroups = oracles::all_subgroups(table);

        // representation: permutation action on the cosets of each subgroup
        for (const auto& K : subgroups) {
            std::vector<int> cosetOf(static_cast<size_t>(table.n), -1);
            int cosets = 0;
            for (int x = 0; x < table.n; ++x) {
                if (cosetOf[x] != -1)
                    continue;
                for (int k : K)
                    cosetOf[table.mul[x][k]] = cosets;
                ++cosets;
            }
            std::vector<std::vector<int>> perms(static_cast<size_t>(table.n),
                                                std::vector<int>(static_cast<size_t>(cosets)));
            for (int g = 0; g < table.n; ++g)
                for (int x = 0; x < table.n; ++x)
                    perms[g][cosetOf[x]] = cosetOf[table.mul[g][x]];
            const PermutationRep rep(std::move(perms));

            std::map<std::vector<int>, int> fix;
            for (const auto& s : subgroups)
                fix[s] = rep.fixDim(s);

            // sandwich property: equality between nested subgroups propagates
            // to every single-generator extension in between
            for (const auto& S : subgroups)
                for (const auto& H : subgroups) {
                    if (S.size() >= H.size() ||
                        !std::includes(H.begin(), H.end(), S.begin(), S.end()))
                        continue;
                    if (fix[S] != fix[H])
                        continue;
                    for (int h : H) {
                        if (std::binary_search(S.begin(), S.end(), h))
                            continue;
                        std::vector<int> gens = S;
                        gens.push_back(h);
                        CHECK(rep.fixDim(table.closure(std::move(gens))) == fix[S]);
                    }
                }
        }
    }
}

TEST_CASE("regular representation with cone data and the global clause")
{
    // Z/5 acting with two full-order cones over a genus-1 base: both cone
    // points are fixed by the whole group, so dim Fix(rho(G)) > 0 is required
    const auto table = GroupTable::cyclic(5);
    const auto res = regular_representation(table);
    OrbifoldAction act;
    act.baseGenus = 1;
    act.cones = {{5, 1, {1}}, {5, 4, {1}}};
    CHECK(riemann_hurwitz_genus(1, {5, 5}, 5) == 5);
    CHECK(check_dimension_inequality(res.rep, table, act).ok);
    CHECK(check_eigenvalue_condition(res.rep, act).ok);
}

TEST_CASE("modular conditions at p = 7 against the explicit cone data")
{
    const std::int64_t p = 7;
    const auto ctx = PrimeContext::build(p);
    const auto group = enumerate_group(ctx);
    const auto ig = index_group(group);
    const Mat y = build_y(ctx);
    const Mat A = compute_A(ctx, rho_of(ctx, GroupElement::genA(p)), y);
    const auto basis = build_basis(ctx, A);

    std::vector<RMat> mats(static_cast<size_t>(ig.table.n));
    for (int i = 0; i < ig.table.n; ++i)
        mats[static_cast<size_t>(i)] = real_rep_of(ctx, basis, rho_of(ctx, ig.byId[i]));
    const DenseRealRep rep0(std::move(mats));

    // rho_0(C) carries e^{+-2 pi i (s*)^2 / 7} for every s
    const int cId = ig.idOf(GroupElement::genC(p));
    for (std::int64_t s = 1; s <= 3; ++s) {
        const std::int64_t m = ctx.reduce(ctx.inv(s) * ctx.inv(s));
        CHECK(rep0.hasEigenvalue(cId, m, p));
        CHECK(rep0.hasEigenvalue(cId, -m, p));
    }
    CHECK(rep0.eigenvalueMultiplicity(ig.idOf(GroupElement::genA(p)), 1, 2) >= 2);

    OrbifoldAction orb;
    std::vector<std::int64_t> rotations;
    for (std::int64_t s = 1; s <= 3; ++s)
        rotations.push_back(ctx.reduce(ctx.inv(s) * ctx.inv(s)));
    orb.cones = {{2, ig.idOf(GroupElement::genA(p)), {1}},
                 {3, ig.idOf(GroupElement::genB(p)), {1}},
                 {p, ig.idOf(GroupElement::genC(p)), rotations}};
    CHECK(check_dimension_inequality(rep0, ig.table, orb).ok);
    CHECK(check_eigenvalue_condition(rep0, orb).ok);
    CHECK(check_codimension(rep0, ig.table).ok);
}

TEST_CASE("dimension inequality over every subgroup of PSL(2,7)")
{
    // the checker only walks single-generator extensions; compare against the
    // unreduced definition by enumerating all 179 subgroups
    const std::int64_t p = 7;
    const auto ctx = PrimeContext::build(p);
    const auto ig = index_group(enumerate_group(ctx));
    const Mat y = build_y(ctx);
    const Mat A = compute_A(ctx, rho_of(ctx, GroupElement::genA(p)), y);
    const auto basis = build_basis(ctx, A);
    std::vector<RMat> mats(static_cast<size_t>(ig.table.n));
    for (int i = 0; i < ig.table.n; ++i)
        mats[static_cast<size_t>(i)] = real_rep_of(ctx, basis, rho_of(ctx, ig.byId[i]));
    const DenseRealRep rep0(std::move(mats));

    const auto subgroups = oracles::all_subgroups(ig.table);
    REQUIRE(subgroups.size() == 179);
    std::map<std::vector<int>, int> fix;
    for (const auto& s : subgroups)
        fix[s] = rep0.fixDim(s);

    const std::vector<std::vector<int>> stabilizers = {
        {0},
        ig.table.powers(ig.idOf(GroupElement::genA(p))),
        ig.table.powers(ig.idOf(GroupElement::genB(p))),
        ig.table.powers(ig.idOf(GroupElement::genC(p)))};
    for (const auto& S : stabilizers) {
        const int fS = S.size() == 1 ? rep0.dim() : fix.at(S);
        for (const auto& H : subgroups) {
            if (H.size() <= S.size() || !std::includes(H.begin(), H.end(), S.begin(), S.end()))
                continue;
            CHECK(fix.at(H) < fS);
        }
    }
}

TEST_CASE("nontrivial C powers split into the two quadratic-residue classes")
{
    // the trace bookkeeping of the p = 1 mod 4 branch rests on this split;
    // verify it by explicit conjugation search at p = 13
    const std::int64_t p = 13;
    const auto ctx = PrimeContext::build(p);
    const auto group = enumerate_group(ctx);
    const auto C = GroupElement::genC(p);

    std::set<std::int64_t> conjugateToC;
    for (std::int64_t j = 1; j < p; ++j) {
        const auto Cj = pow(C, j);
        for (const auto& g : group)
            if (mul(mul(g, C), inverse(g)) == Cj) {
                conjugateToC.insert(j);
                break;
            }
    }
    std::set<std::int64_t> residues;
    for (std::int64_t s = 1; s < p; ++s)
        residues.insert(ctx.reduce(s * s));
    CHECK(conjugateToC == residues);
    CHECK(conjugateToC.size() == (p - 1) / 2);
    CHECK(conjugateToC.count(ctx.primitiveRoot()) == 0); // C^r represents the other class
}

TEST_CASE("full certificate at p = 7")
{
    const auto cert = full_certificate(7);
    CHECK(cert.ok);
    REQUIRE(cert.conclusion.has_value());
    CHECK(*cert.conclusion == 8);
    CHECK(cert.branch == "p = 3 mod 4");
    CHECK(cert.lowerBound == 8);
    CHECK(cert.upperBound == 8);
}

TEST_CASE("certificate rejects bad p")
{
    CHECK_THROWS_AS(full_certificate(6), not_prime_error);
    CHECK_THROWS_AS(full_certificate(5), too_small_error);
}
