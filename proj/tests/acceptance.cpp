// Acceptance suite: every headline property checked end to end, one
// pass/fail line per criterion. Exits nonzero when anything fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "klein/certify.hpp"
#include "klein/embed.hpp"
#include "klein/errors.hpp"
#include "klein/geometry.hpp"
#include "klein/realify.hpp"
#include "klein/surface.hpp"
#include "oracles.hpp"

using namespace klein;

namespace {

struct Harness {
    int failures = 0;

    void criterion(int number, const std::string& label, const std::function<bool(std::string&)>& body)
    {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] criterion %2d (%s) %.2fs%s%s\n", ok ? "PASS" : "FAIL", number,
                    label.c_str(), secs, detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!ok)
            ++failures;
    }
};

bool expect(bool cond, std::string& detail, const std::string& what)
{
    if (!cond && detail.empty())
        detail = what;
    return cond;
}

} // namespace

int main()
{
    Harness h;
    const std::vector<std::int64_t> primes{7, 11, 13};

    // 1. combinatorics of K_p
    h.criterion(1, "combinatorics", [&](std::string& detail) {
        const auto start = std::chrono::steady_clock::now();
        bool ok = true;
        const std::map<std::int64_t, std::int64_t> genus{{7, 3}, {11, 26}, {13, 50}};
        for (std::int64_t p : primes) {
            const auto ctx = PrimeContext::build(p);
            const auto rep = verify_surface(build_modular_complex(ctx));
            ok &= expect(rep.ok, detail, "surface checks failed at p=" + std::to_string(p));
            ok &= expect(rep.vertices == (p * p - 1) / 2 && rep.edges == p * (p * p - 1) / 4 &&
                             rep.triangles == p * (p * p - 1) / 6,
                         detail, "counts wrong at p=" + std::to_string(p));
            ok &= expect(rep.minLinkLength == p && rep.maxLinkLength == p, detail,
                         "links are not single p-cycles");
            ok &= expect(rep.orientable, detail, "not orientable");
            ok &= expect(rep.genus == genus.at(p), detail, "genus wrong at p=" + std::to_string(p));
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        ok &= expect(secs < 5.0, detail, "runtime budget exceeded");
        return ok;
    });

    // 2. group order, relations, faithful transitive action
    h.criterion(2, "group", [&](std::string& detail) {
        bool ok = true;
        const std::map<std::int64_t, std::int64_t> sizes{{7, 168}, {11, 660}, {13, 1092}};
        for (std::int64_t p : primes) {
            const auto ctx = PrimeContext::build(p);
            const auto group = enumerate_group(ctx);
            ok &= expect(static_cast<std::int64_t>(group.size()) == sizes.at(p), detail,
                         "group order wrong at p=" + std::to_string(p));
            const auto A = GroupElement::genA(p), B = GroupElement::genB(p),
                       C = GroupElement::genC(p);
            ok &= expect(order(A) == 2 && order(B) == 3 && order(C) == p &&
                             mul(mul(A, B), C).isIdentity(),
                         detail, "generator relations fail");

            const auto action = attach_action(build_modular_complex(ctx), ctx); // throws if not faithful
            std::set<int> orbit{0};
            std::vector<int> stack{0};
            while (!stack.empty()) {
                const int v = stack.back();
                stack.pop_back();
                for (const auto& g : {A, C}) {
                    const int w = action.perm(g)[v];
                    if (orbit.insert(w).second)
                        stack.push_back(w);
                }
            }
            ok &= expect(static_cast<int>(orbit.size()) == action.surface.vertexCount, detail,
                         "action not transitive");
        }
        return ok;
    });

    // 3. exact equivariance
    h.criterion(3, "equivariance", [&](std::string& detail) {
        bool ok = true;
        for (std::int64_t p : primes) {
            const auto ctx = PrimeContext::build(p);
            const auto action = attach_action(build_modular_complex(ctx), ctx);
            const auto emb = complex_embedding(action);
            const auto group = enumerate_group(ctx);
            for (const auto& g :
                 {GroupElement::genA(p), GroupElement::genB(p), GroupElement::genC(p)})
                ok &= expect(check_equivariance(emb, action, g).ok, detail,
                             "generator equivariance fails at p=" + std::to_string(p));
            for (const auto& g : sample_elements(group, 100, 2024))
                ok &= expect(check_equivariance(emb, action, g).ok, detail,
                             "sampled equivariance fails at p=" + std::to_string(p));
        }
        return ok;
    });

    // 4. fixed points of C and local rotation numbers
    h.criterion(4, "fixed-point structure", [&](std::string& detail) {
        bool ok = true;
        for (std::int64_t p : primes) {
            const auto ctx = PrimeContext::build(p);
            const auto action = attach_action(build_modular_complex(ctx), ctx);
            const auto C = GroupElement::genC(p);
            const auto fixed = fixed_vertices(action, C);
            std::set<int> expected;
            for (std::int64_t s = 1; s <= (p - 1) / 2; ++s)
                expected.insert(vertex_index(ctx, canonicalize(ctx, s, 0)));
            ok &= expect(std::set<int>(fixed.begin(), fixed.end()) == expected, detail,
                         "fixed vertex set wrong at p=" + std::to_string(p));

            // single orbit: reachable set of one fixed vertex covers them all
            std::set<int> orbit{*expected.begin()};
            std::vector<int> stack{*expected.begin()};
            while (!stack.empty()) {
                const int v = stack.back();
                stack.pop_back();
                for (const auto& g : {GroupElement::genA(p), GroupElement::genC(p)}) {
                    const int w = action.perm(g)[v];
                    if (orbit.insert(w).second)
                        stack.push_back(w);
                }
            }
            for (int v : expected)
                ok &= expect(orbit.count(v) == 1, detail, "fixed vertices not in one orbit");

            for (std::int64_t s = 1; s <= (p - 1) / 2; ++s) {
                const std::int64_t sStar = ctx.inv(s);
                const int step =
                    rotation_step(action, C, vertex_index(ctx, canonicalize(ctx, s, 0)));
                ok &= expect(step == ctx.reduce(sStar * sStar), detail,
                             "rotation step wrong at [" + std::to_string(s) + ":0], p=" +
                                 std::to_string(p));
            }
        }
        return ok;
    });

    // 5. Appendix-style realification identities
    h.criterion(5, "realification", [&](std::string& detail) {
        bool ok = true;
        for (std::int64_t p : primes) {
            const auto ctx = PrimeContext::build(p);
            const auto rhoA = rho_of(ctx, GroupElement::genA(p));
            const auto rhoC = rho_of(ctx, GroupElement::genC(p));
            const Mat y = build_y(ctx);
            double devA = 0, devC = 0;
            const Mat A = compute_A(ctx, rhoA, y, &devA);
            compute_C(ctx, rhoC, y, &devC);
            ok &= expect(devA < 1e-10 && devC < 1e-10, detail,
                         "closed-form deviation too large at p=" + std::to_string(p));
            ok &= expect(std::abs(A(1, 1)) < 1e-12, detail, "A00 not zero");
            ok &= expect(std::abs(std::abs(A(2, 1)) - 1.0 / std::sqrt(double(p))) < 1e-12,
                         detail, "|A10| wrong");

            std::mt19937_64 rng(99);
            for (int trial = 0; trial < 20; ++trial) {
                const std::int64_t i = 1 + static_cast<std::int64_t>(rng() % (p - 1));
                const std::int64_t j = static_cast<std::int64_t>(rng() % p);
                const std::int64_t n = ctx.reduce(i * j);
                const cplx lhs = A(1 + i, 1 + j);
                const cplx rhs = ctx.phaseValue(ctx.dlog(i)) * A(2, 1 + n);
                ok &= expect(std::abs(lhs - rhs) < 1e-9, detail, "entry relation fails");
            }

            const auto basis = build_basis(ctx, A);
            const auto rz = realize(ctx, basis, rhoA, rhoC, 1e-9);
            ok &= expect(rz.maxImag < 1e-9, detail, "conjugated matrices not real");
            ok &= expect(rz.raSymmetry < 1e-12, detail, "RA not symmetric");
            ok &= expect(rz.raOrthogonality < 1e-9 && rz.rcOrthogonality < 1e-9, detail,
                         "not orthogonal");
            ok &= expect(rz.thetaDeviation < 1e-9, detail, "RC does not match theta");
        }
        return ok;
    });

    // 6. Frobenius-Schur indicator
    h.criterion(6, "frobenius-schur", [&](std::string& detail) {
        const auto start = std::chrono::steady_clock::now();
        bool ok = true;
        for (std::int64_t p : primes) {
            const auto ctx = PrimeContext::build(p);
            const auto group = enumerate_group(ctx);
            const cplx nu2 = frobenius_schur(ctx, group);
            ok &= expect(std::abs(nu2 - cplx(1.0, 0.0)) < 1e-6, detail,
                         "nu_2 != 1 at p=" + std::to_string(p));
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        ok &= expect(secs < 10.0, detail, "runtime budget exceeded");
        return ok;
    });

    // 7. fixed-space dimension relation between the 2(p+1) and (p+1) forms
    h.criterion(7, "fixed-space relation", [&](std::string& detail) {
        bool ok = true;
        const std::int64_t p = 7;
        const auto ctx = PrimeContext::build(p);
        const auto group = enumerate_group(ctx);
        const auto ig = index_group(group);
        const Mat y = build_y(ctx);
        const Mat A = compute_A(ctx, rho_of(ctx, GroupElement::genA(p)), y);
        const auto basis = build_basis(ctx, A);

        for (const auto& gen :
             {GroupElement::genA(p), GroupElement::genB(p), GroupElement::genC(p)}) {
            const auto sub = ig.table.powers(ig.idOf(gen));
            RMat avg16 = RMat::Zero(16, 16);
            RMat avg8 = RMat::Zero(8, 8);
            for (int id : sub) {
                avg16 += realified(dense_complex(ctx, rho_of(ctx, ig.byId[id])));
                avg8 += real_rep_of(ctx, basis, rho_of(ctx, ig.byId[id]));
            }
            avg16 /= double(sub.size());
            avg8 /= double(sub.size());
            const int d16 = numeric_rank(avg16, 1e-7);
            const int d8 = numeric_rank(avg8, 1e-7);
            ok &= expect(d16 == 2 * d8, detail, "dim Fix(rho) != 2 dim Fix(rho0)");
        }
        const RMat rC = real_rep_of(ctx, basis, rho_of(ctx, GroupElement::genC(p)));
        ok &= expect(8 - numeric_rank(RMat(rC - RMat::Identity(8, 8)), 1e-7) == 2, detail,
                     "dim Fix(rho0(C)) != 2");
        return ok;
    });

    // 8. PL embedding oracle over all triangle pairs at p = 7
    h.criterion(8, "pl-embedding oracle", [&](std::string& detail) {
        const auto start = std::chrono::steady_clock::now();
        const std::int64_t p = 7;
        const auto ctx = PrimeContext::build(p);
        const auto action = attach_action(build_modular_complex(ctx), ctx);
        const auto emb = complex_embedding(action);

        bool ok = true;
        const auto meshC = realified_mesh(ctx, emb, action.surface);
        const auto repC = verify_pl_embedding(meshC, 1e-7, 1);
        ok &= expect(repC.ok && repC.pairsTested == 1540, detail, "complex-embedding pairs fail");

        const Mat y = build_y(ctx);
        const Mat A = compute_A(ctx, rho_of(ctx, GroupElement::genA(p)), y);
        const auto basis = build_basis(ctx, A);
        const auto meshR = real_embedding(ctx, emb, action.surface, basis.z);
        ok &= expect(meshR.ambientDim == 8, detail, "real ambient dimension");
        const auto repR = verify_pl_embedding(meshR, 1e-7, 1);
        ok &= expect(repR.ok && repR.pairsTested == 1540, detail, "real-embedding pairs fail");

        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        ok &= expect(secs < 60.0, detail, "runtime budget exceeded");
        return ok;
    });

    // 9. certificates for all three primes
    h.criterion(9, "certificates", [&](std::string& detail) {
        bool ok = true;
        for (std::int64_t p : primes) {
            const auto cert = full_certificate(p);
            ok &= expect(cert.ok, detail,
                         "certificate failed at p=" + std::to_string(p) + " stage " +
                             cert.failedStage);
            ok &= expect(cert.conclusion && *cert.conclusion == p + 1, detail,
                         "wrong conclusion at p=" + std::to_string(p));
            const std::string wantBranch = p % 4 == 3 ? "p = 3 mod 4" : "p = 1 mod 4";
            ok &= expect(cert.branch == wantBranch, detail, "wrong branch");

            // branch-specific stage payloads
            nlohmann::json lb;
            for (const auto& stage : cert.stages)
                if (stage.at("name") == "lower_bound")
                    lb = stage;
            ok &= expect(!lb.is_null(), detail, "missing lower_bound stage");
            if (p % 4 == 3)
                ok &= expect(lb.value("distinct_required_eigenvalues", -1) == p - 1, detail,
                             "eigenvalue distinctness not certified at p=" + std::to_string(p));
            else
                ok &= expect(lb.value("bookkeeping_identity", false) &&
                                 lb.value("half_dim_fix_arithmetic", false) &&
                                 lb.value("k_trace_sum", -1) == 4,
                             detail, "trace bookkeeping not certified at p=" + std::to_string(p));
        }
        return ok;
    });

    // 10. representation-condition property suite
    h.criterion(10, "condition suite", [&](std::string& detail) {
        bool ok = true;

        for (int m = 5; m <= 12; ++m) {
            const auto res = regular_representation(GroupTable::cyclic(m));
            ok &= expect(res.allPass() && res.fixDimWholeGroup == 1, detail,
                         "regular rep fails for Z/" + std::to_string(m));
        }
        for (int m = 3; m <= 6; ++m) {
            const auto res = regular_representation(GroupTable::dihedral(m));
            ok &= expect(res.allPass() && res.fixDimWholeGroup == 1, detail,
                         "regular rep fails for D_" + std::to_string(m));
        }
        {
            const auto z4 = regular_representation(GroupTable::cyclic(4));
            ok &= expect(!z4.codimension.ok, detail, "Z/4 should fail the codimension clause");
        }

        // d <= 2t+1 witness (t = 2, prime 5) and the 5-dimensional example
        {
            const auto table5 = GroupTable::cyclic(5);
            const auto rep5 = cyclic_block_rep(5, {1, 3}, true);
            OrbifoldAction act5;
            act5.cones = {{5, 1, {1}}, {5, 4, {1}}, {5, 2, {1}}, {5, 3, {1}}};
            ok &= expect(rep5.dim() == 5 && check_dimension_inequality(rep5, table5, act5).ok &&
                             check_eigenvalue_condition(rep5, act5).ok &&
                             check_codimension(rep5, table5).ok,
                         detail, "2t+1 witness fails");

            const auto table7 = GroupTable::cyclic(7);
            const auto rep7 = cyclic_block_rep(7, {1, 4, 5}, true); // k r_k = 1 mod 7
            OrbifoldAction act7;
            act7.cones = {{7, 1, {1}}, {7, 6, {1}}, {7, 2, {1}},
                          {7, 5, {1}}, {7, 3, {1}}, {7, 4, {1}}};
            ok &= expect(rep7.dim() == 7 && check_dimension_inequality(rep7, table7, act7).ok &&
                             check_eigenvalue_condition(rep7, act7).ok &&
                             check_codimension(rep7, table7).ok,
                         detail, "2t+1 witness fails at 7");

            for (int m : {3, 5, 8}) {
                const auto table = GroupTable::cyclic(m);
                const auto rep = cyclic_block_rep(m, {1, 1}, true);
                OrbifoldAction act;
                act.cones.assign(static_cast<size_t>(m), Cone{m, 1, {1}});
                ok &= expect(rep.dim() == 5 && check_dimension_inequality(rep, table, act).ok &&
                                 check_eigenvalue_condition(rep, act).ok &&
                                 check_codimension(rep, table).ok,
                             detail, "five-dimensional example fails for m=" + std::to_string(m));
            }
        }

        // overgroup-reduction soundness against the all-subgroups oracle
        {
            std::vector<GroupTable> tables;
            for (int m = 2; m <= 16; ++m)
                tables.push_back(GroupTable::cyclic(m));
            for (int m = 3; m <= 8; ++m)
                tables.push_back(GroupTable::dihedral(m));
            for (const auto& table : tables) {
                const auto subgroups = oracles::all_subgroups(table);
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
                    std::vector<std::vector<int>> perms(
                        static_cast<size_t>(table.n), std::vector<int>(static_cast<size_t>(cosets)));
                    for (int g = 0; g < table.n; ++g)
                        for (int x = 0; x < table.n; ++x)
                            perms[g][cosetOf[x]] = cosetOf[table.mul[g][x]];
                    const PermutationRep rep(std::move(perms));

                    std::map<std::vector<int>, int> fix;
                    for (const auto& s : subgroups)
                        fix[s] = rep.fixDim(s);
                    for (const auto& S : subgroups)
                        for (const auto& H : subgroups) {
                            if (S.size() >= H.size() ||
                                !std::includes(H.begin(), H.end(), S.begin(), S.end()) ||
                                fix[S] != fix[H])
                                continue;
                            for (int hElem : H) {
                                if (std::binary_search(S.begin(), S.end(), hElem))
                                    continue;
                                std::vector<int> gens = S;
                                gens.push_back(hElem);
                                ok &= expect(rep.fixDim(table.closure(std::move(gens))) == fix[S],
                                             detail, "sandwich property violated in " + table.name);
                            }
                        }
                }
            }
        }

        // fixed-point bound at p = 7
        {
            const auto ctx = PrimeContext::build(7);
            const auto action = attach_action(build_modular_complex(ctx), ctx);
            int nontrivial = 0;
            for (size_t gi = 0; gi < action.group.size(); ++gi) {
                if (static_cast<int>(gi) == action.identityIndex)
                    continue;
                ++nontrivial;
                int fixedCount = 0;
                for (int v = 0; v < action.surface.vertexCount; ++v)
                    fixedCount += action.vertexPerm[gi][v] == v;
                ok &= expect(fixedCount <= 8, detail, "|Fix(h)| > 2g+2 at p=7");
            }
            ok &= expect(nontrivial == 167, detail, "expected 167 nontrivial elements");
        }

        // signature families against brute force
        {
            const auto table = enumerate_large_signatures();
            const auto brute = oracles::brute_signatures(60);
            std::int64_t count = 0;
            for (std::int64_t a = 2; a <= 60; ++a)
                for (std::int64_t b = a; b <= 60; ++b)
                    for (std::int64_t c = b; c <= 60; ++c)
                        count += table.contains(a, b, c);
            ok &= expect(count == static_cast<std::int64_t>(brute.size()), detail,
                         "signature families disagree with enumeration");
            for (const auto& t : brute)
                ok &= expect(table.contains(t[0], t[1], t[2]), detail, "missing signature");
            ok &= expect(table.boundedTriples().size() == 12, detail, "bounded triple count");
        }
        return ok;
    });

    // 11. umbrella embedding
    h.criterion(11, "umbrella embedding", [&](std::string& detail) {
        bool ok = true;
        const auto ctx = PrimeContext::build(7);
        const auto action = attach_action(build_modular_complex(ctx), ctx);

        const auto plain =
            umbrella_embed(action.surface, std::vector<bool>(24, false), &action.vertexPerm);
        ok &= expect(plain.mesh.ambientDim == 24 && plain.equivariant, detail,
                     "U = empty case fails");
        for (int v = 0; v < 24 && ok; ++v)
            ok &= expect(plain.mesh.coords[v](v) == 1.0 && plain.mesh.coords[v].sum() == 1.0,
                         detail, "U = empty is not the basis embedding");

        const auto stel = stellated(action.surface);
        const auto perms = stellated_action(action.surface, action.vertexPerm, stel);
        std::vector<bool> inU(static_cast<size_t>(stel.vertexCount), false);
        for (int v = 24; v < stel.vertexCount; ++v)
            inU[v] = true;
        const auto res = umbrella_embed(stel, inU, &perms);
        ok &= expect(res.equivariant && res.axisPerms.size() == 168, detail,
                     "stellated umbrella is not equivariant");
        for (int t = 0; t < 56 && ok; ++t) {
            const auto& tri = action.surface.triangles[t];
            Eigen::VectorXd expectVec = Eigen::VectorXd::Zero(24);
            expectVec(tri[0]) = expectVec(tri[1]) = expectVec(tri[2]) = 1.0;
            ok &= expect((res.mesh.coords[24 + t] - expectVec).cwiseAbs().maxCoeff() == 0.0,
                         detail, "barycenter image is not the link sum");
        }

        // link-collision input must be rejected
        std::vector<std::array<int, 3>> tris = {{0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 2},
                                                {1, 3, 2}, {1, 4, 3}, {1, 5, 4}, {1, 2, 5}};
        const auto octa = SimplicialSurface::from_triangles(6, tris);
        std::vector<bool> poles(6, false);
        poles[0] = poles[1] = true;
        bool threw = false;
        try {
            umbrella_embed(octa, poles);
        } catch (const hypothesis_error&) {
            threw = true;
        }
        ok &= expect(threw, detail, "link collision was not rejected");
        return ok;
    });

    std::printf("%s: %d criterion(s) failed\n", h.failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
                h.failures);
    return h.failures == 0 ? 0 : 1;
}
