#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <thread>

#include "klein/certify.hpp"
#include "klein/embed.hpp"
#include "klein/errors.hpp"
#include "klein/geometry.hpp"
#include "klein/meshio.hpp"
#include "klein/realify.hpp"
#include "klein/surface.hpp"

using nlohmann::json;

namespace {

struct Options {
    std::int64_t p = 7;
    double tol = 1e-9;
    double plTol = 1e-7;
    std::uint64_t seed = 0;
    std::string threads = "1";
    std::string format = "json";
    std::string out;
    std::string suite = "all";
    std::string embedding = "real";
    std::vector<int> axes;
    std::string project;

    int threadCount() const
    {
        if (threads == "auto")
            return std::max(1u, std::thread::hardware_concurrency());
        return std::max(1, std::stoi(threads));
    }
};

void emit(const Options& opt, const std::string& text)
{
    if (opt.out.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n')
            std::cout << '\n';
        return;
    }
    std::ofstream os(opt.out, std::ios::binary);
    if (!os)
        throw std::runtime_error("cannot open output file " + opt.out);
    os << text;
}

struct Pipeline {
    klein::PrimeContext ctx;
    std::vector<klein::GroupElement> group;
    klein::SurfaceAction action;
    klein::SurfaceReport surfaceReport;
    klein::ComplexEmbedding embedding;
    klein::Mat Amat;
    double devA = 0, devC = 0;
    klein::RealificationBasis basis;
    klein::RealizeReport realized;

    static Pipeline build(const Options& opt)
    {
        klein::PrimeContext ctx = klein::PrimeContext::build(opt.p);
        auto group = klein::enumerate_group(ctx);
        auto K = klein::build_modular_complex(ctx);
        auto report = klein::verify_surface(K);
        auto action = klein::attach_action(std::move(K), ctx);
        auto emb = klein::complex_embedding(action);

        const auto rhoA = klein::rho_of(ctx, klein::GroupElement::genA(opt.p));
        const auto rhoC = klein::rho_of(ctx, klein::GroupElement::genC(opt.p));
        const klein::Mat y = klein::build_y(ctx);
        double devA = 0, devC = 0;
        klein::Mat Amat = klein::compute_A(ctx, rhoA, y, &devA);
        klein::compute_C(ctx, rhoC, y, &devC);
        auto basis = klein::build_basis(ctx, Amat);
        auto realized = klein::realize(ctx, basis, rhoA, rhoC, opt.tol);

        return Pipeline{std::move(ctx),  std::move(group), std::move(action),
                        report,          std::move(emb),   std::move(Amat),
                        devA,            devC,             std::move(basis),
                        std::move(realized)};
    }
};

json meta_json(const Options& opt)
{
    return json{{"p", opt.p},
                {"tol", opt.tol},
                {"pl_tol", opt.plTol},
                {"seed", opt.seed},
                {"threads", opt.threadCount()},
                {"version", "1.0"}};
}

json matrix_json(const klein::RMat& m)
{
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            rows.push_back(m(i, j));
    return rows; // row-major
}

json complex_mesh_json(const klein::PrimeContext& ctx, const klein::ComplexEmbedding& e,
                       const klein::SimplicialSurface& s)
{
    json coords = json::array();
    for (int v = 0; v < s.vertexCount; ++v) {
        const Eigen::VectorXcd xi = klein::complex_coordinates(ctx, e, v);
        json row = json::array();
        for (Eigen::Index i = 0; i < xi.size(); ++i)
            row.push_back({xi(i).real(), xi(i).imag()});
        coords.push_back(std::move(row));
    }
    return json{{"ambient_dim", ctx.p() + 1},
                {"coordinates", std::move(coords)},
                {"slots", e.slot},
                {"phases", e.phase}};
}

int cmd_build(const Options& opt)
{
    Pipeline pl = Pipeline::build(opt);
    const klein::EmbeddedMesh real =
        klein::real_embedding(pl.ctx, pl.embedding, pl.action.surface, pl.basis.z);
    const int edges = static_cast<int>(pl.action.surface.edges.size());

    if (opt.format == "noff") {
        std::ostringstream os;
        if (opt.embedding == "complex")
            klein::write_noff(os, klein::realified_mesh(pl.ctx, pl.embedding, pl.action.surface),
                              edges);
        else
            klein::write_noff(os, real, edges);
        emit(opt, os.str());
        return 0;
    }
    if (opt.format == "off3d") {
        klein::EmbeddedMesh proj = opt.axes.size() == 3
                                       ? klein::project_axes(real, opt.axes[0], opt.axes[1], opt.axes[2])
                                       : klein::project_pca(real);
        std::ostringstream os;
        klein::write_off3d(os, proj, edges);
        emit(opt, os.str());
        return 0;
    }

    // json document
    klein::CertifyOptions copts{opt.tol, opt.plTol, opt.seed, opt.threadCount(), 100};
    const klein::Certificate cert = klein::full_certificate(opt.p, copts);

    json surface;
    surface["vertices"] = pl.surfaceReport.vertices;
    surface["edges"] = pl.surfaceReport.edges;
    surface["triangles"] = pl.surfaceReport.triangles;
    surface["euler_characteristic"] = pl.surfaceReport.euler;
    surface["genus"] = pl.surfaceReport.genus;
    json labels = json::array();
    for (int v = 0; v < pl.action.surface.vertexCount; ++v)
        labels.push_back(pl.action.surface.vertexName(v));
    surface["vertex_labels"] = std::move(labels);
    json tris = json::array();
    for (const auto& t : pl.action.surface.triangles)
        tris.push_back({t[0], t[1], t[2]});
    surface["triangle_list"] = std::move(tris);

    const auto rhoA = klein::rho_of(pl.ctx, klein::GroupElement::genA(opt.p));
    const auto rhoC = klein::rho_of(pl.ctx, klein::GroupElement::genC(opt.p));
    json rep;
    rep["omega_order"] = pl.ctx.halfOrder();
    rep["rho_A"] = {{"perm", rhoA.perm}, {"phase", rhoA.phase}};
    rep["rho_C"] = {{"perm", rhoC.perm}, {"phase", rhoC.phase}};
    rep["rho0_A"] = matrix_json(pl.realized.RA);
    rep["rho0_C"] = matrix_json(pl.realized.RC);

    json doc;
    doc["meta"] = meta_json(opt);
    doc["surface"] = std::move(surface);
    doc["embedding_complex"] = complex_mesh_json(pl.ctx, pl.embedding, pl.action.surface);
    doc["embedding_real"] = klein::mesh_to_json(real);
    doc["representation"] = std::move(rep);
    doc["certificate"] = cert.to_json();
    emit(opt, doc.dump(2));
    return cert.ok ? 0 : 1;
}

int cmd_verify(const Options& opt)
{
    json report;
    report["meta"] = meta_json(opt);
    report["suite"] = opt.suite;
    bool pass = true;

    if (opt.suite == "all") {
        klein::CertifyOptions copts{opt.tol, opt.plTol, opt.seed, opt.threadCount(), 100};
        const klein::Certificate cert = klein::full_certificate(opt.p, copts);
        report["stages"] = cert.stages;
        pass = cert.ok;
    } else {
        Pipeline pl = Pipeline::build(opt);
        if (opt.suite == "surface") {
            const auto& r = pl.surfaceReport;
            report["surface"] = {{"pass", r.ok},          {"vertices", r.vertices},
                                 {"edges", r.edges},      {"triangles", r.triangles},
                                 {"genus", r.genus},      {"orientable", r.orientable},
                                 {"failure", r.failure}};
            pass = r.ok;
        } else if (opt.suite == "action") {
            const auto C = klein::GroupElement::genC(opt.p);
            const auto fixed = klein::fixed_vertices(pl.action, C);
            bool stepsOk = true;
            for (std::int64_t s = 1; s <= (opt.p - 1) / 2; ++s) {
                const auto v = klein::canonicalize(pl.ctx, s, 0);
                const std::int64_t expect = pl.ctx.reduce(pl.ctx.inv(s) * pl.ctx.inv(s));
                stepsOk = stepsOk && klein::rotation_step(pl.action, C, klein::vertex_index(pl.ctx, v)) == expect;
            }
            pass = static_cast<std::int64_t>(fixed.size()) == (opt.p - 1) / 2 && stepsOk;
            report["action"] = {{"pass", pass},
                                {"fixed_vertices_of_C", fixed.size()},
                                {"rotation_steps_match", stepsOk}};
        } else if (opt.suite == "embedding") {
            bool equi = true;
            for (const auto& g : {klein::GroupElement::genA(opt.p), klein::GroupElement::genB(opt.p),
                                  klein::GroupElement::genC(opt.p)})
                equi = equi && klein::check_equivariance(pl.embedding, pl.action, g).ok;
            for (const auto& g : klein::sample_elements(pl.group, 100, opt.seed))
                equi = equi && klein::check_equivariance(pl.embedding, pl.action, g).ok;
            const auto meshC = klein::realified_mesh(pl.ctx, pl.embedding, pl.action.surface);
            const auto plc = klein::verify_pl_embedding(meshC, opt.plTol, opt.threadCount());
            const auto meshR =
                klein::real_embedding(pl.ctx, pl.embedding, pl.action.surface, pl.basis.z);
            const auto plr = klein::verify_pl_embedding(meshR, opt.plTol, opt.threadCount());
            pass = equi && plc.ok && plr.ok;
            report["embedding"] = {{"pass", pass},
                                   {"equivariance_exact", equi},
                                   {"pl_complex_pairs", plc.pairsTested},
                                   {"pl_complex_max_deviation", plc.maxSharedFaceDeviation},
                                   {"pl_real_pairs", plr.pairsTested},
                                   {"pl_real_max_deviation", plr.maxSharedFaceDeviation}};
            if (!plc.ok && plc.violation)
                report["embedding"]["complex_violation"] = plc.violation->reason;
            if (!plr.ok && plr.violation)
                report["embedding"]["real_violation"] = plr.violation->reason;
        } else if (opt.suite == "realify") {
            pass = pl.realized.ok && pl.devA < 1e-10 && pl.devC < 1e-10;
            report["realify"] = {{"pass", pass},
                                 {"closed_form_deviation_A", pl.devA},
                                 {"closed_form_deviation_C", pl.devC},
                                 {"max_imag", pl.realized.maxImag},
                                 {"RA_symmetry", pl.realized.raSymmetry},
                                 {"RA_orthogonality", pl.realized.raOrthogonality},
                                 {"RC_orthogonality", pl.realized.rcOrthogonality},
                                 {"theta_deviation", pl.realized.thetaDeviation}};
        } else if (opt.suite == "conditions") {
            const auto ig = klein::index_group(pl.group);
            std::vector<klein::RMat> mats(static_cast<size_t>(ig.table.n));
            for (int i = 0; i < ig.table.n; ++i)
                mats[static_cast<size_t>(i)] = klein::real_rep_of(
                    pl.ctx, pl.basis, klein::rho_of(pl.ctx, ig.byId[i]), opt.tol);
            klein::DenseRealRep rep0(std::move(mats));
            klein::OrbifoldAction orb;
            std::vector<std::int64_t> rotations;
            for (std::int64_t s = 1; s <= (opt.p - 1) / 2; ++s)
                rotations.push_back(pl.ctx.reduce(pl.ctx.inv(s) * pl.ctx.inv(s)));
            orb.cones.push_back({2, ig.idOf(klein::GroupElement::genA(opt.p)), {1}});
            orb.cones.push_back({3, ig.idOf(klein::GroupElement::genB(opt.p)), {1}});
            orb.cones.push_back({opt.p, ig.idOf(klein::GroupElement::genC(opt.p)), rotations});
            const auto dims = klein::check_dimension_inequality(rep0, ig.table, orb);
            const auto eig = klein::check_eigenvalue_condition(rep0, orb);
            const auto codim = klein::check_codimension(rep0, ig.table);
            pass = dims.ok && eig.ok && codim.ok;
            report["conditions"] = {{"pass", pass},
                                    {"dimension_inequality", dims.to_json()},
                                    {"eigenvalue", eig.to_json()},
                                    {"codimension", codim.to_json()}};
        } else {
            throw CLI::ValidationError("--suite", "unknown suite " + opt.suite);
        }
    }

    report["pass"] = pass;
    emit(opt, report.dump(2));
    return pass ? 0 : 1;
}

int cmd_certify(const Options& opt)
{
    klein::CertifyOptions copts{opt.tol, opt.plTol, opt.seed, opt.threadCount(), 100};
    const klein::Certificate cert = klein::full_certificate(opt.p, copts);
    json doc = cert.to_json();
    doc["meta"] = meta_json(opt);
    emit(opt, doc.dump(2));
    return cert.ok ? 0 : 1;
}

int cmd_signatures(const Options& opt)
{
    const auto table = klein::enumerate_large_signatures();
    json fams = json::array();
    for (const auto& f : table.families)
        fams.push_back({{"p", f.p},
                        {"q", f.q},
                        {"r_min", f.rMin},
                        {"r_max", f.rMax ? json(*f.rMax) : json(nullptr)},
                        {"text", f.text()}});
    json doc;
    doc["families"] = std::move(fams);
    json finite = json::array();
    for (const auto& t : table.boundedTriples())
        finite.push_back({t[0], t[1], t[2]});
    doc["bounded_triples"] = std::move(finite);
    emit(opt, doc.dump(2));
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Equivariant triangulated surfaces for PSL(2,p): build, verify, certify"};
    app.require_subcommand(1);
    Options opt;

    bool plTolGiven = false;
    auto addCommon = [&](CLI::App* cmd, bool needsP) {
        if (needsP)
            cmd->add_option("-p,--prime", opt.p, "prime p >= 7")->required();
        cmd->add_option("--tol", opt.tol, "residual tolerance (default 1e-9)");
        cmd->add_option("--pl-tol", opt.plTol, "PL intersection tolerance (default 1e-7)")
            ->each([&plTolGiven](const std::string&) { plTolGiven = true; });
        cmd->add_option("--seed", opt.seed, "seed for sampled checks");
        cmd->add_option("--threads", opt.threads, "worker threads or 'auto'");
        cmd->add_option("--out", opt.out, "output path (default stdout)");
    };

    CLI::App* build = app.add_subcommand("build", "construct K_p and export mesh/report");
    addCommon(build, true);
    build->add_option("--format", opt.format, "noff | json | off3d")
        ->check(CLI::IsMember({"noff", "json", "off3d"}));
    build->add_option("--embedding", opt.embedding, "which embedding a noff mesh uses")
        ->check(CLI::IsMember({"real", "complex"}));
    build->add_option("--axes", opt.axes, "three coordinate axes for off3d")->expected(3);
    build->add_option("--project", opt.project, "pca")->check(CLI::IsMember({"pca"}));

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    addCommon(verify, true);
    verify->add_option("--suite", opt.suite, "surface|action|embedding|realify|conditions|all")
        ->check(CLI::IsMember({"surface", "action", "embedding", "realify", "conditions", "all"}));

    CLI::App* certify = app.add_subcommand("certify", "emit the d = p+1 certificate");
    addCommon(certify, true);

    CLI::App* signatures = app.add_subcommand("signatures", "triangle-group signature families");
    signatures->add_option("--out", opt.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    // one --tol flag drives every check unless --pl-tol overrides it
    if (!plTolGiven && opt.tol < opt.plTol)
        opt.plTol = opt.tol;

    try {
        if (build->parsed())
            return cmd_build(opt);
        if (verify->parsed())
            return cmd_verify(opt);
        if (certify->parsed())
            return cmd_certify(opt);
        if (signatures->parsed())
            return cmd_signatures(opt);
    } catch (const klein::not_prime_error& e) {
        std::cerr << "error: NotPrime: " << e.what() << '\n';
        return 2;
    } catch (const klein::too_small_error& e) {
        std::cerr << "error: TooSmall: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
