#include <doctest.h>

#include <sstream>

#include "klein/meshio.hpp"
#include "klein/realify.hpp"

using namespace klein;

namespace {

EmbeddedMesh k7_real_mesh()
{
    const auto ctx = PrimeContext::build(7);
    const auto action = attach_action(build_modular_complex(ctx), ctx);
    const auto emb = complex_embedding(action);
    const Mat y = build_y(ctx);
    const Mat A = compute_A(ctx, rho_of(ctx, GroupElement::genA(7)), y);
    const auto basis = build_basis(ctx, A);
    return real_embedding(ctx, emb, action.surface, basis.z);
}

} // namespace

TEST_CASE("nOFF layout")
{
    const auto mesh = k7_real_mesh();
    std::ostringstream os;
    write_noff(os, mesh, 84);
    std::istringstream is(os.str());

    std::string header;
    int dim = 0, v = 0, e = 0, t = 0;
    is >> header >> dim >> v >> e >> t;
    CHECK(header == "nOFF");
    CHECK(dim == 8);
    CHECK(v == 24);
    CHECK(e == 84);
    CHECK(t == 56);
    for (int i = 0; i < 24; ++i)
        for (int c = 0; c < 8; ++c) {
            double x = 1e9;
            is >> x;
            CHECK(std::abs(x) <= 1.0);
        }
    int faces = 0;
    int three, a, b, c;
    while (is >> three >> a >> b >> c) {
        CHECK(three == 3);
        CHECK((0 <= a && a < 24 && 0 <= b && b < 24 && 0 <= c && c < 24));
        ++faces;
    }
    CHECK(faces == 56);

    // round-trip at 17 significant digits
    std::istringstream again(os.str());
    again >> header >> dim >> v >> e >> t;
    double first = 0;
    again >> first;
    CHECK(first == mesh.coords[0](0));
}

TEST_CASE("three-dimensional projections")
{
    const auto mesh = k7_real_mesh();
    const auto byAxes = project_axes(mesh, 0, 1, 2);
    CHECK(byAxes.ambientDim == 3);
    CHECK(byAxes.coords.size() == 24);
    CHECK(byAxes.coords[5](1) == mesh.coords[5](1));
    CHECK_THROWS_AS(project_axes(mesh, 0, 1, 99), std::invalid_argument);

    const auto byPca = project_pca(mesh);
    CHECK(byPca.ambientDim == 3);
    // principal directions are centered; variance decreases along components
    Eigen::Vector3d var = Eigen::Vector3d::Zero();
    Eigen::Vector3d mean = Eigen::Vector3d::Zero();
    for (const auto& v : byPca.coords)
        mean += v;
    mean /= 24.0;
    CHECK(mean.norm() < 1e-12);
    for (const auto& v : byPca.coords)
        var += (v - mean).cwiseAbs2();
    // the symmetric point set has a scalar covariance, so allow ties
    CHECK(var(0) >= var(1) - 1e-9);
    CHECK(var(1) >= var(2) - 1e-9);

    std::ostringstream os;
    write_off3d(os, byPca, 84);
    CHECK(os.str().substr(0, 4) == "OFF\n");
    CHECK_THROWS_AS(write_off3d(os, mesh, 84), std::invalid_argument);
}

TEST_CASE("mesh JSON carries coordinates and triangles")
{
    const auto mesh = k7_real_mesh();
    const auto j = mesh_to_json(mesh);
    CHECK(j.at("ambient_dim") == 8);
    CHECK(j.at("coordinates").size() == 24);
    CHECK(j.at("coordinates")[0].size() == 8);
    CHECK(j.at("triangles").size() == 56);
}
