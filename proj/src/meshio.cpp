#include "klein/meshio.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace klein {

namespace {

std::string fmt17(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_body(std::ostream& os, const EmbeddedMesh& mesh, int edgeCount)
{
    os << mesh.coords.size() << ' ' << edgeCount << ' ' << mesh.triangles.size() << '\n';
    for (const auto& v : mesh.coords) {
        for (Eigen::Index i = 0; i < v.size(); ++i)
            os << (i ? " " : "") << fmt17(v(i));
        os << '\n';
    }
    for (const auto& t : mesh.triangles)
        os << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

} // namespace

void write_noff(std::ostream& os, const EmbeddedMesh& mesh, int edgeCount)
{
    os << "nOFF\n" << mesh.ambientDim << '\n';
    write_body(os, mesh, edgeCount);
}

void write_off3d(std::ostream& os, const EmbeddedMesh& mesh, int edgeCount)
{
    if (mesh.ambientDim != 3)
        throw std::invalid_argument("off3d writer expects a 3D mesh");
    os << "OFF\n";
    write_body(os, mesh, edgeCount);
}

EmbeddedMesh project_axes(const EmbeddedMesh& mesh, int i, int j, int k)
{
    for (int axis : {i, j, k})
        if (axis < 0 || axis >= mesh.ambientDim)
            throw std::invalid_argument("projection axis out of range");
    EmbeddedMesh out;
    out.ambientDim = 3;
    out.triangles = mesh.triangles;
    out.coords.reserve(mesh.coords.size());
    for (const auto& v : mesh.coords) {
        Eigen::VectorXd w(3);
        w << v(i), v(j), v(k);
        out.coords.push_back(std::move(w));
    }
    return out;
}

EmbeddedMesh project_pca(const EmbeddedMesh& mesh)
{
    const int n = mesh.ambientDim;
    Eigen::VectorXd mean = Eigen::VectorXd::Zero(n);
    for (const auto& v : mesh.coords)
        mean += v;
    mean /= static_cast<double>(mesh.coords.size());

    RMat cov = RMat::Zero(n, n);
    for (const auto& v : mesh.coords) {
        const Eigen::VectorXd d = v - mean;
        cov += d * d.transpose();
    }
    Eigen::SelfAdjointEigenSolver<RMat> es(cov);

    EmbeddedMesh out;
    out.ambientDim = 3;
    out.triangles = mesh.triangles;
    RMat basis(n, 3);
    for (int c = 0; c < 3; ++c) {
        Eigen::VectorXd dir = es.eigenvectors().col(n - 1 - c); // descending variance
        Eigen::Index maxIdx = 0;
        dir.cwiseAbs().maxCoeff(&maxIdx);
        if (dir(maxIdx) < 0)
            dir = -dir;
        basis.col(c) = dir;
    }
    out.coords.reserve(mesh.coords.size());
    for (const auto& v : mesh.coords)
        out.coords.push_back(basis.transpose() * (v - mean));
    return out;
}

nlohmann::json mesh_to_json(const EmbeddedMesh& mesh)
{
    nlohmann::json j;
    j["ambient_dim"] = mesh.ambientDim;
    nlohmann::json coords = nlohmann::json::array();
    for (const auto& v : mesh.coords) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index i = 0; i < v.size(); ++i)
            row.push_back(v(i));
        coords.push_back(std::move(row));
    }
    j["coordinates"] = std::move(coords);
    nlohmann::json tris = nlohmann::json::array();
    for (const auto& t : mesh.triangles)
        tris.push_back({t[0], t[1], t[2]});
    j["triangles"] = std::move(tris);
    return j;
}

} // namespace klein
