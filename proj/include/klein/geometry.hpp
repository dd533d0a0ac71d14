#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>

#include "klein/embed.hpp"

namespace klein {

/// Closest point of triangle (a,b,c) to p (works in any ambient dimension).
Eigen::VectorXd closest_point_on_triangle(const Eigen::VectorXd& p, const Eigen::VectorXd& a,
                                          const Eigen::VectorXd& b, const Eigen::VectorXd& c);

double point_triangle_distance(const Eigen::VectorXd& p, const Eigen::VectorXd& a,
                               const Eigen::VectorXd& b, const Eigen::VectorXd& c);

struct PLViolation {
    int triA = -1, triB = -1;
    Eigen::VectorXd witness;
    double distance = 0; // distance of the witness from the allowed shared face
    std::string reason;
};

struct PLReport {
    bool ok = false;
    bool injectiveVertices = false;
    bool nondegenerateTriangles = false;
    bool distinctImageSets = false;
    std::size_t pairsTested = 0;
    double maxSharedFaceDeviation = 0; // largest distance of any intersection point from its shared face
    std::optional<PLViolation> violation;
};

/// Pairwise triangle intersection oracle: for every unordered pair of
/// distinct triangles the geometric intersection must equal the convex hull
/// of their shared vertices, within tol. Also checks the exact combinatorial
/// preconditions (injective vertex images, affinely independent triangles,
/// no two triangles with equal image-vertex sets).
PLReport verify_pl_embedding(const EmbeddedMesh& mesh, double tol = 1e-7, int threads = 1);

} // namespace klein
