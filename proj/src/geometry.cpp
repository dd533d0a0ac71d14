#include "klein/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>

namespace klein {

Eigen::VectorXd closest_point_on_triangle(const Eigen::VectorXd& p, const Eigen::VectorXd& a,
                                          const Eigen::VectorXd& b, const Eigen::VectorXd& c)
{
    // Voronoi-region classification via dot products only, so any dimension works
    const Eigen::VectorXd ab = b - a, ac = c - a, ap = p - a;
    const double d1 = ab.dot(ap), d2 = ac.dot(ap);
    if (d1 <= 0 && d2 <= 0)
        return a;

    const Eigen::VectorXd bp = p - b;
    const double d3 = ab.dot(bp), d4 = ac.dot(bp);
    if (d3 >= 0 && d4 <= d3)
        return b;

    const double vc = d1 * d4 - d3 * d2;
    if (vc <= 0 && d1 >= 0 && d3 <= 0) {
        const double t = d1 / (d1 - d3);
        return a + t * ab;
    }

    const Eigen::VectorXd cp = p - c;
    const double d5 = ab.dot(cp), d6 = ac.dot(cp);
    if (d6 >= 0 && d5 <= d6)
        return c;

    const double vb = d5 * d2 - d1 * d6;
    if (vb <= 0 && d2 >= 0 && d6 <= 0) {
        const double t = d2 / (d2 - d6);
        return a + t * ac;
    }

    const double va = d3 * d6 - d5 * d4;
    if (va <= 0 && (d4 - d3) >= 0 && (d5 - d6) >= 0) {
        const double t = (d4 - d3) / ((d4 - d3) + (d5 - d6));
        return b + t * (c - b);
    }

    const double denom = 1.0 / (va + vb + vc);
    const double v = vb * denom, w = vc * denom;
    return a + ab * v + ac * w;
}

double point_triangle_distance(const Eigen::VectorXd& p, const Eigen::VectorXd& a,
                               const Eigen::VectorXd& b, const Eigen::VectorXd& c)
{
    return (p - closest_point_on_triangle(p, a, b, c)).norm();
}

namespace {

double point_segment_distance(const Eigen::VectorXd& p, const Eigen::VectorXd& a,
                              const Eigen::VectorXd& b)
{
    const Eigen::VectorXd ab = b - a;
    const double den = ab.squaredNorm();
    if (den == 0)
        return (p - a).norm();
    const double t = std::clamp(ab.dot(p - a) / den, 0.0, 1.0);
    return (p - (a + t * ab)).norm();
}

// Distance of x from the convex hull of the shared vertices (ids into coords).
double shared_face_distance(const Eigen::VectorXd& x, const std::vector<int>& shared,
                            const std::vector<Eigen::VectorXd>& coords)
{
    if (shared.empty())
        return std::numeric_limits<double>::infinity();
    if (shared.size() == 1)
        return (x - coords[shared[0]]).norm();
    return point_segment_distance(x, coords[shared[0]], coords[shared[1]]);
}

struct PairContext {
    const EmbeddedMesh* mesh;
    double tol;     // judges how far an intersection may leave the shared face
    double geomEps; // machine-precision slack for geometric classification
};

struct PairOutcome {
    bool violated = false;
    double deviation = 0; // max shared-face distance over intersection points found
    Eigen::VectorXd witness;
    std::string reason;
};

// One intersection point to account for: record its deviation or flag it.
void account_point(const PairContext& pc, const std::vector<int>& shared, Eigen::VectorXd x,
                   PairOutcome& out)
{
    const double d = shared_face_distance(x, shared, pc.mesh->coords);
    if (shared.empty()) {
        out.violated = true;
        out.witness = std::move(x);
        out.reason = "triangles with no shared vertex intersect";
        return;
    }
    if (d > pc.tol) {
        char buf[48];
        std::snprintf(buf, sizeof(buf), "%.3e", d);
        out.violated = true;
        out.witness = std::move(x);
        out.reason = std::string("intersection extends beyond the shared face by ") + buf;
    }
    out.deviation = std::max(out.deviation, d);
}

PairOutcome test_pair(const PairContext& pc, int ta, int tb)
{
    const EmbeddedMesh& mesh = *pc.mesh;
    const auto& A = mesh.triangles[ta];
    const auto& B = mesh.triangles[tb];

    std::vector<int> shared;
    for (int u : A)
        for (int v : B)
            if (u == v)
                shared.push_back(u);

    PairOutcome out;
    const Eigen::VectorXd &a0 = mesh.coords[A[0]], &a1 = mesh.coords[A[1]],
                          &a2 = mesh.coords[A[2]];
    const Eigen::VectorXd &b0 = mesh.coords[B[0]], &b1 = mesh.coords[B[1]],
                          &b2 = mesh.coords[B[2]];

    // cheap sphere reject (only safe when nothing is shared)
    if (shared.empty()) {
        const Eigen::VectorXd ca = (a0 + a1 + a2) / 3.0, cb = (b0 + b1 + b2) / 3.0;
        const double ra = std::max({(a0 - ca).norm(), (a1 - ca).norm(), (a2 - ca).norm()});
        const double rb = std::max({(b0 - cb).norm(), (b1 - cb).norm(), (b2 - cb).norm()});
        if ((ca - cb).norm() > ra + rb + pc.tol)
            return out;
    }

    const Eigen::Index n = a0.size();
    Eigen::MatrixXd M(n, 4);
    M.col(0) = a1 - a0;
    M.col(1) = a2 - a0;
    M.col(2) = b0 - b1;
    M.col(3) = b0 - b2;
    const Eigen::VectorXd rhs = b0 - a0;

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() > 0 ? sv(0) : 0.0;
    const double nullTol = 1e-9 * std::max(1.0, smax);

    // least squares solution and null directions
    Eigen::Vector4d w = Eigen::Vector4d::Zero();
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > nullTol)
            w += svd.matrixV().col(i) * (svd.matrixU().col(i).dot(rhs) / sv(i));
    std::vector<Eigen::Vector4d> nullDirs;
    for (Eigen::Index i = 0; i < 4; ++i)
        if (i >= sv.size() || sv(i) <= nullTol)
            nullDirs.push_back(svd.matrixV().col(i));

    const double residual = (M * w - rhs).norm();
    if (residual > pc.geomEps)
        return out; // affine hulls are disjoint, so the triangles are too

    const auto pointAt = [&](const Eigen::Vector4d& param) {
        return Eigen::VectorXd(a0 + M.col(0) * param(0) + M.col(1) * param(1));
    };
    const auto insideBoth = [&](const Eigen::VectorXd& x) {
        return point_triangle_distance(x, a0, a1, a2) <= pc.geomEps &&
               point_triangle_distance(x, b0, b1, b2) <= pc.geomEps;
    };

    if (nullDirs.empty()) {
        const Eigen::VectorXd x = pointAt(w);
        if (insideBoth(x))
            account_point(pc, shared, x, out);
        return out;
    }

    if (nullDirs.size() == 1) {
        // intersection line x(t); clip by the six barycentric constraints
        const Eigen::Vector4d& nd = nullDirs[0];
        double lo = -std::numeric_limits<double>::infinity();
        double hi = std::numeric_limits<double>::infinity();
        bool empty = false;
        // constraints: s1>=0, s2>=0, 1-s1-s2>=0 and likewise for t
        const double consts[6] = {w(0), w(1), 1 - w(0) - w(1), w(2), w(3), 1 - w(2) - w(3)};
        const double slopes[6] = {nd(0), nd(1), -nd(0) - nd(1), nd(2), nd(3), -nd(2) - nd(3)};
        for (int i = 0; i < 6 && !empty; ++i) {
            if (std::abs(slopes[i]) < 1e-13) {
                if (consts[i] < -pc.geomEps)
                    empty = true;
            } else if (slopes[i] > 0) {
                lo = std::max(lo, -consts[i] / slopes[i]);
            } else {
                hi = std::min(hi, -consts[i] / slopes[i]);
            }
        }
        if (!empty && lo <= hi && std::isfinite(lo) && std::isfinite(hi)) {
            for (double t : {lo, hi}) {
                const Eigen::Vector4d param = w + t * nd;
                const Eigen::VectorXd x = pointAt(param);
                if (insideBoth(x))
                    account_point(pc, shared, x, out);
                if (out.violated)
                    break;
            }
        }
        return out;
    }

    // coplanar triangles: clip B against A in plane coordinates
    Eigen::MatrixXd basis(n, 2);
    basis.col(0) = M.col(0).normalized();
    Eigen::VectorXd second = M.col(1) - basis.col(0) * basis.col(0).dot(M.col(1));
    basis.col(1) = second.normalized();
    const auto to2d = [&](const Eigen::VectorXd& x) {
        return Eigen::Vector2d(basis.col(0).dot(x - a0), basis.col(1).dot(x - a0));
    };
    std::vector<Eigen::Vector2d> poly{to2d(b0), to2d(b1), to2d(b2)};
    const Eigen::Vector2d ta2{to2d(a0)}, tb2{to2d(a1)}, tc2{to2d(a2)};
    const Eigen::Vector2d clipPts[3] = {ta2, tb2, tc2};
    const double orient = (tb2 - ta2).x() * (tc2 - ta2).y() - (tb2 - ta2).y() * (tc2 - ta2).x();
    const double sign = orient >= 0 ? 1.0 : -1.0;
    for (int i = 0; i < 3 && !poly.empty(); ++i) {
        const Eigen::Vector2d p = clipPts[i], q = clipPts[(i + 1) % 3];
        const auto side = [&](const Eigen::Vector2d& x) {
            return sign * ((q - p).x() * (x - p).y() - (q - p).y() * (x - p).x());
        };
        std::vector<Eigen::Vector2d> next;
        for (size_t j = 0; j < poly.size(); ++j) {
            const Eigen::Vector2d cur = poly[j], nxt = poly[(j + 1) % poly.size()];
            const double sc = side(cur), sn = side(nxt);
            if (sc >= 0)
                next.push_back(cur);
            if ((sc > 0 && sn < 0) || (sc < 0 && sn > 0))
                next.push_back(cur + (nxt - cur) * (sc / (sc - sn)));
        }
        poly = std::move(next);
    }
    for (const auto& v2 : poly) {
        const Eigen::VectorXd x = a0 + basis.col(0) * v2.x() + basis.col(1) * v2.y();
        if (insideBoth(x))
            account_point(pc, shared, x, out);
        if (out.violated)
            break;
    }
    return out;
}

} // namespace

PLReport verify_pl_embedding(const EmbeddedMesh& mesh, double tol, int threads)
{
    if (mesh.ambientDim < 3)
        throw std::invalid_argument("PL embedding oracle needs ambient dimension >= 3");

    PLReport rep;
    const int V = static_cast<int>(mesh.coords.size());
    const int T = static_cast<int>(mesh.triangles.size());

    rep.injectiveVertices = true;
    for (int i = 0; i < V && rep.injectiveVertices; ++i)
        for (int j = i + 1; j < V; ++j)
            if ((mesh.coords[i] - mesh.coords[j]).norm() <= tol) {
                rep.injectiveVertices = false;
                rep.violation = PLViolation{-1, -1, mesh.coords[i], 0,
                                            "vertices " + std::to_string(i) + " and " +
                                                std::to_string(j) + " have coincident images"};
                break;
            }

    rep.nondegenerateTriangles = true;
    for (int t = 0; t < T && rep.nondegenerateTriangles; ++t) {
        const auto& tri = mesh.triangles[t];
        Eigen::MatrixXd u(mesh.ambientDim, 2);
        u.col(0) = mesh.coords[tri[1]] - mesh.coords[tri[0]];
        u.col(1) = mesh.coords[tri[2]] - mesh.coords[tri[0]];
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(u);
        if (svd.singularValues().minCoeff() <= tol) {
            rep.nondegenerateTriangles = false;
            rep.violation =
                PLViolation{t, -1, mesh.coords[tri[0]], 0,
                            "triangle " + std::to_string(t) + " has affinely dependent images"};
        }
    }

    rep.distinctImageSets = true;
    {
        std::vector<std::array<int, 3>> sorted(mesh.triangles.begin(), mesh.triangles.end());
        for (auto& t : sorted)
            std::sort(t.begin(), t.end());
        std::sort(sorted.begin(), sorted.end());
        for (size_t i = 0; i + 1 < sorted.size(); ++i)
            if (sorted[i] == sorted[i + 1]) {
                rep.distinctImageSets = false;
                rep.violation = PLViolation{-1, -1, Eigen::VectorXd(), 0,
                                            "two triangles share the same vertex set"};
                break;
            }
        rep.distinctImageSets = rep.distinctImageSets && rep.injectiveVertices;
    }

    if (!rep.injectiveVertices || !rep.nondegenerateTriangles || !rep.distinctImageSets)
        return rep;

    double scale = 1.0;
    for (const auto& v : mesh.coords)
        scale = std::max(scale, v.cwiseAbs().maxCoeff());
    const PairContext pc{&mesh, tol, 1e-12 * scale};
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<size_t>(T) * (T - 1) / 2);
    for (int i = 0; i < T; ++i)
        for (int j = i + 1; j < T; ++j)
            pairs.emplace_back(i, j);
    rep.pairsTested = pairs.size();

    const int nThreads = std::max(1, threads);
    std::vector<double> maxDev(nThreads, 0.0);
    std::vector<std::optional<PLViolation>> firstViolation(nThreads);
    std::vector<size_t> firstViolationAt(nThreads, pairs.size());

    auto worker = [&](int tid) {
        for (size_t k = tid; k < pairs.size(); k += nThreads) {
            PairOutcome out = test_pair(pc, pairs[k].first, pairs[k].second);
            maxDev[tid] = std::max(maxDev[tid], out.deviation);
            if (out.violated && k < firstViolationAt[tid]) {
                firstViolationAt[tid] = k;
                firstViolation[tid] = PLViolation{pairs[k].first, pairs[k].second, out.witness,
                                                  out.deviation, out.reason};
                break; // earliest violation for this thread's slice
            }
        }
    };
    if (nThreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nThreads; ++t)
            pool.emplace_back(worker, t);
        for (auto& th : pool)
            th.join();
    }

    size_t best = pairs.size();
    for (int t = 0; t < nThreads; ++t) {
        rep.maxSharedFaceDeviation = std::max(rep.maxSharedFaceDeviation, maxDev[t]);
        if (firstViolationAt[t] < best) {
            best = firstViolationAt[t];
            rep.violation = firstViolation[t];
        }
    }
    rep.ok = best == pairs.size();
    return rep;
}

} // namespace klein
