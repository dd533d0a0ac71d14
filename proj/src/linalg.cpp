#include "klein/linalg.hpp"

namespace klein {

int numeric_rank(const RMat& m, double svThreshold)
{
    Eigen::JacobiSVD<RMat> svd(m);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > svThreshold)
            ++rank;
    return rank;
}

int numeric_rank(const Mat& m, double svThreshold)
{
    Eigen::JacobiSVD<Mat> svd(m);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > svThreshold)
            ++rank;
    return rank;
}

std::vector<double> symmetric_eigenvalues(const RMat& m)
{
    Eigen::SelfAdjointEigenSolver<RMat> es(m);
    const auto& ev = es.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

Mat dense_complex(const PrimeContext& ctx, const MonomialMatrix& m)
{
    const int n = m.slots();
    Mat out = Mat::Zero(n, n);
    for (int s = 0; s < n; ++s)
        out(m.perm[s], s) = ctx.phaseValue(m.phase[s]);
    return out;
}

RMat realified(const Mat& m)
{
    const Eigen::Index n = m.rows();
    RMat out(2 * n, 2 * n);
    out.topLeftCorner(n, n) = m.real();
    out.topRightCorner(n, n) = -m.imag();
    out.bottomLeftCorner(n, n) = m.imag();
    out.bottomRightCorner(n, n) = m.real();
    return out;
}

} // namespace klein
