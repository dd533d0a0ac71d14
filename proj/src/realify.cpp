#include "klein/realify.hpp"

#include <cmath>
#include <numbers>

#include "klein/embed.hpp"
#include "klein/errors.hpp"

namespace klein {

Mat build_y(const PrimeContext& ctx)
{
    const std::int64_t p = ctx.p();
    const double scale = 1.0 / std::sqrt(static_cast<double>(p));
    Mat y = Mat::Zero(p + 1, p + 1);
    y(0, 0) = 1.0;
    for (std::int64_t i = 0; i < p; ++i)
        for (std::int64_t j = 0; j < p; ++j)
            y(1 + i, 1 + j) = ctx.epsilonValue(i * j) * scale;
    return y;
}

Mat compute_A_closed(const PrimeContext& ctx)
{
    const std::int64_t p = ctx.p();
    const double sqrtp = std::sqrt(static_cast<double>(p));
    Mat A = Mat::Zero(p + 1, p + 1);
    for (std::int64_t i = 0; i < p; ++i) {
        A(1 + i, 0) = 1.0 / sqrtp;
        A(0, 1 + i) = 1.0 / sqrtp;
    }
    for (std::int64_t i = 0; i < p; ++i)
        for (std::int64_t j = 0; j < p; ++j) {
            cplx sum = 0;
            for (std::int64_t s = 1; s < p; ++s)
                sum += ctx.phaseValue(ctx.dlog(s)) * ctx.epsilonValue(i * ctx.inv(s) + s * j);
            A(1 + i, 1 + j) = sum / static_cast<double>(p);
        }
    return A;
}

Mat compute_A(const PrimeContext& ctx, const MonomialMatrix& rhoA, const Mat& y, double* deviation,
              double checkTol)
{
    const Mat a = dense_complex(ctx, rhoA);
    const Mat A = y.conjugate() * a * y; // y^{-1} = conj(y)
    const double dev = max_abs(Mat(A - compute_A_closed(ctx)));
    if (deviation)
        *deviation = dev;
    if (dev > checkTol)
        throw closed_form_mismatch_error("conjugated A deviates from the closed form by " +
                                         std::to_string(dev));
    return A;
}

Mat compute_C_closed(const PrimeContext& ctx)
{
    const std::int64_t p = ctx.p();
    Mat C = Mat::Zero(p + 1, p + 1);
    C(0, 0) = 1.0;
    for (std::int64_t i = 0; i < p; ++i)
        C(1 + i, 1 + i) = ctx.epsilonValue(-i);
    return C;
}

Mat compute_C(const PrimeContext& ctx, const MonomialMatrix& rhoC, const Mat& y, double* deviation,
              double checkTol)
{
    const Mat c = dense_complex(ctx, rhoC);
    const Mat C = y.conjugate() * c * y;
    const double dev = max_abs(Mat(C - compute_C_closed(ctx)));
    if (deviation)
        *deviation = dev;
    if (dev > checkTol)
        throw closed_form_mismatch_error("conjugated C deviates from the closed form by " +
                                         std::to_string(dev));
    return C;
}

RealificationBasis build_basis(const PrimeContext& ctx, const Mat& A)
{
    const std::int64_t p = ctx.p();
    const std::int64_t q = ctx.halfOrder();
    const double sqrtp = std::sqrt(static_cast<double>(p));
    const cplx I{0.0, 1.0};

    RealificationBasis basis;
    basis.y = build_y(ctx);
    basis.lambda = std::sqrt(sqrtp * A(2, 1)); // sqrt(p) A_{1,0}, principal branch
    basis.mu = std::sqrt(ctx.phaseValue(1));   // mu^2 = omega

    basis.lambdaJ.resize(static_cast<size_t>(q) + 1);
    for (std::int64_t j = 1; j <= q; ++j) {
        basis.lambdaJ[j] = basis.lambda * std::pow(basis.mu, static_cast<double>(ctx.dlog(j)));
        basis.lambdaUnitResidual =
            std::max(basis.lambdaUnitResidual, std::abs(std::abs(basis.lambdaJ[j]) - 1.0));
    }

    const double s2 = std::sqrt(2.0);
    Mat x = Mat::Zero(p + 1, p + 1);
    x(0, 0) = 1.0 / s2; // column infinity
    x(1, 0) = 1.0 / s2;
    x(0, 1) = 1.0 / (I * s2); // column 0
    x(1, 1) = -1.0 / (I * s2);
    for (std::int64_t j = 1; j <= q; ++j) {
        x(1 + j, 1 + j) = basis.lambdaJ[j] / s2; // column j
        x(1 + p - j, 1 + j) = basis.lambdaJ[j] / s2;
        x(1 + j, 1 + p - j) = basis.lambdaJ[j] / (I * s2); // column p-j
        x(1 + p - j, 1 + p - j) = -basis.lambdaJ[j] / (I * s2);
    }
    basis.x = std::move(x);
    basis.z = basis.y * basis.x;
    basis.xUnitaryResidual = unitarity_residual(basis.x);
    basis.zUnitaryResidual = unitarity_residual(basis.z);
    return basis;
}

RMat theta_closed(const PrimeContext& ctx)
{
    const std::int64_t p = ctx.p();
    const std::int64_t q = ctx.halfOrder();
    RMat theta = RMat::Zero(p + 1, p + 1);
    theta(0, 0) = 1.0;
    theta(1, 1) = 1.0;
    for (std::int64_t i = 1; i <= q; ++i) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(p);
        theta(1 + i, 1 + i) = std::cos(angle);
        theta(1 + p - i, 1 + p - i) = std::cos(angle);
        theta(1 + p - i, 1 + i) = std::sin(angle);
        theta(1 + i, 1 + p - i) = -std::sin(angle);
    }
    return theta;
}

RealizeReport realize(const PrimeContext& ctx, const RealificationBasis& basis,
                      const MonomialMatrix& rhoA, const MonomialMatrix& rhoC, double tol)
{
    RealizeReport rep;
    const Mat a = dense_complex(ctx, rhoA);
    const Mat c = dense_complex(ctx, rhoC);
    const Mat zInv = basis.z.adjoint();
    const Mat RAc = zInv * a * basis.z;
    const Mat RCc = zInv * c * basis.z;

    rep.maxImag = std::max(max_imag(RAc), max_imag(RCc));
    rep.RA = RAc.real();
    rep.RC = RCc.real();
    rep.raSymmetry = max_abs(RMat(rep.RA - rep.RA.transpose()));
    rep.raOrthogonality = orthogonality_residual(rep.RA);
    rep.rcOrthogonality = orthogonality_residual(rep.RC);
    rep.thetaDeviation = max_abs(RMat(rep.RC - theta_closed(ctx)));

    if (rep.maxImag > tol)
        rep.failure = "NotReal: max imaginary part " + std::to_string(rep.maxImag);
    else if (rep.raOrthogonality > tol || rep.rcOrthogonality > tol)
        rep.failure = "NotOrthogonal";
    rep.ok = rep.failure.empty();
    return rep;
}

RMat real_rep_of(const PrimeContext& ctx, const RealificationBasis& basis,
                 const MonomialMatrix& rhoG, double tol)
{
    const Mat w = basis.z.adjoint() * dense_complex(ctx, rhoG) * basis.z;
    const double imag = max_imag(w);
    if (imag > tol)
        throw not_real_error("conjugated matrix has imaginary part " + std::to_string(imag));
    return w.real();
}

cplx frobenius_schur(const PrimeContext& ctx, const std::vector<GroupElement>& group)
{
    std::vector<std::int64_t> counts(static_cast<size_t>(ctx.halfOrder()), 0);
    for (const auto& h : group) {
        const auto local = trace_counts(rho_of(ctx, mul(h, h)));
        for (size_t e = 0; e < counts.size(); ++e)
            counts[e] += local[e];
    }
    cplx sum = 0;
    for (std::int64_t e = 0; e < static_cast<std::int64_t>(counts.size()); ++e)
        if (counts[e] != 0)
            sum += static_cast<double>(counts[e]) * ctx.phaseValue(e);
    return sum / static_cast<double>(group.size());
}

} // namespace klein
