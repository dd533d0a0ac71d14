#pragma once

#include <vector>

#include "klein/linalg.hpp"
#include "klein/psl2.hpp"

namespace klein {

/// Matrix slot indexing everywhere below: row/column 0 is the infinity slot,
/// row/column 1+s is the column of ratio s, 0 <= s <= p-1.

/// The DFT-like unitary y: y(0,0)=1, y(1+i,1+j) = epsilon^{ij}/sqrt(p).
Mat build_y(const PrimeContext& ctx);

/// A = y^{-1} a y computed two ways: by conjugation and by the closed-form
/// sum A_{i,j} = (1/p) sum_s omega^{k_s} epsilon^{i s* + s j}. The deviation
/// between the two routes is written to *deviation when supplied; if it
/// exceeds checkTol a closed_form_mismatch_error carries the value.
Mat compute_A(const PrimeContext& ctx, const MonomialMatrix& rhoA, const Mat& y,
              double* deviation = nullptr, double checkTol = 1e-10);
Mat compute_A_closed(const PrimeContext& ctx);

/// C = y^{-1} c y; diagonal with C(0,0)=1, C(1+i,1+i) = epsilon^{-i}.
Mat compute_C(const PrimeContext& ctx, const MonomialMatrix& rhoC, const Mat& y,
              double* deviation = nullptr, double checkTol = 1e-10);
Mat compute_C_closed(const PrimeContext& ctx);

struct RealificationBasis {
    Mat y, x, z; // z = y x conjugates rho to a real orthogonal representation
    cplx lambda{}, mu{};
    std::vector<cplx> lambdaJ;      // lambda_j = lambda mu^{k_j}, j = 1..(p-1)/2
    double lambdaUnitResidual = 0;  // max | |lambda_j| - 1 |
    double xUnitaryResidual = 0;
    double zUnitaryResidual = 0;
};

/// Principal square roots lambda^2 = sqrt(p) A(1+1,1+0), mu^2 = omega; then
/// the paired-column matrix x and z = y x.
RealificationBasis build_basis(const PrimeContext& ctx, const Mat& A);

/// Closed form for z^{-1} c z: identity on slots infinity and 0, and 2x2
/// rotation blocks by 2 pi i/p on the paired slots (i, p-i).
RMat theta_closed(const PrimeContext& ctx);

struct RealizeReport {
    bool ok = false;
    std::string failure;
    RMat RA, RC;
    double maxImag = 0;
    double raSymmetry = 0;
    double raOrthogonality = 0;
    double rcOrthogonality = 0;
    double thetaDeviation = 0;
};

RealizeReport realize(const PrimeContext& ctx, const RealificationBasis& basis,
                      const MonomialMatrix& rhoA, const MonomialMatrix& rhoC, double tol = 1e-9);

/// rho_0(g) = z^{-1} rho(g) z; throws not_real_error if the imaginary part
/// exceeds tol.
RMat real_rep_of(const PrimeContext& ctx, const RealificationBasis& basis,
                 const MonomialMatrix& rhoG, double tol = 1e-9);

/// Second Frobenius-Schur indicator (1/|G|) sum_h tr rho(h^2), accumulated as
/// integer phase counts with a single floating evaluation per phase value.
cplx frobenius_schur(const PrimeContext& ctx, const std::vector<GroupElement>& group);

} // namespace klein
