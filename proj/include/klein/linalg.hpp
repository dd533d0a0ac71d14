#pragma once

#include <Eigen/Dense>
#include <complex>

#include "klein/arith.hpp"
#include "klein/monomial.hpp"

namespace klein {

using Mat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;

inline double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }
inline double max_abs(const RMat& m) { return m.cwiseAbs().maxCoeff(); }
inline double max_imag(const Mat& m) { return m.imag().cwiseAbs().maxCoeff(); }

/// ||M* M - I||_max
inline double unitarity_residual(const Mat& m)
{
    return max_abs(Mat(m.adjoint() * m - Mat::Identity(m.rows(), m.cols())));
}

inline double orthogonality_residual(const RMat& m)
{
    return max_abs(RMat(m.transpose() * m - RMat::Identity(m.rows(), m.cols())));
}

/// Rank with an absolute singular-value threshold.
int numeric_rank(const RMat& m, double svThreshold = 1e-7);
int numeric_rank(const Mat& m, double svThreshold = 1e-7);

/// Eigenvalues of a symmetric matrix, ascending.
std::vector<double> symmetric_eigenvalues(const RMat& m);

/// Dense complex view of a monomial matrix (slot s maps into row perm[s]).
Mat dense_complex(const PrimeContext& ctx, const MonomialMatrix& m);

/// Real 2n x 2n view of a complex n x n matrix under z = u + iv -> (u, v):
/// [[Re M, -Im M], [Im M, Re M]]. Unitary input gives an orthogonal output.
RMat realified(const Mat& m);

} // namespace klein
