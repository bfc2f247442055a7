#pragma once

#include "wqe/matrix.hpp"

namespace wqe {

// Eigenvalues sorted descending, eigenvector columns paired by index.
// Phase convention: the largest-magnitude component of each column is real
// and positive, making the decomposition deterministic for a fixed input.
struct SpectralDecomposition {
  RealVec eigenvalues;
  Mat eigenvectors;

  int dim() const { return static_cast<int>(eigenvalues.size()); }
  Mat reconstruct() const;

  // V diag(f(lambda)) V^dag for a per-eigenvalue map already applied by the
  // caller; `mapped` must have one entry per eigenvalue.
  Mat assemble(const RealVec& mapped) const;
};

// Cyclic Jacobi diagonalisation of a complex Hermitian matrix. Sweeps run in
// fixed row-major pivot order until the off-diagonal Frobenius mass drops
// below 1e-14 * ||A||_F, so results are reproducible across runs.
SpectralDecomposition hermitian_eig(const Hermitian& a);
SpectralDecomposition hermitian_eig(const Mat& a, double herm_tol_factor = kHermTolFactor);

// Support projector, rank and pseudo-inverse of a PSD matrix. Eigenvalues
// at or below support_tol * lambda_max count as zero.
struct SupportInfo {
  int rank = 0;
  Hermitian projector;
  Hermitian pseudo_inverse;
  double threshold = 0.0;
};

SupportInfo support_info(const Hermitian& a, double support_tol = kSupportTol);

}  // namespace wqe
