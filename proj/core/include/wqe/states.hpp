#pragma once

#include <optional>
#include <vector>

#include "wqe/eig.hpp"
#include "wqe/matrix.hpp"
#include "wqe/rng.hpp"

namespace wqe {

// Hermitian, PSD (min eigenvalue >= -1e-10), unit trace within 1e-10.
class DensityMatrix {
 public:
  DensityMatrix(Hermitian h, std::optional<SubsystemShape> shape = {});
  static DensityMatrix from_matrix(Mat m, std::optional<SubsystemShape> shape = {});

  const Mat& mat() const { return h_.mat(); }
  const Hermitian& herm() const { return h_; }
  const std::optional<SubsystemShape>& shape() const { return shape_; }
  int dim() const { return h_.dim(); }

  DensityMatrix with_shape(SubsystemShape shape) const;

 private:
  Hermitian h_;
  std::optional<SubsystemShape> shape_;
};

// Hermitian PSD weight; when flagged positive definite the smallest
// eigenvalue must clear the support threshold.
class Weight {
 public:
  explicit Weight(Hermitian h, bool positive_definite = false);
  static Weight identity(int d) { return Weight(Hermitian::identity(d), true); }
  static Weight from_matrix(Mat m, bool positive_definite = false);

  const Mat& mat() const { return h_.mat(); }
  const Hermitian& herm() const { return h_; }
  int dim() const { return h_.dim(); }
  bool positive_definite() const { return positive_definite_; }

 private:
  Hermitian h_;
  bool positive_definite_ = false;
};

// Unit-norm complex amplitude vector.
struct PureState {
  Vec amplitudes;

  explicit PureState(Vec amps);
  int dim() const { return static_cast<int>(amplitudes.size()); }
  Mat projector() const { return amplitudes * amplitudes.adjoint(); }
};

// Nonnegative entries summing to one within 1e-12.
struct ProbabilityVector {
  std::vector<double> entries;

  explicit ProbabilityVector(std::vector<double> p);
  int size() const { return static_cast<int>(entries.size()); }
};

// --- sampling -------------------------------------------------------------

Mat sample_ginibre(int rows, int cols, Rng& rng);

// rho = G G^dag / tr(G G^dag) with G a d x rank complex Gaussian matrix.
DensityMatrix sample_density(int d, int rank, Rng& rng);

// W = G G^dag, plus 0.1 * identity when definite.
Weight sample_weight(int d, Rng& rng, bool definite);

// Gaussian Hermitian matrix (G + G^dag)/2.
Hermitian sample_hermitian(int d, Rng& rng);

// Unitary from QR of a Ginibre matrix, R-diagonal phases fixed.
Mat sample_unitary(int d, Rng& rng);

// Normalised exponentials (uniform on the simplex).
ProbabilityVector sample_probability_vector(int r, Rng& rng);

// Joint state and per-factor weights all diagonal in the computational
// product basis, so every commutator that matters vanishes exactly.
struct ClassicalInstance {
  DensityMatrix rho;
  std::vector<Weight> factor_weights;
};
ClassicalInstance sample_classical_instance(const SubsystemShape& shape, Rng& rng);

// --- constructions ---------------------------------------------------------

// Diagonal part of rho in the given orthonormal basis (columns of `basis`):
// same diagonal matrix elements, off-diagonal ones removed.
DensityMatrix diagonal_part(const DensityMatrix& rho, const Mat& basis,
                            double unitary_tol = kUnitaryTol);

// Purification on A x R with dim(R) = dim(A); the R-side Schmidt basis is the
// computational basis, so tr_R |chi><chi| = rho_a.
PureState purify(const DensityMatrix& rho_a);

struct SchmidtDecomposition {
  std::vector<double> coefficients;  // descending, >= 0
  Mat left;                          // orthonormal columns on the first factor
  Mat right;                         // orthonormal columns on the second factor
};

// chi = sum_i c_i left_i (x) right_i for a two-factor shape.
SchmidtDecomposition schmidt(const PureState& chi, const SubsystemShape& shape);

// Weight diagonal in rho's eigenbasis with diagonal entries <e_i|phi|e_i>;
// gives the same weighted entropy as phi.
Weight conjugate_weight(const DensityMatrix& rho, const Weight& phi);

// Transport phi_src's diagonal elements (in rho_src's eigenbasis) onto
// rho_dst's eigenbasis, pairing eigenvalues in descending order. Requires the
// nonzero spectra to agree within spec_tol and to be nondegenerate within
// degeneracy_tol; entries beyond rho_src's rank are zero.
Weight cross_conjugate_weight(const DensityMatrix& rho_src, const Weight& phi_src,
                              const DensityMatrix& rho_dst, double spec_tol = 1e-8,
                              double degeneracy_tol = 1e-8);

}  // namespace wqe
