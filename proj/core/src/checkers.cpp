#include "wqe/checkers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wqe/kernels.hpp"
#include "wqe/tensor.hpp"

namespace wqe {

namespace {

constexpr double kConditionTol = 1e-12;  // numerical slack on >= 0 conditions
constexpr double kZeroEigenvalue = 1e-12;

double re_trace_prod(const Mat& a, const Mat& b) { return trace_prod(a, b).real(); }

SubsystemShape require_shape(const DensityMatrix& rho, int factors, const char* who) {
  if (!rho.shape() || rho.shape()->factors() != factors)
    throw ShapeError(std::string(who) + ": state needs a shape with " +
                     std::to_string(factors) + " factors");
  return *rho.shape();
}

}  // namespace

Verdict check_klein(const Weight& w, const Hermitian& x, const Hermitian& y,
                    const ScalarFunction& f, TraceMode mode, double tol) {
  Verdict v;
  v.theorem = TheoremId::klein;
  v.mode = mode;

  const Hermitian fx = matrix_func(x, f);
  const Hermitian fy = matrix_func(y, f);
  const SpectralDecomposition xeig = hermitian_eig(x);
  const Hermitian fpx = matrix_func(xeig, f.derivative());

  const cxd big = trace_prod(w.mat(), (fy.mat() - fx.mat()).eval());
  v.rhs = big.real();
  v.add_residue("convex_side", std::abs(big.imag()));

  if (mode == TraceMode::literal) {
    const cxd small = trace_prod(w.mat() * (y.mat() - x.mat()), fpx.mat());
    v.lhs = small.real();
    v.add_residue("derivative_side", std::abs(small.imag()));
  } else {
    const Hermitian l = sqrt_psd(w.herm());
    const Mat lyl = l.mat() * y.mat() * l.mat();
    const cxd t1 = trace_prod(lyl, fpx.mat());
    const cxd t2 = trace_prod(w.mat() * x.mat(), fpx.mat());
    v.lhs = (t1 - t2).real();
    v.add_residue("derivative_side", std::abs((t1 - t2).imag()));
  }
  v.slack = v.rhs - v.lhs;
  v.finalize(tol);
  return v;
}

Verdict check_gibbs(const DensityMatrix& rho, const Hermitian& sigma, const Weight& phi,
                    TraceMode mode, double tol) {
  Verdict v;
  v.theorem = TheoremId::gibbs;
  v.mode = mode;

  const double tr_rho = re_trace_prod(phi.mat(), rho.mat());
  const double tr_sigma = re_trace_prod(phi.mat(), sigma.mat());
  v.add_condition("trace_condition", tr_rho - tr_sigma, tr_rho - tr_sigma >= -kConditionTol);

  const EntropyValue d = weighted_relative_entropy(rho, sigma, phi, mode);
  v.lhs = 0.0;
  v.rhs = d.value;
  v.slack = d.value;
  v.add_residue("relative_entropy", d.imag_residue);
  if (d.infinite) v.add_diagnostic("infinite_divergence", 1.0);
  if (!d.infinite && std::abs(d.value) <= tol)
    v.add_diagnostic("equality_state_gap", (rho.mat() - sigma.mat()).norm());
  v.finalize(tol);
  return v;
}

Verdict check_entropy_bounds(const DensityMatrix& rho, const Weight& phi, double tol) {
  Verdict v;
  v.theorem = TheoremId::bounds;

  const EntropyValue s = weighted_entropy(rho, phi);
  v.add_residue("entropy", s.imag_residue);
  v.add_diagnostic("entropy", s.value);
  v.auxiliary_ok = s.value >= -tol;

  const SupportInfo sup = support_info(phi.herm());
  const int m = sup.rank;
  const double tr_phi = phi.mat().trace().real();
  const double tr_phi_rho = re_trace_prod(phi.mat(), rho.mat());

  // The three upper-bound values: the stated (log m) tr(phi), the direct
  // evaluation S_phi(P/m) = (log m / m) tr(phi), and the derived
  // (log m) tr(phi rho). Only the derived bound is asserted, and only for
  // positive definite phi; the others are reported for inspection.
  if (m >= 1) {
    const double log_m = std::log(static_cast<double>(m));
    v.add_diagnostic("stated_bound", log_m * tr_phi);
    const DensityMatrix uniform(Hermitian(sup.projector.mat() / m, 1e-10));
    v.add_diagnostic("direct_value", weighted_entropy(uniform, phi).value);
    v.add_diagnostic("derived_bound", log_m * tr_phi_rho);

    const double cond = tr_phi_rho - tr_phi / m;
    v.add_condition("trace_condition", cond, cond >= -kConditionTol);
    v.add_condition("phi_positive_definite", static_cast<double>(m),
                    m == phi.dim());

    v.lhs = s.value;
    v.rhs = log_m * tr_phi_rho;
    v.slack = v.rhs - v.lhs;
    if (std::abs(v.slack) <= tol)
      v.add_diagnostic("equality_state_gap", (rho.mat() - uniform.mat()).norm());
  } else {
    v.add_condition("phi_nonzero", 0.0, false);
  }

  // Zero characterisation: S <= tol iff rho is pure or the weight vanishes on
  // every eigenvector with an eigenvalue strictly between 0 and 1. Checked in
  // both directions with bands wide enough to be numerically meaningful.
  const SpectralDecomposition eig = hermitian_eig(rho.herm());
  const double lam_max = eig.eigenvalues[0];
  double max_mid_weight = 0.0;
  for (int i = 0; i < eig.dim(); ++i) {
    const double lam = eig.eigenvalues[i];
    if (lam <= 1e-9 || lam >= 1.0 - 1e-9) continue;
    const double w =
        (eig.eigenvectors.col(i).adjoint() * phi.mat() * eig.eigenvectors.col(i)).value().real();
    max_mid_weight = std::max(max_mid_weight, w);
  }
  v.add_diagnostic("lambda_max", lam_max);
  v.add_diagnostic("max_mid_weight", max_mid_weight);
  const bool strongly_zero = lam_max >= 1.0 - 1e-12 || max_mid_weight <= 1e-12;
  if (strongly_zero && s.value > 1e-7) v.auxiliary_ok = false;
  if (s.value <= 1e-12 && !(lam_max >= 1.0 - 1e-6 || max_mid_weight <= 1e-6))
    v.auxiliary_ok = false;
  v.add_diagnostic("zero_characterisation", strongly_zero ? 1.0 : 0.0);

  v.finalize(tol);
  return v;
}

Verdict check_purification(const DensityMatrix& rho_a, const Weight& phi_a, double tol) {
  Verdict v;
  v.theorem = TheoremId::purification;
  v.equality = true;

  const int d = rho_a.dim();
  try {
    const PureState chi = purify(rho_a);
    const SubsystemShape ar({d, d});
    const Mat proj = chi.projector();
    v.add_diagnostic("purify_roundtrip",
                     (partial_trace(proj, ar, {0}) - rho_a.mat()).norm());

    const DensityMatrix rho_r = DensityMatrix::from_matrix(partial_trace(proj, ar, {1}));
    const Weight phi_r = cross_conjugate_weight(rho_a, phi_a, rho_r);
    const double s_a = weighted_entropy(rho_a, phi_a).value;
    const double s_r = weighted_entropy(rho_r, phi_r).value;
    v.lhs = s_a;
    v.rhs = s_r;
    v.slack = s_r - s_a;
    v.add_condition("nondegenerate_spectrum", 1.0, true);

    // For a bipartite state verify the second corollary equality as well:
    // the reduced weight on A transported onto BR across the A | BR cut.
    if (rho_a.shape() && rho_a.shape()->factors() == 2) {
      const SubsystemShape ab = *rho_a.shape();
      const SubsystemShape abr({ab.local_dims[0], ab.local_dims[1], d});
      const DensityMatrix red_a =
          DensityMatrix::from_matrix(partial_trace(rho_a.mat(), ab, {0}));
      const Weight phi_red_a = Weight::from_matrix(
          partial_trace(phi_a.mat(), ab, {0}) / ab.local_dims[1]);
      const DensityMatrix rho_br =
          DensityMatrix::from_matrix(partial_trace(proj, abr, {1, 2}));
      const Weight phi_br = cross_conjugate_weight(red_a, phi_red_a, rho_br);
      const double gap = std::abs(weighted_entropy(red_a, phi_red_a).value -
                                  weighted_entropy(rho_br, phi_br).value);
      v.add_diagnostic("corollary_second_gap", gap);
      if (gap > tol) v.auxiliary_ok = false;
    }
  } catch (const PairingAmbiguousError&) {
    v.add_condition("nondegenerate_spectrum", 0.0, false);
  }
  v.finalize(tol);
  return v;
}

Verdict check_diagonalisation(const DensityMatrix& rho, const Weight& phi, const Mat& basis,
                              double tol) {
  Verdict v;
  v.theorem = TheoremId::diagonalisation;

  const DensityMatrix rho_d = diagonal_part(rho, basis);
  const double tr_rho = re_trace_prod(phi.mat(), rho.mat());
  const double tr_rho_d = re_trace_prod(phi.mat(), rho_d.mat());
  v.add_condition("trace_condition", tr_rho - tr_rho_d,
                  tr_rho - tr_rho_d >= -kConditionTol);

  const EntropyValue s_phi = weighted_entropy(rho, phi);
  v.lhs = s_phi.value;
  v.add_residue("entropy", s_phi.imag_residue);

  // S_psi(rho^d) = -sum_j Re<f_j|phi rho|f_j> log <f_j|rho|f_j>, zero
  // diagonal entries skipped under the 0 log 0 convention.
  const Mat weighted = basis.adjoint() * (phi.mat() * rho.mat()) * basis;
  const Mat plain = basis.adjoint() * rho.mat() * basis;
  cxd sum = 0.0;
  for (int j = 0; j < rho.dim(); ++j) {
    const double dj = plain(j, j).real();
    if (dj <= kZeroEigenvalue) continue;
    sum += weighted(j, j) * std::log(dj);
  }
  v.rhs = -sum.real();
  v.add_residue("diagonal_entropy", std::abs(sum.imag()));

  v.slack = v.rhs - v.lhs;
  v.add_diagnostic("equality_state_gap", (rho.mat() - rho_d.mat()).norm());
  v.finalize(tol);
  return v;
}

Verdict check_subadditivity(const DensityMatrix& rho_ab, const Weight& phi_a,
                            const Weight& phi_b, TraceMode mode, double tol) {
  Verdict v;
  v.theorem = TheoremId::subadditivity;
  v.mode = mode;

  const SubsystemShape shape = require_shape(rho_ab, 2, "check_subadditivity");
  if (phi_a.dim() != shape.local_dims[0] || phi_b.dim() != shape.local_dims[1])
    throw ShapeError("check_subadditivity: weight dims do not match shape");

  const Weight phi_ab = Weight::from_matrix(tensor(phi_a.mat(), phi_b.mat()));
  const Mat rho_a = partial_trace(rho_ab.mat(), shape, {0});
  const Mat rho_b = partial_trace(rho_ab.mat(), shape, {1});

  const double joint = re_trace_prod(phi_ab.mat(), rho_ab.mat());
  const double product =
      re_trace_prod(phi_a.mat(), rho_a) * re_trace_prod(phi_b.mat(), rho_b);
  v.add_condition("trace_condition", joint - product, joint - product >= -kConditionTol);

  const EntropyValue joint_entropy = weighted_entropy(rho_ab, phi_ab);
  v.lhs = joint_entropy.value;
  v.add_residue("joint_entropy", joint_entropy.imag_residue);

  const auto reduce = mode == TraceMode::literal ? reduced_weighted_entropy
                                                 : sandwiched_reduced_entropy;
  const EntropyValue ra = reduce(rho_ab, phi_ab, shape, {0});
  const EntropyValue rb = reduce(rho_ab, phi_ab, shape, {1});
  v.rhs = ra.value + rb.value;
  v.add_residue("reduced_a", ra.imag_residue);
  v.add_residue("reduced_b", rb.imag_residue);

  v.slack = v.rhs - v.lhs;
  v.add_diagnostic("equality_state_gap", (rho_ab.mat() - tensor(rho_a, rho_b)).norm());
  v.finalize(tol);
  return v;
}

Verdict check_concavity(const std::vector<DensityMatrix>& states, const ProbabilityVector& b,
                        const Weight& phi, double tol) {
  Verdict v;
  v.theorem = TheoremId::concavity;

  const int r = b.size();
  if (static_cast<int>(states.size()) != r)
    throw ShapeError("check_concavity: states/probabilities length mismatch");
  if (r < 1) throw ShapeError("check_concavity: empty mixture");
  const int d = states[0].dim();
  for (const auto& s : states)
    if (s.dim() != d) throw ShapeError("check_concavity: states have mixed dimensions");
  if (phi.dim() != d) throw ShapeError("check_concavity: weight dimension mismatch");

  Mat sigma = Mat::Zero(d, d);
  double mean = 0.0;
  std::vector<double> block_weights(r);
  for (int l = 0; l < r; ++l) {
    sigma += b.entries[l] * states[l].mat();
    block_weights[l] = re_trace_prod(phi.mat(), states[l].mat());
    mean += b.entries[l] * weighted_entropy(states[l], phi).value;
  }
  const DensityMatrix mixture = DensityMatrix::from_matrix(std::move(sigma));

  v.lhs = mean;
  v.rhs = weighted_entropy(mixture, phi).value;
  v.slack = v.rhs - v.lhs;

  // Block-diagonal joint state on A (x) R and the exact entropy identity
  // S_{phi (x) 1_R}(rho) = sum_l b_l S_phi(rho_l) + h_B(b).
  const SubsystemShape ar({d, r});
  Mat joint = Mat::Zero(d * r, d * r);
  for (int l = 0; l < r; ++l) {
    Mat unit = Mat::Zero(r, r);
    unit(l, l) = 1.0;
    joint += b.entries[l] * tensor(states[l].mat(), unit);
  }
  const DensityMatrix rho_joint = DensityMatrix::from_matrix(std::move(joint), ar);
  const Weight phi_ext = Weight::from_matrix(tensor(phi.mat(), Mat::Identity(r, r)));
  const double joint_entropy = weighted_entropy(rho_joint, phi_ext).value;
  const double shannon = weighted_shannon(b, block_weights);
  const double identity_gap = std::abs(joint_entropy - (mean + shannon));
  v.add_diagnostic("identity_gap", identity_gap);
  v.add_diagnostic("weighted_shannon", shannon);
  if (identity_gap > 1e-10) v.auxiliary_ok = false;

  // The subadditivity condition for the joint construction holds with
  // equality: tr((phi (x) 1) rho) = tr(phi sigma) analytically.
  const double joint_trace = re_trace_prod(phi_ext.mat(), rho_joint.mat());
  const double sigma_trace = re_trace_prod(phi.mat(), mixture.mat());
  v.add_condition("joint_trace_condition", joint_trace - sigma_trace,
                  joint_trace - sigma_trace >= -kConditionTol);
  v.add_diagnostic("joint_trace_gap", std::abs(joint_trace - sigma_trace));

  v.finalize(tol);
  return v;
}

namespace {

// One orientation of the Araki-Lieb bound: trial weights live on Y (x) R and
// the bound reads S_phi(rho) >= S_{psi_X}(rho_X) - S_{psi_Y}(rho_Y).
struct AlOrientation {
  DensityMatrix rho_yr;  // with two-factor shape [dY, dR]
  DensityMatrix rho_x;
  DensityMatrix rho_y;
};

struct AlTally {
  int tested = 0;
  int admissible = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  double best_difference = -std::numeric_limits<double>::infinity();
};

void al_run_orientation(const AlOrientation& o, const DensityMatrix& rho,
                        const Weight& phi, const DensityMatrix& rho_r, double s_rho,
                        int candidates, Rng& rng, AlTally& tally) {
  const SubsystemShape yr = *o.rho_yr.shape();
  const int dy = yr.local_dims[0];
  const int dr = yr.local_dims[1];

  // Conjugacy targets: diagonal elements of phi in rho's eigenbasis, paired
  // with rho_R's eigenvalues in descending order.
  const SpectralDecomposition rho_eig = hermitian_eig(rho.herm());
  const SpectralDecomposition r_eig = hermitian_eig(rho_r.herm());

  // Candidate family: the conjugate-diagonal construction 1_Y (x) phi_R'
  // (admissible whenever the pairing is well defined), the identity, and
  // sampled products / diagonal-in-eigenbasis weights.
  std::vector<Mat> trials;
  const Weight phi_r_conj = cross_conjugate_weight(rho, phi, rho_r);
  trials.push_back(tensor(Mat::Identity(dy, dy), phi_r_conj.mat()));
  trials.push_back(Mat::Identity(dy * dr, dy * dr));
  const SpectralDecomposition yr_eig = hermitian_eig(o.rho_yr.herm());
  while (static_cast<int>(trials.size()) < candidates) {
    if (trials.size() % 2 == 0) {
      Mat wy = sample_weight(dy, rng, false).mat();
      Mat wr = sample_weight(dr, rng, false).mat();
      Mat prod = tensor(wy / wy.norm(), wr / wr.norm());
      trials.push_back(std::move(prod));
    } else {
      RealVec diag(dy * dr);
      for (int i = 0; i < dy * dr; ++i) diag[i] = rng.uniform(0.0, 2.0);
      trials.push_back(yr_eig.assemble(diag));
    }
  }

  const Mat rho_y_x_rho_r = tensor(o.rho_y.mat(), rho_r.mat());
  for (const Mat& trial : trials) {
    ++tally.tested;
    // Membership: the trace condition on YR and the (rho_R, rho)-conjugacy of
    // the implicit psi_R^* to phi, matched on eigenvalues inside (0, 1).
    const double tr_joint = re_trace_prod(trial, o.rho_yr.mat());
    const double tr_split = re_trace_prod(trial, rho_y_x_rho_r);
    if (tr_joint - tr_split < -kConditionTol) continue;

    const Mat t_r = partial_trace(trial * o.rho_yr.mat(), yr, {1});
    bool conjugate = true;
    for (int i = 0; i < r_eig.dim(); ++i) {
      const double lam = r_eig.eigenvalues[i];
      if (lam <= kConjugacyTol || lam >= 1.0 - kConjugacyTol) continue;
      const double target =
          (rho_eig.eigenvectors.col(i).adjoint() * phi.mat() * rho_eig.eigenvectors.col(i))
              .value()
              .real();
      const double got =
          (r_eig.eigenvectors.col(i).adjoint() * t_r * r_eig.eigenvectors.col(i))
              .value()
              .real() /
          lam;
      if (std::abs(got - target) > kConjugacyTol) {
        conjugate = false;
        break;
      }
    }
    if (!conjugate) continue;

    ++tally.admissible;
    const Weight trial_w = Weight::from_matrix(trial);
    const Weight psi_x = cross_conjugate_weight(o.rho_yr, trial_w, o.rho_x);
    const double s_x = weighted_entropy(o.rho_x, psi_x).value;
    const double s_y = reduced_weighted_entropy(o.rho_yr, trial_w, yr, {0}).value;
    const double difference = s_x - s_y;
    tally.best_difference = std::max(tally.best_difference, difference);
    tally.min_slack = std::min(tally.min_slack, s_rho - difference);
  }
}

}  // namespace

Verdict check_araki_lieb(const DensityMatrix& rho_ab, const Weight& phi_ab, int candidates,
                         Rng& rng, double tol) {
  Verdict v;
  v.theorem = TheoremId::araki_lieb;

  const SubsystemShape shape = require_shape(rho_ab, 2, "check_araki_lieb");
  const int da = shape.local_dims[0];
  const int db = shape.local_dims[1];
  const int dr = da * db;
  if (phi_ab.dim() != dr) throw ShapeError("check_araki_lieb: weight dimension mismatch");
  candidates = std::max(candidates, 2);

  try {
    const PureState chi = purify(rho_ab);
    const Mat proj = chi.projector();
    const SubsystemShape abr({da, db, dr});

    const DensityMatrix rho_r = DensityMatrix::from_matrix(partial_trace(proj, abr, {2}));
    const DensityMatrix rho_a = DensityMatrix::from_matrix(partial_trace(rho_ab.mat(), shape, {0}));
    const DensityMatrix rho_b = DensityMatrix::from_matrix(partial_trace(rho_ab.mat(), shape, {1}));
    const DensityMatrix rho_br =
        DensityMatrix::from_matrix(partial_trace(proj, abr, {1, 2}))
            .with_shape(SubsystemShape({db, dr}));
    const DensityMatrix rho_ar =
        DensityMatrix::from_matrix(partial_trace(proj, abr, {0, 2}))
            .with_shape(SubsystemShape({da, dr}));

    const double s_rho = weighted_entropy(rho_ab, phi_ab).value;
    v.rhs = s_rho;

    AlTally tally;
    al_run_orientation({rho_br, rho_a, rho_b}, rho_ab, phi_ab, rho_r, s_rho, candidates,
                       rng, tally);
    al_run_orientation({rho_ar, rho_b, rho_a}, rho_ab, phi_ab, rho_r, s_rho, candidates,
                       rng, tally);

    v.add_condition("nondegenerate_spectrum", 1.0, true);
    v.add_condition("admissible_candidates", static_cast<double>(tally.admissible),
                    tally.admissible >= 1);
    v.add_diagnostic("candidates_tested", static_cast<double>(tally.tested));
    v.add_diagnostic("admissible_count", static_cast<double>(tally.admissible));
    if (tally.admissible >= 1) {
      v.lhs = tally.best_difference;
      v.slack = tally.min_slack;
    }
  } catch (const PairingAmbiguousError&) {
    v.add_condition("nondegenerate_spectrum", 0.0, false);
    v.add_condition("admissible_candidates", 0.0, false);
  }
  v.finalize(tol);
  return v;
}

Verdict check_ssa(const DensityMatrix& rho_abc, const Weight& phi_a, const Weight& phi_b,
                  const Weight& phi_c, TraceMode mode, double tol) {
  Verdict v;
  v.theorem = TheoremId::ssa;
  v.mode = mode;

  const SubsystemShape shape = require_shape(rho_abc, 3, "check_ssa");
  const int da = shape.local_dims[0];
  const int db = shape.local_dims[1];
  const int dc = shape.local_dims[2];
  if (phi_a.dim() != da || phi_b.dim() != db || phi_c.dim() != dc)
    throw ShapeError("check_ssa: weight dims do not match shape");

  const Weight phi_abc = Weight::from_matrix(tensor(phi_a.mat(), phi_b.mat(), phi_c.mat()));
  const SubsystemShape ab({da, db}), bc({db, dc});
  const Mat rho_ab = partial_trace(rho_abc.mat(), shape, {0, 1});
  const Mat rho_bc = partial_trace(rho_abc.mat(), shape, {1, 2});
  const Mat rho_b = partial_trace(rho_abc.mat(), shape, {1});

  // Condition (i): tr(phi rho) >= tr_B{ phi_B tr_A(phi_A rho_AB) tr_C(phi_C rho_BC) rho_B^{-1} }.
  const Mat m_a = partial_trace(tensor(phi_a.mat(), Mat::Identity(db, db)) * rho_ab, ab, {1});
  const Mat m_c = partial_trace(tensor(Mat::Identity(db, db), phi_c.mat()) * rho_bc, bc, {0});
  const SupportInfo b_support = support_info(Hermitian(rho_b, 1e-10));
  v.add_diagnostic("rho_b_rank", static_cast<double>(b_support.rank));
  v.add_diagnostic("rho_b_full_rank", b_support.rank == db ? 1.0 : 0.0);

  const double joint_trace = re_trace_prod(phi_abc.mat(), rho_abc.mat());
  const cxd nested = trace_prod(phi_b.mat() * m_a * m_c, b_support.pseudo_inverse.mat());
  v.add_condition("trace_condition", joint_trace - nested.real(),
                  joint_trace - nested.real() >= -kConditionTol);
  v.add_residue("condition_trace", std::abs(nested.imag()));

  // Condition (ii): both commutators vanish, in the stated or the A<->C
  // interchanged form.
  const double stated = std::max(
      commutator_norm(rho_ab, tensor(phi_a.mat(), phi_b.mat())), commutator_norm(m_c, rho_b));
  const double interchanged = std::max(
      commutator_norm(rho_bc, tensor(phi_b.mat(), phi_c.mat())), commutator_norm(m_a, rho_b));
  const double comm = std::min(stated, interchanged);
  v.add_condition("commutation_condition", comm, comm <= kCommutatorTol);
  v.add_diagnostic("commutator_stated", stated);
  v.add_diagnostic("commutator_interchanged", interchanged);

  const EntropyValue joint_entropy = weighted_entropy(rho_abc, phi_abc);
  v.add_residue("joint_entropy", joint_entropy.imag_residue);

  const auto reduce = mode == TraceMode::literal ? reduced_weighted_entropy
                                                 : sandwiched_reduced_entropy;
  const EntropyValue s_b = reduce(rho_abc, phi_abc, shape, {1});
  const EntropyValue s_ab = reduce(rho_abc, phi_abc, shape, {0, 1});
  const EntropyValue s_bc = reduce(rho_abc, phi_abc, shape, {1, 2});
  v.add_residue("reduced_b", s_b.imag_residue);
  v.add_residue("reduced_ab", s_ab.imag_residue);
  v.add_residue("reduced_bc", s_bc.imag_residue);

  v.lhs = joint_entropy.value + s_b.value;
  v.rhs = s_ab.value + s_bc.value;
  v.slack = v.rhs - v.lhs;
  v.finalize(tol);
  return v;
}

Verdict check_lieb_triple(const Weight& w, const Hermitian& x, const Hermitian& y,
                          const Hermitian& z, double tol) {
  Verdict v;
  v.theorem = TheoremId::lieb_triple;

  const Hermitian sum = Hermitian(x.mat() + y.mat() + z.mat());
  const cxd lhs_t = trace_prod(w.mat(), matrix_func(sum, ScalarFunction::exp()).mat());
  v.lhs = lhs_t.real();
  v.add_residue("lhs_trace", std::abs(lhs_t.imag()));

  const Hermitian exp_neg_x = matrix_func(Hermitian(-x.mat()), ScalarFunction::exp());
  const Hermitian exp_y = matrix_func(y, ScalarFunction::exp());
  const Hermitian t = lieb_t(exp_neg_x, exp_y);
  const Hermitian k = k_w(z, w.herm());
  const cxd rhs_t = trace_prod(k.mat(), t.mat());
  v.rhs = rhs_t.real();
  v.add_residue("rhs_trace", std::abs(rhs_t.imag()));

  v.slack = v.rhs - v.lhs;
  v.finalize(tol);
  return v;
}

}  // namespace wqe
