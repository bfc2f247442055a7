#include "wqe/instances.hpp"

#include <algorithm>
#include <cmath>

#include "wqe/tensor.hpp"

namespace wqe {

const char* ensemble_name(Ensemble e) {
  switch (e) {
    case Ensemble::generic: return "generic";
    case Ensemble::classical: return "classical";
    case Ensemble::commuting_weight: return "commuting-weight";
    case Ensemble::product_state: return "product-state";
    case Ensemble::pure_state: return "pure-state";
  }
  return "unknown";
}

Ensemble ensemble_from_name(const std::string& name) {
  if (name == "generic") return Ensemble::generic;
  if (name == "classical") return Ensemble::classical;
  if (name == "commuting-weight" || name == "commuting_weight") return Ensemble::commuting_weight;
  if (name == "product-state" || name == "product_state") return Ensemble::product_state;
  if (name == "pure-state" || name == "pure_state") return Ensemble::pure_state;
  throw ConfigError("unknown ensemble: " + name);
}

Weight campaign_weight(int d, Rng& rng) {
  Mat w = sample_weight(d, rng, true).mat();
  w /= w.norm();
  return Weight::from_matrix(std::move(w), true);
}

Hermitian campaign_pd_hermitian(int d, Rng& rng) {
  const Mat g = sample_ginibre(d, d, rng);
  Mat m = g * g.adjoint();
  m /= m.norm();
  m += 0.1 * Mat::Identity(d, d);
  return Hermitian(std::move(m));
}

Hermitian campaign_gauss_hermitian(int d, Rng& rng) {
  Mat m = sample_hermitian(d, rng).mat();
  m /= m.norm();
  return Hermitian(std::move(m));
}

namespace {

// Diagonal spectrum in a supplied basis; entries uniform in [0.1, 1.1).
Weight weight_in_basis(const Mat& basis, Rng& rng) {
  const int d = static_cast<int>(basis.cols());
  RealVec diag(d);
  for (int i = 0; i < d; ++i) diag[i] = rng.uniform(0.1, 1.1);
  Mat w = basis * diag.asDiagonal() * basis.adjoint();
  w /= w.norm();
  return Weight::from_matrix(std::move(w), true);
}

Hermitian pd_in_basis(const Mat& basis, Rng& rng) {
  const int d = static_cast<int>(basis.cols());
  RealVec diag(d);
  for (int i = 0; i < d; ++i) diag[i] = rng.uniform(0.1, 1.1);
  return Hermitian(basis * diag.asDiagonal() * basis.adjoint(), 1e-10);
}

DensityMatrix diagonal_density(int d, Rng& rng) {
  const ProbabilityVector p = sample_probability_vector(d, rng);
  Mat rho = Mat::Zero(d, d);
  for (int i = 0; i < d; ++i) rho(i, i) = p.entries[i];
  return DensityMatrix::from_matrix(std::move(rho));
}

Weight diagonal_weight(int d, Rng& rng) {
  Mat w = Mat::Zero(d, d);
  for (int i = 0; i < d; ++i) w(i, i) = rng.uniform(0.1, 1.1);
  w /= w.norm();
  return Weight::from_matrix(std::move(w), true);
}

Weight pick_weight(int d, Rng& rng, const InstanceOptions& opts) {
  if (opts.identity_weights) return Weight::identity(d);
  switch (opts.ensemble) {
    case Ensemble::classical: return diagonal_weight(d, rng);
    default: return campaign_weight(d, rng);
  }
}

DensityMatrix pick_density(int d, Rng& rng, const InstanceOptions& opts) {
  switch (opts.ensemble) {
    case Ensemble::classical: return diagonal_density(d, rng);
    case Ensemble::pure_state: return sample_density(d, 1, rng);
    default: return sample_density(d, d, rng);
  }
}

bool in(Ensemble e, std::initializer_list<Ensemble> allowed) {
  return std::find(allowed.begin(), allowed.end(), e) != allowed.end();
}

Verdict instance_klein(const SubsystemShape& shape, const InstanceOptions& opts, Rng& rng) {
  const int d = shape.dim();
  Weight w = opts.ensemble == Ensemble::classical ? diagonal_weight(d, rng)
                                                  : campaign_weight(d, rng);
  if (opts.weight_override) w = Weight::from_matrix(*opts.weight_override);
  Hermitian x = Hermitian::identity(d);
  switch (opts.ensemble) {
    case Ensemble::commuting_weight: {
      const SpectralDecomposition weig = hermitian_eig(w.herm());
      x = pd_in_basis(weig.eigenvectors, rng);
      break;
    }
    case Ensemble::classical:
      x = pd_in_basis(Mat::Identity(d, d), rng);
      break;
    default:
      x = campaign_pd_hermitian(d, rng);
  }
  const Hermitian y = opts.ensemble == Ensemble::classical
                          ? pd_in_basis(Mat::Identity(d, d), rng)
                          : campaign_pd_hermitian(d, rng);
  return check_klein(w, x, y, ScalarFunction::xlogx(), opts.mode, opts.tolerance);
}

DensityMatrix density_in_basis(const Mat& basis, Rng& rng) {
  const int d = static_cast<int>(basis.cols());
  const ProbabilityVector p = sample_probability_vector(d, rng);
  Mat diag = Mat::Zero(d, d);
  for (int i = 0; i < d; ++i) diag(i, i) = p.entries[i];
  return DensityMatrix::from_matrix(basis * diag * basis.adjoint());
}

Verdict instance_gibbs(const SubsystemShape& shape, const InstanceOptions& opts, Rng& rng) {
  const int d = shape.dim();
  DensityMatrix rho = pick_density(d, rng, opts);
  DensityMatrix sigma = opts.ensemble == Ensemble::classical ? diagonal_density(d, rng)
                                                             : sample_density(d, d, rng);
  Weight phi = opts.ensemble == Ensemble::classical ? diagonal_weight(d, rng)
                                                    : campaign_weight(d, rng);
  if (opts.ensemble == Ensemble::commuting_weight) {
    // Common eigenbasis for rho, sigma and phi, so the trace-condition swap
    // below cannot break the commutation.
    const Mat q = sample_unitary(d, rng);
    rho = density_in_basis(q, rng);
    sigma = density_in_basis(q, rng);
    phi = weight_in_basis(q, rng);
  }
  if (opts.identity_weights) phi = Weight::identity(d);
  if (opts.weight_override) phi = Weight::from_matrix(*opts.weight_override);

  const bool enforce = !opts.state_override;
  if (opts.state_override) rho = DensityMatrix::from_matrix(*opts.state_override);
  if (enforce) {
    // The trace condition is enforced by construction: orient the pair.
    const double c = trace_prod(phi.mat(), rho.mat()).real() -
                     trace_prod(phi.mat(), sigma.mat()).real();
    if (c < 0.0) std::swap(rho, sigma);
  }
  return check_gibbs(rho, sigma.herm(), phi, opts.mode, opts.tolerance);
}

Verdict instance_bounds(const SubsystemShape& shape, const InstanceOptions& opts, Rng& rng) {
  const int d = shape.dim();
  DensityMatrix rho = pick_density(d, rng, opts);
  Weight phi = pick_weight(d, rng, opts);
  if (opts.ensemble == Ensemble::commuting_weight)
    phi = weight_in_basis(hermitian_eig(rho.herm()).eigenvectors, rng);
  if (opts.state_override) rho = DensityMatrix::from_matrix(*opts.state_override);
  if (opts.weight_override) phi = Weight::from_matrix(*opts.weight_override);
  return check_entropy_bounds(rho, phi, opts.tolerance);
}

Verdict instance_purification(const SubsystemShape& shape, const InstanceOptions& opts,
                              Rng& rng) {
  const int d = shape.dim();
  DensityMatrix rho = pick_density(d, rng, opts);
  Weight phi = pick_weight(d, rng, opts);
  if (opts.ensemble == Ensemble::commuting_weight)
    phi = weight_in_basis(hermitian_eig(rho.herm()).eigenvectors, rng);
  if (opts.state_override) rho = DensityMatrix::from_matrix(*opts.state_override);
  if (opts.weight_override) phi = Weight::from_matrix(*opts.weight_override);
  if (shape.factors() == 2) rho = rho.with_shape(shape);
  return check_purification(rho, phi, opts.tolerance);
}

Verdict instance_diagonalisation(const SubsystemShape& shape, const InstanceOptions& opts,
                                 Rng& rng) {
  const int d = shape.dim();
  DensityMatrix rho = pick_density(d, rng, opts);
  Weight phi = pick_weight(d, rng, opts);
  Mat basis = sample_unitary(d, rng);
  if (opts.ensemble == Ensemble::classical) basis = Mat::Identity(d, d);
  if (opts.ensemble == Ensemble::commuting_weight)
    phi = weight_in_basis(hermitian_eig(rho.herm()).eigenvectors, rng);
  if (opts.state_override) rho = DensityMatrix::from_matrix(*opts.state_override);
  if (opts.weight_override) phi = Weight::from_matrix(*opts.weight_override);
  return check_diagonalisation(rho, phi, basis, opts.tolerance);
}

Verdict instance_subadditivity(const SubsystemShape& shape, const InstanceOptions& opts,
                               Rng& rng) {
  const int da = shape.local_dims[0], db = shape.local_dims[1];
  DensityMatrix rho = sample_density(shape.dim(), shape.dim(), rng).with_shape(shape);
  Weight phi_a = Weight::identity(da), phi_b = Weight::identity(db);
  switch (opts.ensemble) {
    case Ensemble::classical: {
      ClassicalInstance ci = sample_classical_instance(shape, rng);
      rho = ci.rho;
      phi_a = ci.factor_weights[0];
      phi_b = ci.factor_weights[1];
      break;
    }
    case Ensemble::product_state: {
      const DensityMatrix a = sample_density(da, da, rng);
      const DensityMatrix b = sample_density(db, db, rng);
      rho = DensityMatrix::from_matrix(tensor(a.mat(), b.mat()), shape);
      phi_a = campaign_weight(da, rng);
      phi_b = campaign_weight(db, rng);
      break;
    }
    case Ensemble::pure_state:
      rho = sample_density(shape.dim(), 1, rng).with_shape(shape);
      [[fallthrough]];
    default:
      phi_a = campaign_weight(da, rng);
      phi_b = campaign_weight(db, rng);
  }
  if (opts.identity_weights) {
    phi_a = Weight::identity(da);
    phi_b = Weight::identity(db);
  }
  if (opts.state_override)
    rho = DensityMatrix::from_matrix(*opts.state_override, shape);
  return check_subadditivity(rho, phi_a, phi_b, opts.mode, opts.tolerance);
}

Verdict instance_concavity(const SubsystemShape& shape, const InstanceOptions& opts, Rng& rng) {
  const int d = shape.dim();
  const int r = std::max(opts.blocks, 1);
  std::vector<DensityMatrix> states;
  states.reserve(r);
  for (int l = 0; l < r; ++l) {
    switch (opts.ensemble) {
      case Ensemble::classical: states.push_back(diagonal_density(d, rng)); break;
      case Ensemble::pure_state: states.push_back(sample_density(d, 1, rng)); break;
      default: states.push_back(sample_density(d, d, rng));
    }
  }
  const ProbabilityVector b = sample_probability_vector(r, rng);
  Weight phi = pick_weight(d, rng, opts);
  if (opts.weight_override) phi = Weight::from_matrix(*opts.weight_override);
  return check_concavity(states, b, phi, opts.tolerance);
}

Verdict instance_araki_lieb(const SubsystemShape& shape, const InstanceOptions& opts,
                            Rng& rng) {
  const int d = shape.dim();
  DensityMatrix rho = pick_density(d, rng, opts).with_shape(shape);
  Weight phi = pick_weight(d, rng, opts);
  if (opts.state_override) rho = DensityMatrix::from_matrix(*opts.state_override, shape);
  if (opts.weight_override) phi = Weight::from_matrix(*opts.weight_override);
  return check_araki_lieb(rho, phi, opts.candidates, rng, opts.tolerance);
}

Verdict instance_ssa(const SubsystemShape& shape, const InstanceOptions& opts, Rng& rng) {
  const int da = shape.local_dims[0], db = shape.local_dims[1], dc = shape.local_dims[2];
  DensityMatrix rho = sample_density(shape.dim(), shape.dim(), rng).with_shape(shape);
  Weight phi_a = Weight::identity(da), phi_b = Weight::identity(db),
         phi_c = Weight::identity(dc);
  switch (opts.ensemble) {
    case Ensemble::classical: {
      ClassicalInstance ci = sample_classical_instance(shape, rng);
      rho = ci.rho;
      phi_a = ci.factor_weights[0];
      phi_b = ci.factor_weights[1];
      phi_c = ci.factor_weights[2];
      break;
    }
    case Ensemble::product_state: {
      // Equality family: rho_AB (x) rho_C with identity weights.
      const DensityMatrix ab = sample_density(da * db, da * db, rng);
      const DensityMatrix c = sample_density(dc, dc, rng);
      rho = DensityMatrix::from_matrix(tensor(ab.mat(), c.mat()), shape);
      break;
    }
    default:
      if (!opts.identity_weights) {
        phi_a = campaign_weight(da, rng);
        phi_b = campaign_weight(db, rng);
        phi_c = campaign_weight(dc, rng);
      }
  }
  if (opts.identity_weights) {
    phi_a = Weight::identity(da);
    phi_b = Weight::identity(db);
    phi_c = Weight::identity(dc);
  }
  if (opts.state_override)
    rho = DensityMatrix::from_matrix(*opts.state_override, shape);
  return check_ssa(rho, phi_a, phi_b, phi_c, opts.mode, opts.tolerance);
}

Verdict instance_lieb_triple(const SubsystemShape& shape, const InstanceOptions& opts,
                             Rng& rng) {
  const int d = shape.dim();
  Weight w = Weight::identity(d);
  Hermitian x = Hermitian::zero(d), y = Hermitian::zero(d), z = Hermitian::zero(d);
  if (opts.ensemble == Ensemble::commuting_weight || opts.ensemble == Ensemble::classical) {
    const Mat q = opts.ensemble == Ensemble::classical ? Mat::Identity(d, d)
                                                       : sample_unitary(d, rng);
    w = weight_in_basis(q, rng);
    auto diag_herm = [&]() {
      RealVec diag(d);
      for (int i = 0; i < d; ++i) diag[i] = rng.uniform(-1.0, 1.0);
      return Hermitian(q * diag.asDiagonal() * q.adjoint(), 1e-10);
    };
    x = diag_herm();
    y = diag_herm();
    z = diag_herm();
  } else {
    w = opts.identity_weights ? Weight::identity(d) : campaign_weight(d, rng);
    x = campaign_gauss_hermitian(d, rng);
    y = campaign_gauss_hermitian(d, rng);
    z = campaign_gauss_hermitian(d, rng);
  }
  if (opts.weight_override) w = Weight::from_matrix(*opts.weight_override);
  return check_lieb_triple(w, x, y, z, opts.tolerance);
}

}  // namespace

void validate_combination(TheoremId theorem, const SubsystemShape& shape,
                          const InstanceOptions& opts) {
  const Ensemble e = opts.ensemble;
  const int f = shape.factors();
  auto fail = [&](const std::string& why) {
    throw ConfigError(std::string("invalid combination for ") + theorem_name(theorem) + ": " +
                      why);
  };

  for (int d : shape.local_dims)
    if (d < 2) fail("local dimensions must be at least 2");
  if (shape.dim() > 64) fail("total dimension exceeds 64");

  switch (theorem) {
    case TheoremId::klein:
    case TheoremId::lieb_triple:
      if (!in(e, {Ensemble::generic, Ensemble::commuting_weight, Ensemble::classical}))
        fail("ensemble not meaningful here");
      if (opts.state_override) fail("--state has no target operand");
      break;
    case TheoremId::gibbs:
    case TheoremId::bounds:
    case TheoremId::diagonalisation:
      if (!in(e, {Ensemble::generic, Ensemble::classical, Ensemble::commuting_weight,
                  Ensemble::pure_state}))
        fail("ensemble not meaningful here");
      break;
    case TheoremId::purification:
      if (!in(e, {Ensemble::generic, Ensemble::classical, Ensemble::commuting_weight,
                  Ensemble::pure_state}))
        fail("ensemble not meaningful here");
      if (f > 2) fail("at most two factors");
      break;
    case TheoremId::subadditivity:
      if (f != 2) fail("needs a 2-factor shape");
      if (!in(e, {Ensemble::generic, Ensemble::classical, Ensemble::product_state,
                  Ensemble::pure_state}))
        fail("ensemble not meaningful here");
      if (opts.weight_override) fail("--weight not supported with per-factor weights");
      break;
    case TheoremId::concavity:
      if (!in(e, {Ensemble::generic, Ensemble::classical, Ensemble::pure_state}))
        fail("ensemble not meaningful here");
      if (opts.state_override) fail("--state not supported for mixtures");
      break;
    case TheoremId::araki_lieb:
      if (f != 2) fail("needs a 2-factor shape");
      if (shape.dim() * shape.dim() > 4096) fail("purified dimension too large");
      if (!in(e, {Ensemble::generic, Ensemble::classical, Ensemble::pure_state}))
        fail("ensemble not meaningful here");
      break;
    case TheoremId::ssa:
      if (f != 3) fail("needs a 3-factor shape");
      if (!in(e, {Ensemble::generic, Ensemble::classical, Ensemble::product_state}))
        fail("ensemble not meaningful here");
      if (opts.weight_override) fail("--weight not supported with per-factor weights");
      break;
  }

  if (opts.state_override) {
    const Mat& m = *opts.state_override;
    if (m.rows() != shape.dim()) fail("--state dimension does not match --dims");
  }
  if (opts.weight_override) {
    const Mat& m = *opts.weight_override;
    if (m.rows() != shape.dim()) fail("--weight dimension does not match --dims");
  }
}

Verdict run_instance(TheoremId theorem, const SubsystemShape& shape,
                     const InstanceOptions& opts, RngStream stream) {
  Rng rng(stream);
  Verdict v;
  switch (theorem) {
    case TheoremId::klein: v = instance_klein(shape, opts, rng); break;
    case TheoremId::gibbs: v = instance_gibbs(shape, opts, rng); break;
    case TheoremId::bounds: v = instance_bounds(shape, opts, rng); break;
    case TheoremId::purification: v = instance_purification(shape, opts, rng); break;
    case TheoremId::diagonalisation: v = instance_diagonalisation(shape, opts, rng); break;
    case TheoremId::subadditivity: v = instance_subadditivity(shape, opts, rng); break;
    case TheoremId::concavity: v = instance_concavity(shape, opts, rng); break;
    case TheoremId::araki_lieb: v = instance_araki_lieb(shape, opts, rng); break;
    case TheoremId::ssa: v = instance_ssa(shape, opts, rng); break;
    case TheoremId::lieb_triple: v = instance_lieb_triple(shape, opts, rng); break;
  }
  v.seed = stream.seed;
  v.stream_index = stream.stream_index;
  return v;
}

}  // namespace wqe
