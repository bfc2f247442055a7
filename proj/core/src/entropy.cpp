#include "wqe/entropy.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "wqe/functions.hpp"
#include "wqe/tensor.hpp"

namespace wqe {

namespace {

constexpr double kSupportViolation = 1e-10;

// rho log rho assembled in rho's eigenbasis, exactly Hermitian.
Mat rho_log_rho(const DensityMatrix& rho) {
  const SpectralDecomposition eig = hermitian_eig(rho.herm());
  const double cut = kSupportTol * std::max(eig.eigenvalues[0], 0.0);
  RealVec mapped(eig.dim());
  for (int i = 0; i < eig.dim(); ++i) {
    const double lam = eig.eigenvalues[i];
    mapped[i] = lam <= cut ? 0.0 : lam * std::log(lam);
  }
  return eig.assemble(mapped);
}

EntropyValue reduced_entropy_of(const Mat& weighted_joint, const DensityMatrix& rho_joint,
                                const SubsystemShape& shape, const std::vector<int>& keep) {
  const Mat t = partial_trace(weighted_joint, shape, keep);
  const Mat rho_keep = partial_trace(rho_joint.mat(), shape, keep);
  const Hermitian log_keep = log_on_support(Hermitian(rho_keep, 1e-10));
  const cxd v = trace_prod(t, log_keep.mat());
  return {-v.real(), std::abs(v.imag()), false};
}

}  // namespace

const char* trace_mode_name(TraceMode mode) {
  return mode == TraceMode::literal ? "literal" : "sandwiched";
}

TraceMode trace_mode_from_name(const std::string& name) {
  if (name == "literal") return TraceMode::literal;
  if (name == "sandwiched") return TraceMode::sandwiched;
  throw ConfigError("unknown trace mode: " + name);
}

EntropyValue weighted_entropy(const DensityMatrix& rho, const Weight& phi) {
  if (phi.dim() != rho.dim()) throw ShapeError("weighted_entropy: dimension mismatch");
  const cxd t = trace_prod(phi.mat(), rho_log_rho(rho));
  return {-t.real(), std::abs(t.imag()), false};
}

EntropyValue weighted_relative_entropy(const DensityMatrix& rho, const Hermitian& sigma,
                                       const Weight& phi, TraceMode mode,
                                       double support_tol) {
  if (sigma.dim() != rho.dim() || phi.dim() != rho.dim())
    throw ShapeError("weighted_relative_entropy: dimension mismatch");

  const SpectralDecomposition sig_eig = hermitian_eig(sigma);
  const double lam_max = sig_eig.eigenvalues[0];
  const double lam_min = sig_eig.eigenvalues[sig_eig.dim() - 1];
  if (lam_min < -kPsdTol * std::max(1.0, lam_max)) {
    std::ostringstream os;
    os << "weighted_relative_entropy: sigma has eigenvalue " << lam_min;
    throw DomainError(os.str());
  }

  // Support check: mass of rho on sigma's numerical null space.
  const double cut = support_tol * std::max(lam_max, 0.0);
  double leak = 0.0;
  for (int i = 0; i < sig_eig.dim(); ++i) {
    if (sig_eig.eigenvalues[i] > cut) continue;
    const Vec v = sig_eig.eigenvectors.col(i);
    leak += (v.adjoint() * rho.mat() * v).value().real();
  }
  if (leak > kSupportViolation) {
    return {std::numeric_limits<double>::infinity(), 0.0, true};
  }

  const Hermitian log_sigma = log_on_support(sig_eig, support_tol);
  const cxd t1 = trace_prod(phi.mat(), rho_log_rho(rho));

  cxd t2;
  if (mode == TraceMode::literal) {
    t2 = trace_prod(phi.mat() * rho.mat(), log_sigma.mat());
  } else {
    const Hermitian l = sqrt_psd(phi.herm());
    const Mat sandwiched = l.mat() * rho.mat() * l.mat();
    t2 = trace_prod(sandwiched, log_sigma.mat());
  }
  const cxd total = t1 - t2;
  return {total.real(), std::abs(total.imag()), false};
}

EntropyValue reduced_weighted_entropy(const DensityMatrix& rho_joint, const Weight& phi_joint,
                                      const SubsystemShape& shape,
                                      const std::vector<int>& keep) {
  if (shape.dim() != rho_joint.dim() || phi_joint.dim() != rho_joint.dim())
    throw ShapeError("reduced_weighted_entropy: dimension mismatch");
  return reduced_entropy_of(phi_joint.mat() * rho_joint.mat(), rho_joint, shape, keep);
}

EntropyValue sandwiched_reduced_entropy(const DensityMatrix& rho_joint, const Weight& phi_joint,
                                        const SubsystemShape& shape,
                                        const std::vector<int>& keep) {
  if (shape.dim() != rho_joint.dim() || phi_joint.dim() != rho_joint.dim())
    throw ShapeError("sandwiched_reduced_entropy: dimension mismatch");
  const Hermitian l = sqrt_psd(phi_joint.herm());
  return reduced_entropy_of(l.mat() * rho_joint.mat() * l.mat(), rho_joint, shape, keep);
}

double weighted_shannon(const ProbabilityVector& b, const std::vector<double>& weights) {
  if (b.entries.size() != weights.size())
    throw ShapeError("weighted_shannon: length mismatch");
  double h = 0.0;
  for (size_t l = 0; l < weights.size(); ++l) {
    if (weights[l] < 0.0) throw Error("weighted_shannon: negative weight");
    const double p = b.entries[l];
    if (p > 0.0) h -= weights[l] * p * std::log(p);
  }
  return h;
}

}  // namespace wqe
