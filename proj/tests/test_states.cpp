#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "wqe/entropy.hpp"
#include "wqe/states.hpp"
#include "wqe/tensor.hpp"

using namespace wqe;
using test::diag;
using test::rng_for;

TEST_CASE("rng streams are reproducible and independent of history") {
  Rng a = rng_for(42, 7);
  Rng b = rng_for(42, 7);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  Rng c = rng_for(42, 8);
  CHECK(rng_for(42, 7).next_u64() != c.next_u64());
}

TEST_CASE("sample_density invariants over many draws") {
  int checked = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    Rng rng = rng_for(1000 + trial);
    const int d = 2 + static_cast<int>(rng.next_u64() % 5);
    const int rank = 1 + static_cast<int>(rng.next_u64() % d);
    const DensityMatrix rho = sample_density(d, rank, rng);  // ctor validates PSD + trace
    if (std::abs(rho.mat().trace().real() - 1.0) < 1e-12) ++checked;
  }
  CHECK(checked == 10000);
  Rng rng = rng_for(1);
  CHECK_THROWS_AS(sample_density(3, 0, rng), Error);
  CHECK_THROWS_AS(sample_density(3, 4, rng), Error);
}

TEST_CASE("sample_density determinism and rank") {
  Rng a = rng_for(9, 3), b = rng_for(9, 3);
  const DensityMatrix r1 = sample_density(4, 4, a);
  const DensityMatrix r2 = sample_density(4, 4, b);
  CHECK((r1.mat() - r2.mat()).norm() == 0.0);

  Rng c = rng_for(9, 4);
  const DensityMatrix full = sample_density(4, 4, c);
  CHECK(hermitian_eig(full.herm()).eigenvalues[3] > 0.0);

  Rng d = rng_for(9, 5);
  const DensityMatrix pure = sample_density(4, 1, d);
  const auto eig = hermitian_eig(pure.herm());
  CHECK(eig.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(std::abs(eig.eigenvalues[1]) < 1e-12);
}

TEST_CASE("sample_weight invariants") {
  int definite_ok = 0, definite_total = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    Rng rng = rng_for(3000 + trial);
    const bool definite = (trial % 2) == 0;
    const Weight w = sample_weight(3, rng, definite);  // ctor validates PSD
    if (definite) {
      ++definite_total;
      const auto eig = hermitian_eig(w.herm());
      if (eig.eigenvalues[2] >= 0.1 - 1e-12) ++definite_ok;
    }
  }
  CHECK(definite_ok == definite_total);
}

TEST_CASE("classical instances commute exactly") {
  Rng rng = rng_for(31);
  const SubsystemShape shape({2, 2, 2});
  const ClassicalInstance ci = sample_classical_instance(shape, rng);
  CHECK(std::abs(ci.rho.mat().trace().real() - 1.0) < 1e-12);
  CHECK(ci.factor_weights.size() == 3);
  const Mat joint_w =
      tensor(ci.factor_weights[0].mat(), ci.factor_weights[1].mat(), ci.factor_weights[2].mat());
  CHECK(commutator_norm(ci.rho.mat(), joint_w) == 0.0);
  const Mat rho_bc = partial_trace(ci.rho.mat(), shape, {1, 2});
  const Mat m_c = partial_trace(
      tensor(Mat::Identity(2, 2), ci.factor_weights[2].mat()) * rho_bc, SubsystemShape({2, 2}),
      {0});
  const Mat rho_b = partial_trace(ci.rho.mat(), shape, {1});
  CHECK(commutator_norm(m_c, rho_b) == 0.0);

  CHECK_THROWS_AS(sample_classical_instance(SubsystemShape({4}), rng), ShapeError);
}

TEST_CASE("diagonal_part") {
  Rng rng = rng_for(32);
  const DensityMatrix rho = sample_density(3, 3, rng);

  // already diagonal in its own eigenbasis
  const Mat basis = hermitian_eig(rho.herm()).eigenvectors;
  const DensityMatrix same = diagonal_part(rho, basis);
  CHECK((same.mat() - rho.mat()).norm() < 1e-10);

  // Bell projector in the computational basis
  Vec bell = Vec::Zero(4);
  bell[0] = bell[3] = 1.0 / std::sqrt(2.0);
  const DensityMatrix bell_rho = DensityMatrix::from_matrix(bell * bell.adjoint());
  const DensityMatrix d = diagonal_part(bell_rho, Mat::Identity(4, 4));
  CHECK((d.mat() - diag({0.5, 0, 0, 0.5})).norm() < 1e-14);

  // trace preserved, unitarity enforced
  const DensityMatrix any = sample_density(4, 4, rng);
  const Mat u = sample_unitary(4, rng);
  CHECK(std::abs(diagonal_part(any, u).mat().trace().real() - 1.0) < 1e-12);
  Mat bad = u;
  bad.col(0) *= 2.0;
  CHECK_THROWS_AS(diagonal_part(any, bad), Error);
}

TEST_CASE("purification reconstructs the state") {
  // maximally mixed qubit: Bell-type purification
  const DensityMatrix mixed = DensityMatrix::from_matrix(0.5 * Mat::Identity(2, 2));
  const PureState chi = purify(mixed);
  const auto sd = schmidt(chi, SubsystemShape({2, 2}));
  CHECK(sd.coefficients[0] == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(sd.coefficients[1] == doctest::Approx(1.0 / std::sqrt(2.0)));

  // pure state purifies to a product (single coefficient 1)
  Rng rng = rng_for(33);
  const DensityMatrix pure = sample_density(3, 1, rng);
  const auto sp = schmidt(purify(pure), SubsystemShape({3, 3}));
  CHECK(sp.coefficients[0] == doctest::Approx(1.0));
  CHECK(std::abs(sp.coefficients[1]) < 1e-8);

  for (int trial = 0; trial < 50; ++trial) {
    Rng r2 = rng_for(4000 + trial);
    const int d = 2 + static_cast<int>(r2.next_u64() % 5);
    const DensityMatrix rho = sample_density(d, d, r2);
    const PureState c = purify(rho);
    const Mat back = partial_trace(c.projector(), SubsystemShape({d, d}), {0});
    CHECK((back - rho.mat()).norm() <= 1e-10);
  }
}

TEST_CASE("schmidt decomposition") {
  Rng rng = rng_for(34);
  // random state on [2,3]: coefficients descending, squares sum to 1,
  // reconstruction within 1e-10
  for (int trial = 0; trial < 30; ++trial) {
    Rng r2 = rng_for(4100 + trial);
    Vec amps(6);
    for (int i = 0; i < 6; ++i) amps[i] = r2.complex_gaussian();
    amps /= amps.norm();
    const PureState chi(amps);
    const SubsystemShape shape({2, 3});
    const auto sd = schmidt(chi, shape);

    double sum2 = 0.0;
    for (size_t i = 0; i + 1 < sd.coefficients.size(); ++i)
      CHECK(sd.coefficients[i] >= sd.coefficients[i + 1]);
    for (double c : sd.coefficients) sum2 += c * c;
    CHECK(sum2 == doctest::Approx(1.0).epsilon(1e-12));

    Vec rebuilt = Vec::Zero(6);
    for (size_t k = 0; k < sd.coefficients.size(); ++k)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 3; ++b)
          rebuilt[a * 3 + b] += sd.coefficients[k] * sd.left(a, k) * sd.right(b, k);
    CHECK((rebuilt - amps).norm() < 1e-10);

    // c_i^2 are the shared eigenvalues of both reduced states
    const Mat rho_a = partial_trace(chi.projector(), shape, {0});
    const auto ea = hermitian_eig(Hermitian(rho_a, 1e-8));
    for (int i = 0; i < 2; ++i)
      CHECK(ea.eigenvalues[i] ==
            doctest::Approx(sd.coefficients[i] * sd.coefficients[i]).epsilon(1e-8));
  }

  // wide case (left factor larger)
  Vec amps(6);
  for (int i = 0; i < 6; ++i) amps[i] = rng.complex_gaussian();
  amps /= amps.norm();
  const auto sd = schmidt(PureState(amps), SubsystemShape({3, 2}));
  Vec rebuilt = Vec::Zero(6);
  for (size_t k = 0; k < sd.coefficients.size(); ++k)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 2; ++b)
        rebuilt[a * 2 + b] += sd.coefficients[k] * sd.left(a, k) * sd.right(b, k);
  CHECK((rebuilt - amps).norm() < 1e-10);

  // product state: single coefficient 1
  Vec prod = Vec::Zero(4);
  prod[0] = 1.0;
  const auto sp = schmidt(PureState(prod), SubsystemShape({2, 2}));
  CHECK(sp.coefficients[0] == doctest::Approx(1.0));
  CHECK(std::abs(sp.coefficients[1]) < 1e-12);

  CHECK_THROWS_AS(schmidt(PureState(prod), SubsystemShape({2, 3})), ShapeError);
}

TEST_CASE("schmidt coefficients of a purification match the state spectrum") {
  Rng rng = rng_for(35);
  const DensityMatrix rho = sample_density(4, 4, rng);
  const auto eig = hermitian_eig(rho.herm());
  const auto sd = schmidt(purify(rho), SubsystemShape({4, 4}));
  for (int i = 0; i < 4; ++i)
    CHECK(sd.coefficients[i] ==
          doctest::Approx(std::sqrt(std::max(eig.eigenvalues[i], 0.0))).epsilon(1e-9));
}

TEST_CASE("conjugate weights") {
  Rng rng = rng_for(36);
  const DensityMatrix rho = sample_density(4, 4, rng);
  const Weight phi = sample_weight(4, rng, false);

  // identity maps to identity
  const Weight one = conjugate_weight(rho, Weight::identity(4));
  CHECK((one.mat() - Mat::Identity(4, 4)).norm() < 1e-10);

  // commuting pair: the conjugate is the diagonal part in the shared basis
  const auto eig = hermitian_eig(rho.herm());
  RealVec spectrum(4);
  for (int i = 0; i < 4; ++i) spectrum[i] = 0.2 + 0.3 * i;
  const Weight commuting = Weight::from_matrix(eig.assemble(spectrum));
  const Weight conj = conjugate_weight(rho, commuting);
  CHECK((conj.mat() - commuting.mat()).norm() < 1e-8);

  // equal weighted entropy, and idempotence
  const Weight phi_c = conjugate_weight(rho, phi);
  CHECK(weighted_entropy(rho, phi).value ==
        doctest::Approx(weighted_entropy(rho, phi_c).value).epsilon(1e-10));
  const Weight twice = conjugate_weight(rho, phi_c);
  CHECK((twice.mat() - phi_c.mat()).norm() < 1e-12);
}

TEST_CASE("cross-conjugate weights") {
  Rng rng = rng_for(37);
  const DensityMatrix rho = sample_density(4, 4, rng);
  const Weight phi = sample_weight(4, rng, false);

  // src = dst reduces to the plain conjugate
  const Weight direct = conjugate_weight(rho, phi);
  const Weight crossed = cross_conjugate_weight(rho, phi, rho);
  CHECK((direct.mat() - crossed.mat()).norm() < 1e-10);

  // purification partners carry the entropy across
  const PureState chi = purify(rho);
  const DensityMatrix rho_r = DensityMatrix::from_matrix(
      partial_trace(chi.projector(), SubsystemShape({4, 4}), {1}));
  const Weight phi_r = cross_conjugate_weight(rho, phi, rho_r);
  CHECK(weighted_entropy(rho, phi).value ==
        doctest::Approx(weighted_entropy(rho_r, phi_r).value).epsilon(1e-10));

  // rank-deficient source: zero-padded diagonal on the rest
  const DensityMatrix low = sample_density(3, 2, rng);
  const PureState chi2 = purify(low);
  const DensityMatrix low_r = DensityMatrix::from_matrix(
      partial_trace(chi2.projector(), SubsystemShape({3, 3}), {1}));
  const Weight w2 = cross_conjugate_weight(low, sample_weight(3, rng, false), low_r);
  const auto re = hermitian_eig(low_r.herm());
  const Vec null_dir = re.eigenvectors.col(2);  // null space of the rank-2 state
  CHECK(std::abs((null_dir.adjoint() * w2.mat() * null_dir).value()) < 1e-10);

  // mismatched spectra and degenerate spectra are rejected
  const DensityMatrix other = sample_density(4, 4, rng);
  CHECK_THROWS_AS(cross_conjugate_weight(rho, phi, other), SpectraMismatchError);
  const DensityMatrix flat = DensityMatrix::from_matrix(0.25 * Mat::Identity(4, 4));
  CHECK_THROWS_AS(cross_conjugate_weight(flat, phi, flat), PairingAmbiguousError);
}
