// Copyright 2026 The ebchan authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>

#include "ebchan/channels.hpp"
#include "oracles.hpp"

using namespace ebchan;

namespace {

Channel random_qubit_channel(std::uint64_t seed, int rank = 2) {
  return random_channel(RandomChannelKind::General, 2, 2, rank, seed);
}

Channel random_eb_channel(std::uint64_t seed, int terms = 3) {
  return random_channel(RandomChannelKind::EbHolevo, 2, 2, terms, seed);
}

// Choi matrix of a Holevo-form channel from the closed form
// J = (1/d_in) sum_i X_i^T (x) theta_i, independent of the Kraus path.
Matrix holevo_choi_direct(const HolevoFormChannel& hf) {
  const Index din = hf.d_in();
  const Index dout = hf.d_out();
  Matrix j = Matrix::Zero(din * dout, din * dout);
  for (Index i = 0; i < hf.size(); ++i)
    j += kron(hf.povm()[i].transpose().eval(), hf.outputs()[i].data());
  return j / static_cast<double>(din);
}

}  // namespace

TEST_CASE("apply: identity, depolarizing, random validity") {
  Rng rng(3);
  const DensityMatrix rho = oracle::random_state(rng, Dims{2}, 2);

  const Channel id = make_identity(2);
  CHECK((apply(id, rho).data() - rho.data()).cwiseAbs().maxCoeff() == 0.0);

  const Channel dep1 = make_depolarizing(1.0, 2);
  CHECK((apply(dep1, rho).data() - Matrix::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff() <= 1e-14);

  const Channel ch = random_qubit_channel(99, 3);
  const DensityMatrix out = apply(ch, rho);
  // revalidate through the checked constructor
  CHECK_NOTHROW(DensityMatrix(out.data(), out.dims()));
  CHECK_THROWS_AS(apply(ch, oracle::random_state(rng, Dims{3}, 2)), DimensionMismatch);
}

TEST_CASE("holevo_apply: q-c fixed point and single-element POVM") {
  const Channel qc = make_qc({Matrix::Identity(2, 2).col(0) * Matrix::Identity(2, 2).col(0).adjoint(),
                              Matrix::Identity(2, 2).col(1) * Matrix::Identity(2, 2).col(1).adjoint()});
  Matrix diag = Matrix::Zero(2, 2);
  diag(0, 0) = 0.7;
  diag(1, 1) = 0.3;
  const DensityMatrix rho(diag, Dims{2});
  const DensityMatrix out = holevo_apply(qc.holevo(), rho);
  CHECK((out.data() - diag).cwiseAbs().maxCoeff() <= 1e-14);

  Rng rng(8);
  const DensityMatrix theta = oracle::random_state(rng, Dims{3}, 2);
  const HolevoFormChannel constant({Matrix::Identity(2, 2)}, {theta});
  const DensityMatrix any = oracle::random_state(rng, Dims{2}, 2);
  CHECK((holevo_apply(constant, any).data() - theta.data()).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("Holevo form and its Kraus conversion agree") {
  for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
    const Channel ch = random_eb_channel(seed);
    const HolevoFormChannel& hf = ch.holevo();
    const KrausChannel kr = holevo_to_kraus(hf);
    CHECK(validate_cpt(kr).pass);
    // complete operator basis of matrix units
    for (Index i = 0; i < 2; ++i)
      for (Index j = 0; j < 2; ++j) {
        Matrix unit = Matrix::Zero(2, 2);
        unit(i, j) = Complex(1.0, 0.0);
        const Matrix via_holevo = detail::apply_raw(hf, unit);
        const Matrix via_kraus = detail::apply_raw(kr, unit);
        CHECK((via_holevo - via_kraus).norm() <= 1e-10);
      }
    // Choi comparison against the closed form
    CHECK((choi_matrix(kr).data() - holevo_choi_direct(hf)).norm() <= 1e-10);
  }
}

TEST_CASE("holevo_to_kraus on the computational q-c channel") {
  const Channel qc = make_qc({Matrix::Identity(2, 2).col(0) * Matrix::Identity(2, 2).col(0).adjoint(),
                              Matrix::Identity(2, 2).col(1) * Matrix::Identity(2, 2).col(1).adjoint()});
  const KrausChannel kr = qc.kraus();
  REQUIRE(kr.ops().size() == 2);
  for (const Matrix& a : kr.ops()) {
    int nonzero = 0;
    for (Index r = 0; r < 2; ++r)
      for (Index c = 0; c < 2; ++c)
        if (std::abs(a(r, c)) > 1e-12) {
          ++nonzero;
          CHECK(r == c);  // |i><i| up to phase
          CHECK(std::abs(a(r, c)) == doctest::Approx(1.0).epsilon(1e-12));
        }
    CHECK(nonzero == 1);
  }
}

TEST_CASE("choi_matrix knowns and trace-preservation condition") {
  const Matrix bell = oracle::bell_state().projector();
  CHECK((choi_matrix(make_identity(2).kraus()).data() - bell).cwiseAbs().maxCoeff() <= 1e-14);

  const Matrix j1 = choi_matrix(make_depolarizing(1.0, 2).kraus()).data();
  CHECK((j1 - Matrix::Identity(4, 4) / 4.0).cwiseAbs().maxCoeff() <= 1e-14);

  for (std::uint64_t seed : {10u, 11u}) {
    const Channel ch = random_channel(RandomChannelKind::General, 3, 2, 2, seed);
    const DensityMatrix j = choi_matrix(ch.kraus());
    const Matrix tr_out = partial_trace_keep(j.data(), j.dims(), {0});
    CHECK((tr_out - Matrix::Identity(3, 3) / 3.0).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("validate_cpt diagnostics") {
  const CptDiagnostics good = validate_cpt(make_identity(2).kraus());
  CHECK(good.tp_residual <= 1e-14);
  // normalized Choi of the identity is the rank-one Bell projector
  CHECK(good.choi_min_eig == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(good.pass);

  const KrausChannel doubled({Matrix::Identity(2, 2), Matrix::Identity(2, 2)});
  const CptDiagnostics bad = validate_cpt(doubled);
  CHECK(bad.tp_residual == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK_FALSE(bad.pass);

  CHECK(validate_cpt(random_qubit_channel(77).kraus(), 1e-9).pass);
}

TEST_CASE("tensor_channels product law and Choi permutation oracle") {
  const Channel id4 = tensor_channels(make_identity(2), make_identity(2));
  Rng rng(15);
  const DensityMatrix rho4 = oracle::random_state(rng, Dims{4}, 3);
  CHECK((apply(id4, rho4).data() - rho4.data()).cwiseAbs().maxCoeff() <= 1e-14);

  const Channel a = random_qubit_channel(21);
  const Channel b = random_eb_channel(22);
  const Channel ab = tensor_channels(a, b);

  const DensityMatrix ra = oracle::random_state(rng, Dims{2}, 2);
  const DensityMatrix rb = oracle::random_state(rng, Dims{2}, 2);
  const Matrix lhs = detail::apply_raw(ab, kron(ra.data(), rb.data()));
  const Matrix rhs = kron(detail::apply_raw(a, ra.data()), detail::apply_raw(b, rb.data()));
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-10);

  // Choi of the product equals the permuted tensor of the Chois.
  const Matrix ja = choi_matrix(a.kraus()).data();
  const Matrix jb = choi_matrix(b.kraus()).data();
  const Matrix expected =
      permute_subsystems(kron(ja, jb), Dims{2, 2, 2, 2}, {0, 2, 1, 3});
  CHECK((choi_matrix(ab.kraus()).data() - expected).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("make_special knowns and parameter validation") {
  // computational q-c channel dephases off-diagonals
  const Channel qc = make_qc({Matrix::Identity(2, 2).col(0) * Matrix::Identity(2, 2).col(0).adjoint(),
                              Matrix::Identity(2, 2).col(1) * Matrix::Identity(2, 2).col(1).adjoint()});
  Rng rng(19);
  const DensityMatrix rho = oracle::random_state(rng, Dims{2}, 2);
  const Matrix out = holevo_apply(qc.holevo(), rho).data();
  CHECK(std::abs(out(0, 1)) <= 1e-14);
  CHECK(out(0, 0).real() == doctest::Approx(rho.data()(0, 0).real()).epsilon(1e-12));

  // depolarizing p = 0.5 on a pure input has spectrum (0.75, 0.25)
  const Channel dep = make_depolarizing(0.5, 2);
  const PureState psi = oracle::random_pure(rng, Dims{2});
  const Spectrum sp = eig_psd(detail::apply_raw(dep, psi.projector()));
  CHECK(sp.eigenvalues(0) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(sp.eigenvalues(1) == doctest::Approx(0.25).epsilon(1e-12));

  CHECK_THROWS_AS(make_depolarizing(1.5, 2), BadParams);
  CHECK_THROWS_AS(make_depolarizing(-0.1, 2), BadParams);
  std::vector<Vector> skewed = {basis_vector(2, 0), (basis_vector(2, 0) + basis_vector(2, 1)).normalized()};
  std::vector<DensityMatrix> outs = {oracle::random_state(rng, Dims{2}, 1),
                                     oracle::random_state(rng, Dims{2}, 1)};
  CHECK_THROWS_AS(make_cq(skewed, outs), BadParams);
}

TEST_CASE("entanglement-breaking certification via PPT") {
  const EbCertificate id_cert = is_entanglement_breaking(make_identity(2).kraus());
  CHECK(id_cert.verdict == EbVerdict::NOT_EB_certified);
  CHECK(id_cert.pt_min_eigenvalue == doctest::Approx(-0.5).epsilon(1e-12));

  const Channel qc = make_qc({Matrix::Identity(2, 2).col(0) * Matrix::Identity(2, 2).col(0).adjoint(),
                              Matrix::Identity(2, 2).col(1) * Matrix::Identity(2, 2).col(1).adjoint()});
  CHECK(is_entanglement_breaking(qc.kraus()).verdict == EbVerdict::EB_certified);

  // qubit depolarizing is EB exactly from p = 2/3 on
  CHECK(is_entanglement_breaking(make_depolarizing(2.0 / 3.0, 2).kraus()).verdict ==
        EbVerdict::EB_certified);
  CHECK(is_entanglement_breaking(make_depolarizing(0.5, 2).kraus()).verdict ==
        EbVerdict::NOT_EB_certified);

  // NPT eigenvalue reproducible across runs
  const double e1 = is_entanglement_breaking(make_depolarizing(0.5, 2).kraus()).pt_min_eigenvalue;
  const double e2 = is_entanglement_breaking(make_depolarizing(0.5, 2).kraus()).pt_min_eigenvalue;
  CHECK(e1 == e2);
  CHECK(e1 == doctest::Approx(-0.125).epsilon(1e-10));
}

TEST_CASE("separable_output_decomposition reconstructs the channel output") {
  Rng rng(33);

  // product input: A-side vectors are eigenvectors of rho_A
  const Channel eb = random_eb_channel(55);
  const DensityMatrix ra = oracle::random_state(rng, Dims{2}, 2);
  const DensityMatrix rb = oracle::random_state(rng, Dims{2}, 2);
  const DensityMatrix rho_ab = tensor_product(ra, rb);
  const ProductDecomposition pd = separable_output_decomposition(eb.holevo(), rho_ab);
  CHECK(pd.total_weight() == doctest::Approx(1.0).epsilon(1e-9));
  for (const ProductTerm& t : pd.terms) {
    const Vector v = ra.data() * t.a.vec();
    const Complex lambda = t.a.vec().dot(v);
    CHECK((v - lambda * t.a.vec()).norm() <= 1e-9);
  }
  Matrix expected = Matrix::Zero(4, 4);
  expected = kron(ra.data(), detail::apply_raw(eb, rb.data()));
  CHECK((pd.reconstruct() - expected).norm() <= 1e-9);

  // Bell state through the computational q-c channel
  const Channel qc = make_qc({Matrix::Identity(2, 2).col(0) * Matrix::Identity(2, 2).col(0).adjoint(),
                              Matrix::Identity(2, 2).col(1) * Matrix::Identity(2, 2).col(1).adjoint()});
  const DensityMatrix bell(oracle::bell_state().projector(), Dims{2, 2});
  const ProductDecomposition bd = separable_output_decomposition(qc.holevo(), bell);
  REQUIRE(bd.terms.size() == 2);
  for (const ProductTerm& t : bd.terms) {
    CHECK(t.weight == doctest::Approx(0.5).epsilon(1e-12));
    // a and b are the same computational basis vector up to phase
    Index support = 0;
    for (Index i = 0; i < 2; ++i)
      if (std::abs(t.a.vec()(i)) > 0.5) support = i;
    CHECK(std::abs(t.a.vec()(support)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(t.b.vec()(support)) == doctest::Approx(1.0).epsilon(1e-12));
  }

  // random input: Frobenius reconstruction
  for (std::uint64_t seed : {71u, 72u, 73u}) {
    const Channel ch = random_eb_channel(seed, 4);
    const DensityMatrix rho = oracle::random_state(rng, Dims{2, 2}, 3);
    const ProductDecomposition d = separable_output_decomposition(ch.holevo(), rho);
    Matrix out = Matrix::Zero(4, 4);
    for (Index i = 0; i < ch.holevo().size(); ++i) {
      Matrix m = Matrix::Zero(2, 2);
      const Matrix& x = ch.holevo().povm()[i];
      for (Index a = 0; a < 2; ++a)
        for (Index ap = 0; ap < 2; ++ap) {
          Complex acc(0, 0);
          for (Index b = 0; b < 2; ++b)
            for (Index c = 0; c < 2; ++c) acc += x(b, c) * rho.data()(a * 2 + c, ap * 2 + b);
          m(a, ap) = acc;
        }
      out += kron(m, ch.holevo().outputs()[i].data());
    }
    CHECK((d.reconstruct() - out).norm() <= 1e-9);
  }
}

TEST_CASE("random_channel determinism and contracts") {
  const Channel a = random_qubit_channel(123, 3);
  const Channel b = random_qubit_channel(123, 3);
  REQUIRE(a.kraus().ops().size() == b.kraus().ops().size());
  for (size_t k = 0; k < a.kraus().ops().size(); ++k)
    CHECK((a.kraus().ops()[k] - b.kraus().ops()[k]).cwiseAbs().maxCoeff() == 0.0);

  for (std::uint64_t seed = 200; seed < 210; ++seed)
    CHECK(validate_cpt(random_qubit_channel(seed, 2).kraus(), 1e-9).pass);

  for (std::uint64_t seed = 300; seed < 305; ++seed) {
    const Channel eb = random_eb_channel(seed, 3);
    CHECK(is_entanglement_breaking(eb.kraus()).verdict != EbVerdict::NOT_EB_certified);
  }
}

TEST_CASE("HolevoFormChannel validation") {
  Matrix x0 = Matrix::Identity(2, 2) * 0.6;
  Matrix x1 = Matrix::Identity(2, 2) * 0.3;  // sums to 0.9 I
  Rng rng(4);
  std::vector<DensityMatrix> outs = {oracle::random_state(rng, Dims{2}, 1),
                                     oracle::random_state(rng, Dims{2}, 1)};
  CHECK_THROWS_AS(HolevoFormChannel({x0, x1}, outs), InvalidHolevoForm);

  Matrix neg = Matrix::Identity(2, 2);
  neg(1, 1) = -0.1;
  CHECK_THROWS_AS(HolevoFormChannel({neg, (Matrix::Identity(2, 2) - neg).eval()}, outs),
                  InvalidHolevoForm);
}
