#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "qudit_magic/oracle.hpp"

namespace qm = qudit_magic;
using qm::CMatrix;
using qm::Complex;
using qm::CVector;
using qm::GFVector;
using qm::PauliType;
using qm::QrmCode;
using qm::StateVector;

namespace {

const QrmCode& code(int d) {
  static const QrmCode c51 = qm::build_qrm(5, 1);
  static const QrmCode c32 = qm::build_qrm(3, 2);
  return d == 5 ? c51 : c32;
}

const qm::RoundOracle& oracle(int d) {
  static const qm::RoundOracle o51(code(5), qm::canonical_gate(5, 1));
  static const qm::RoundOracle o32(code(3), qm::canonical_gate(3, 2));
  return d == 5 ? o51 : o32;
}

GFVector random_vector(std::mt19937& rng, int n, int d) {
  std::uniform_int_distribution<int> u(0, d - 1);
  qm::IntVector v(n);
  for (int i = 0; i < n; ++i) v[i] = u(rng);
  return GFVector(v, d);
}

qm::NoiseVector<double> random_simplex(std::mt19937& rng, int d) {
  std::gamma_distribution<double> g(1.0);
  qm::NoiseVector<double> n;
  n.f.resize(d);
  for (int k = 0; k < d; ++k) n.f[k] = g(rng);
  n.f /= n.f.sum();
  return n;
}

// |<a|b>| for unit vectors.
double overlap(const CVector& a, const CVector& b) { return std::abs(a.dot(b)); }

}  // namespace

TEST(PlusState, UniformAmplitudes) {
  const StateVector s = qm::plus_basis_state(3, 1, GFVector({0}, 3));
  for (int t = 0; t < 3; ++t) EXPECT_NEAR(std::abs(s.amplitudes[t] - 1 / std::sqrt(3.0)), 0, 1e-15);
  EXPECT_THROW(qm::plus_basis_state(3, 20, GFVector::zero(20, 3)), qm::SizeExceeded);
}

TEST(PlusState, PauliActions) {
  std::mt19937 rng(51);
  const int d = 5;
  const int n = 4;
  for (int trial = 0; trial < 10; ++trial) {
    const GFVector v = random_vector(rng, n, d);
    const GFVector u = random_vector(rng, n, d);
    const StateVector s = qm::plus_basis_state(d, n, v);
    const StateVector xs = qm::apply_pauli(s, PauliType::X, u);
    const Complex phase = qm::root_of_unity(qm::dot(v, u), d);
    EXPECT_NEAR((xs.amplitudes - phase * s.amplitudes).norm(), 0, 1e-12);
    // Z[w] moves |+_v> to |+_{v-w}>.
    const StateVector zs = qm::apply_pauli(s, PauliType::Z, u);
    EXPECT_NEAR((zs.amplitudes - qm::plus_basis_state(d, n, v - u).amplitudes).norm(), 0, 1e-12);
  }
  const StateVector t = qm::plus_basis_state(5, 4, GFVector({1, 2, 3, 4}, 5));
  EXPECT_NEAR(t.norm(), 1, 1e-12);
}

TEST(SingleQudit, CommutationAndGates) {
  for (int d : {3, 5, 7}) {
    const CMatrix x = qm::shift_matrix(d);
    const CMatrix z = qm::clock_matrix(d);
    EXPECT_NEAR((x * z - qm::root_of_unity(-1, d) * z * x).norm(), 0, 1e-12);
  }
  for (auto [d, m] : {std::pair{5, 1}, std::pair{3, 2}, std::pair{7, 1}, std::pair{11, 1}}) {
    const qm::MagicGate g = qm::canonical_gate(d, m);
    const CMatrix mm = qm::gate_matrix(g);
    for (int j = 0; j < d; ++j) {
      EXPECT_NEAR(std::abs(mm(j, j) - std::polar(1.0, g.phase(j))), 0, 1e-14);
    }
    // C_M proportional to X P with P = diag(omega^{j(j-1)/2}).
    CMatrix p = CMatrix::Zero(d, d);
    for (int j = 0; j < d; ++j) p(j, j) = qm::root_of_unity(static_cast<long long>(j) * (j - 1) / 2, d);
    const CMatrix xp = qm::shift_matrix(d) * p;
    EXPECT_NEAR(std::abs((xp.adjoint() * qm::cm_matrix(g)).trace()), d, 1e-10) << d << "," << m;
  }
}

TEST(Transversal, DiagonalAndCmActions) {
  const qm::MagicGate g = qm::canonical_gate(5, 1);
  std::mt19937 rng(52);
  for (int trial = 0; trial < 5; ++trial) {
    const GFVector x = random_vector(rng, 4, 5);
    const StateVector s = qm::computational_basis_state(5, 4, x);
    const StateVector ms = qm::apply_transversal_diagonal(s, g, GFVector::constant(4, 1, 5));
    double angle = 0;
    for (int i = 0; i < 4; ++i) angle += g.phase(x[i]);
    EXPECT_NEAR(std::abs(ms.amplitudes[qm::basis_index(x.entries(), 5)] - std::polar(1.0, angle)), 0, 1e-12);
  }
  // C_M[w] against the dense single-qudit matrices on one factor.
  const CMatrix cm = qm::cm_matrix(g);
  const StateVector s = qm::computational_basis_state(5, 4, GFVector({2, 0, 0, 0}, 5));
  const StateVector out = qm::apply_transversal_cm(s, g, GFVector({1, 0, 0, 0}, 5));
  for (int t = 0; t < 5; ++t) {
    EXPECT_NEAR(std::abs(out.amplitudes[qm::basis_index(GFVector({t, 0, 0, 0}, 5).entries(), 5)] - cm(t, 2)), 0, 1e-12);
  }
}

TEST(Projector, PlusZeroIsStabilizedByX) {
  for (int d : {5, 3}) {
    const QrmCode& c = code(d);
    const StateVector s = qm::plus_basis_state(d, c.n, GFVector::zero(c.n, d));
    const auto r = qm::project_stabilizer(s, PauliType::X, c, GFVector::zero(c.lx.dimension(), d));
    EXPECT_NEAR(r.squared_norm, 1, 1e-12);
    EXPECT_NEAR(overlap(r.post_state.amplitudes, s.amplitudes), 1, 1e-12);
  }
}

TEST(Projector, PropertyIdempotentAndHermitian) {
  std::mt19937 rng(53);
  std::normal_distribution<double> g;
  for (int d : {5, 3}) {
    const QrmCode& c = code(d);
    const long long size = qm::state_dimension(d, c.n);
    for (int trial = 0; trial < 3; ++trial) {
      StateVector a{d, c.n, CVector(size)};
      StateVector b{d, c.n, CVector(size)};
      for (long long i = 0; i < size; ++i) {
        a.amplitudes[i] = Complex(g(rng), g(rng));
        b.amplitudes[i] = Complex(g(rng), g(rng));
      }
      const GFVector k = random_vector(rng, c.lz.dimension(), d);
      for (PauliType half : {PauliType::Z, PauliType::X}) {
        const GFVector out = half == PauliType::Z ? k : GFVector::zero(c.lx.dimension(), d);
        const StateVector pa = qm::apply_stabilizer_projector(a, half, c, out);
        const StateVector ppa = qm::apply_stabilizer_projector(pa, half, c, out);
        EXPECT_NEAR((ppa.amplitudes - pa.amplitudes).norm(), 0, 1e-12 * a.norm());
        const StateVector pb = qm::apply_stabilizer_projector(b, half, c, out);
        EXPECT_NEAR(std::abs(b.amplitudes.dot(pa.amplitudes) - pb.amplitudes.dot(a.amplitudes)), 0, 1e-9);
      }
      const StateVector pi = qm::apply_code_projector(a, c);
      EXPECT_NEAR((qm::apply_code_projector(pi, c).amplitudes - pi.amplitudes).norm(), 0, 1e-11);
    }
  }
}

TEST(Projector, ConstantMatchesStabilizerCount) {
  for (int d : {5, 3}) {
    const QrmCode& c = code(d);
    const StateVector s = qm::plus_basis_state(d, c.n, GFVector::zero(c.n, d));
    const double measured = qm::apply_code_projector(s, c).amplitudes.squaredNorm();
    EXPECT_NEAR(measured, qm::projection_constant(c), 1e-12);
    EXPECT_NEAR(qm::projection_constant(c), 1.0 / std::pow(d, c.lz.dimension()), 1e-15);
  }
}

namespace {

struct Trichotomy {
  int detected = 0;
  int clean = 0;
  int undetected = 0;
};

// Every |+_v>: Pi kills it, or maps it to sqrt(c) |+_j^L> when v + j 1 is
// in L_Z.
Trichotomy check_trichotomy(const QrmCode& c) {
  const int d = c.d;
  const double cval = qm::projection_constant(c);
  std::vector<CVector> logical_plus;
  for (int j = 0; j < d; ++j) logical_plus.push_back(qm::logical_plus_state(c, j).amplitudes);
  const qm::LinearCode lx_perp = qm::dual(c.lx);
  Trichotomy t;
  const long long total = qm::state_dimension(d, c.n);
  for (long long x = 0; x < total; ++x) {
    const GFVector v(qm::basis_digits(x, d, c.n), d);
    const StateVector p = qm::apply_code_projector(qm::plus_basis_state(d, c.n, v), c);
    if (!lx_perp.contains(v)) {
      EXPECT_NEAR(p.amplitudes.norm(), 0, 1e-12);
      ++t.detected;
      continue;
    }
    int j = 0;
    while (!c.lz.contains(v + GFVector::constant(c.n, j, d))) ++j;
    EXPECT_NEAR(p.amplitudes.squaredNorm(), cval, 1e-12);
    EXPECT_NEAR(overlap(p.amplitudes, logical_plus[j]), std::sqrt(cval), 1e-12);
    (j == 0 ? t.clean : t.undetected)++;
  }
  return t;
}

}  // namespace

TEST(Projector, TrichotomyExhaustiveQuquint) {
  const Trichotomy t = check_trichotomy(code(5));
  EXPECT_EQ(t.detected, 625 - 125);
  EXPECT_EQ(t.clean, 25);
  EXPECT_EQ(t.undetected, 100);
}

TEST(Projector, TrichotomyExhaustiveQutrit) {
  const Trichotomy t = check_trichotomy(code(3));
  EXPECT_EQ(t.detected, 6561 - 729);
  EXPECT_EQ(t.clean, 243);
  EXPECT_EQ(t.undetected, 486);
}

TEST(LogicalBasis, AmplitudesAndPhases) {
  for (int d : {5, 3}) {
    const QrmCode& c = code(d);
    const StateVector zero = qm::logical_basis_state(c, 0);
    const CVector a = qm::logical_amplitudes(zero, c);
    EXPECT_NEAR(std::abs(a[0] - 1.0), 0, 1e-12);
    EXPECT_NEAR(a.tail(d - 1).norm(), 0, 1e-12);
    for (int j = 0; j < d; ++j) {
      const StateVector s = qm::logical_basis_state(c, j);
      const StateVector zs = qm::apply_pauli(s, PauliType::Z, c.z_logical);
      EXPECT_NEAR((zs.amplitudes - qm::root_of_unity(j, d) * s.amplitudes).norm(), 0, 1e-12);
    }
  }
}

TEST(LogicalBasis, TransversalGateActsAsDaggerLogical) {
  for (auto [d, m] : {std::pair{5, 1}, std::pair{3, 2}}) {
    const QrmCode& c = code(d);
    const qm::MagicGate g = qm::canonical_gate(d, m);
    double worst = 0;
    for (int j = 0; j < d; ++j) {
      const StateVector s = qm::logical_basis_state(c, j);
      const StateVector ms = qm::apply_transversal_diagonal(s, g, GFVector::constant(c.n, 1, d));
      worst = std::max(worst, (ms.amplitudes - std::polar(1.0, -g.phase(j)) * s.amplitudes).norm());
    }
    EXPECT_LT(worst, 1e-10);
  }
}

TEST(CorrectionVector, InnerProductIdentity) {
  std::mt19937 rng(54);
  EXPECT_EQ(qm::clifford_correction_vector(code(5), GFVector::zero(2, 5)), GFVector::zero(4, 5));
  const GFVector w = qm::clifford_correction_vector(code(5), GFVector({1, 0}, 5));
  const auto cf = qm::canonical_generator_form(code(5).lz);
  EXPECT_EQ(w[cf.permutation[0]], 1);
  for (int d : {5, 3}) {
    const QrmCode& c = code(d);
    for (int trial = 0; trial < 10; ++trial) {
      const GFVector k = random_vector(rng, c.lz.dimension(), d);
      const GFVector wk = qm::clifford_correction_vector(c, k);
      for (int i = 0; i < c.lz.dimension(); ++i) EXPECT_EQ(qm::dot(wk, c.lz.generator(i)), k[i]);
    }
  }
}

TEST(CorrectionVector, CommutesWithZAsStated) {
  std::mt19937 rng(55);
  const QrmCode& c = code(3);
  const qm::MagicGate g = qm::canonical_gate(3, 2);
  const long long size = qm::state_dimension(3, c.n);
  std::normal_distribution<double> nd;
  StateVector s{3, c.n, CVector(size)};
  for (long long i = 0; i < size; ++i) s.amplitudes[i] = Complex(nd(rng), nd(rng));
  for (int trial = 0; trial < 3; ++trial) {
    const GFVector w = qm::clifford_correction_vector(c, random_vector(rng, c.lz.dimension(), 3));
    for (int i = 0; i < c.lz.dimension(); ++i) {
      const GFVector v = c.lz.generator(i);
      const StateVector lhs = qm::apply_transversal_cm(qm::apply_pauli(s, PauliType::Z, v), g, w);
      const StateVector rhs = qm::apply_pauli(qm::apply_transversal_cm(s, g, w), PauliType::Z, v);
      EXPECT_NEAR((lhs.amplitudes - qm::root_of_unity(-qm::dot(w, v), 3) * rhs.amplitudes).norm(), 0, 1e-9);
    }
  }
}

TEST(CorrectionVector, RestoresTrivialSyndrome) {
  std::mt19937 rng(56);
  const QrmCode& c = code(3);
  const qm::MagicGate g = qm::canonical_gate(3, 2);
  const StateVector in = qm::apply_transversal_diagonal(qm::plus_basis_state(3, c.n, random_vector(rng, c.n, 3)), g,
                                                        GFVector::constant(c.n, 1, 3));
  for (int trial = 0; trial < 4; ++trial) {
    const GFVector k = random_vector(rng, c.lz.dimension(), 3);
    const auto proj = qm::project_stabilizer(in, PauliType::Z, c, k);
    if (proj.squared_norm < 1e-12) continue;
    const StateVector fixed = qm::apply_transversal_cm(proj.post_state, g, qm::clifford_correction_vector(c, k));
    const StateVector again = qm::apply_stabilizer_projector(fixed, PauliType::Z, c, GFVector::zero(c.lz.dimension(), 3));
    EXPECT_NEAR(overlap(again.amplitudes, fixed.amplitudes), 1, 1e-10);
  }
}

TEST(Twirl, FixedPointsAndDiagonalization) {
  const qm::MagicGate g = qm::canonical_gate(5, 1);
  const CVector m0 = qm::magic_state(g, 0);
  auto r = qm::twirl_numeric(m0 * m0.adjoint(), g);
  EXPECT_NEAR(r.noise.f[0], 1, 1e-12);
  EXPECT_NEAR(r.noise.f.tail(4).sum(), 0, 1e-12);
  r = qm::twirl_numeric(CMatrix::Identity(5, 5) / 5.0, g);
  for (int k = 0; k < 5; ++k) EXPECT_NEAR(r.noise.f[k], 0.2, 1e-12);
  std::mt19937 rng(57);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 10; ++trial) {
    CMatrix a(5, 5);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) a(i, j) = Complex(nd(rng), nd(rng));
    CMatrix rho = a * a.adjoint();
    rho /= rho.trace().real();
    r = qm::twirl_numeric(rho, g);
    EXPECT_LE(r.max_off_diagonal, 1e-10);
    EXPECT_NEAR(r.noise.f.sum(), 1, 1e-12);
  }
}

TEST(RoundOracle, PureInput) {
  const auto r = oracle(5).evaluate(qm::depolarizing_noise<double>(5, 0), true);
  EXPECT_NEAR(r.output.f[0], 1, 1e-12);
  EXPECT_NEAR(r.success_probability, 1, 1e-12);
  EXPECT_EQ(r.output.parity, qm::BasisParity::magic_dagger);
  EXPECT_EQ(oracle(5).branch_count(), 25);
  EXPECT_EQ(oracle(3).branch_count(), 243);
}

TEST(RoundOracle, PropertyMatchesAnalyticMap) {
  std::mt19937 rng(58);
  for (auto [d, m] : {std::pair{5, 1}, std::pair{3, 2}}) {
    const qm::IterationTable t(code(d));
    for (int trial = 0; trial < 10; ++trial) {
      const auto n = random_simplex(rng, d);
      qm::NoiseVector<qm::Real> nr;
      nr.f = n.f.cast<qm::Real>();
      const auto a = qm::iterate_general(t, nr);
      const auto s = oracle(d).evaluate(n, true);
      for (int k = 0; k < d; ++k) EXPECT_NEAR(s.output.f[k], static_cast<double>(a.output.f[k]), 1e-9);
      EXPECT_NEAR(s.success_probability, static_cast<double>(a.success_probability), 1e-9);
    }
  }
}

TEST(RoundOracle, AcceptanceIndependentOfOutcome) {
  std::mt19937 rng(59);
  for (int d : {5, 3}) {
    const auto n = random_simplex(rng, d);
    const auto r = oracle(d).evaluate(n, true);
    for (std::size_t b = 0; b < r.branch_acceptance.size(); ++b) {
      // Acceptance given outcome b is the same for every b.
      EXPECT_NEAR(r.branch_acceptance[b] / r.outcome_probability[b], r.success_probability, 1e-12);
    }
  }
}

TEST(RoundOracle, UncorrectedKeepsOnlyTrivialBranch) {
  std::mt19937 rng(60);
  for (int d : {5, 3}) {
    const auto n = random_simplex(rng, d);
    const auto on = oracle(d).evaluate(n, true);
    const auto off = oracle(d).evaluate(n, false);
    EXPECT_NEAR(off.success_probability, on.branch_acceptance[0], 1e-12);
    EXPECT_LT(off.success_probability, on.success_probability);
    // Same output state: postselection on the trivial branch alone.
    for (int k = 0; k < d; ++k) EXPECT_NEAR(off.output.f[k], on.output.f[k], 1e-9);
  }
}

TEST(RoundOracle, FastBranchesMatchReference) {
  std::mt19937 rng(61);
  for (auto [d, m] : {std::pair{5, 1}, std::pair{3, 2}}) {
    const QrmCode& c = code(d);
    const qm::MagicGate g = qm::canonical_gate(d, m);
    const qm::RoundOracle& o = oracle(d);
    const CMatrix readout = [&] {
      CMatrix p(d, d);
      for (int j = 0; j < d; ++j) p.col(j) = qm::plus_state(d, j);
      return CMatrix((qm::gate_matrix(qm::dagger(g)) * p).adjoint());
    }();
    for (int trial = 0; trial < 3; ++trial) {
      const long long vi = std::uniform_int_distribution<long long>(0, o.input_count() - 1)(rng);
      const GFVector v(qm::basis_digits(vi, d, c.n), d);
      const auto& resp = o.response(vi);
      for (int b = 0; b < o.branch_count(); b += (d == 3 ? 17 : 1)) {
        const GFVector k(qm::basis_digits(b, d, c.lz.dimension()), d);
        const CVector a = qm::simulate_branch_reference(c, g, v, k, true);
        EXPECT_NEAR((readout * a).squaredNorm(), resp.branch_weight[b], 1e-12) << "v " << vi << " branch " << b;
      }
    }
  }
}

TEST(RoundOracle, QutritExpansionAtDiagonalAngle) {
  // theta = pi/4 (depolarizing): P = 1 - 8 eps + 30 eps^2 + O(eps^3).
  for (double e : {1e-3, 2e-3}) {
    const auto r = oracle(3).evaluate(qm::depolarizing_noise<double>(3, e), true);
    EXPECT_NEAR((r.success_probability - 1 + 8 * e) / (e * e), 30, 0.5);
  }
  const auto r = oracle(3).evaluate(qm::depolarizing_noise<double>(3, 0.1), true);
  const qm::IterationTable t(code(3));
  EXPECT_NEAR(r.success_probability,
              static_cast<double>(qm::iterate_general(t, qm::depolarizing_noise<qm::Real>(3, 0.1L)).success_probability), 1e-12);
}
