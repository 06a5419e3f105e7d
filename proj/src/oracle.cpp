#include "qudit_magic/oracle.hpp"

#include <cmath>

#include "qudit_magic/parallel.hpp"

namespace qudit_magic {

long long state_dimension(int d, int n) {
  const std::uint64_t size = saturating_pow(static_cast<std::uint64_t>(d), n);
  if (size > static_cast<std::uint64_t>(kMaxAmplitudes)) {
    throw SizeExceeded("state of " + std::to_string(n) + " qudits of dimension " +
                       std::to_string(d) + " is too large");
  }
  return static_cast<long long>(size);
}

IntVector basis_digits(long long x, int d, int n) {
  IntVector digits(n);
  for (int i = n - 1; i >= 0; --i) {
    digits[i] = static_cast<int>(x % d);
    x /= d;
  }
  return digits;
}

long long basis_index(const Eigen::Ref<const IntVector>& digits, int d) {
  long long x = 0;
  for (Eigen::Index i = 0; i < digits.size(); ++i) x = x * d + digits[i];
  return x;
}

namespace {

// Digit table of every basis index, column x holding the digits of x.
IntMatrix digit_table(int d, int n) {
  const long long size = state_dimension(d, n);
  IntMatrix t(n, size);
  for (long long x = 0; x < size; ++x) t.col(x) = basis_digits(x, d, n);
  return t;
}

void check_state(const StateVector& s, int d, int n) {
  if (s.d != d || s.n != n || s.amplitudes.size() != state_dimension(d, n)) {
    throw DimensionMismatch("state does not match the register");
  }
}

void check_vector(const GFVector& v, int d, int n) {
  if (v.modulus() != d || v.size() != n) {
    throw DimensionMismatch("vector does not match the register");
  }
}

// Index of x + y (digitwise mod d).
long long shifted_index(const IntMatrix& digits, long long x,
                        const Eigen::Ref<const IntVector>& y, int d) {
  long long r = 0;
  for (Eigen::Index i = 0; i < y.size(); ++i) r = r * d + (digits(i, x) + y[i]) % d;
  return r;
}

double phase_angle(const MagicGate& gate, int j) { return gate.phase(j); }

std::vector<Complex> roots_table(int d) {
  std::vector<Complex> r(d);
  for (int t = 0; t < d; ++t) r[t] = root_of_unity(t, d);
  return r;
}

}  // namespace

StateVector plus_basis_state(int d, int n, const GFVector& v) {
  check_vector(v, d, n);
  const long long size = state_dimension(d, n);
  StateVector s{d, n, CVector(size)};
  const double norm = std::pow(static_cast<double>(d), -0.5 * n);
  const std::vector<Complex> roots = roots_table(d);
  for (long long x = 0; x < size; ++x) {
    const IntVector xd = basis_digits(x, d, n);
    long long e = 0;
    for (int i = 0; i < n; ++i) e += static_cast<long long>(v[i]) * xd[i];
    s.amplitudes[x] = norm * roots[mod_reduce(-e, d)];
  }
  return s;
}

StateVector computational_basis_state(int d, int n, const GFVector& x) {
  check_vector(x, d, n);
  StateVector s{d, n, CVector::Zero(state_dimension(d, n))};
  s.amplitudes[basis_index(x.entries(), d)] = 1.0;
  return s;
}

StateVector apply_pauli(const StateVector& state, PauliType type, const GFVector& u) {
  check_vector(u, state.d, state.n);
  const int d = state.d;
  const long long size = state.amplitudes.size();
  StateVector out{d, state.n, CVector(size)};
  for (long long x = 0; x < size; ++x) {
    const IntVector xd = basis_digits(x, d, state.n);
    if (type == PauliType::Z) {
      long long e = 0;
      for (int i = 0; i < state.n; ++i) e += static_cast<long long>(u[i]) * xd[i];
      out.amplitudes[x] = root_of_unity(e, d) * state.amplitudes[x];
    } else {
      IntVector yd(state.n);
      for (int i = 0; i < state.n; ++i) yd[i] = (xd[i] + u[i]) % d;
      out.amplitudes[basis_index(yd, d)] = state.amplitudes[x];
    }
  }
  return out;
}

StateVector apply_transversal_diagonal(const StateVector& state,
                                       const MagicGate& gate,
                                       const GFVector& powers) {
  check_vector(powers, state.d, state.n);
  if (gate.d() != state.d) throw DimensionMismatch("gate dimension differs from state");
  StateVector out = state;
  for (long long x = 0; x < state.amplitudes.size(); ++x) {
    const IntVector xd = basis_digits(x, state.d, state.n);
    double angle = 0;
    for (int i = 0; i < state.n; ++i) angle += powers[i] * phase_angle(gate, xd[i]);
    out.amplitudes[x] *= std::polar(1.0, angle);
  }
  return out;
}

StateVector apply_transversal_cm(const StateVector& state, const MagicGate& gate,
                                 const GFVector& w) {
  check_vector(w, state.d, state.n);
  if (gate.d() != state.d) throw DimensionMismatch("gate dimension differs from state");
  const int d = state.d;
  StateVector out{d, state.n, CVector::Zero(state.amplitudes.size())};
  for (long long x = 0; x < state.amplitudes.size(); ++x) {
    const IntVector xd = basis_digits(x, d, state.n);
    IntVector yd(state.n);
    double angle = 0;
    for (int i = 0; i < state.n; ++i) {
      yd[i] = (xd[i] + w[i]) % d;
      angle += phase_angle(gate, yd[i]) - phase_angle(gate, xd[i]);
    }
    out.amplitudes[basis_index(yd, d)] = std::polar(1.0, angle) * state.amplitudes[x];
  }
  return out;
}

StateVector apply_stabilizer_projector(const StateVector& state, PauliType half,
                                       const QrmCode& code, const GFVector& outcomes) {
  check_state(state, code.d, code.n);
  const int d = code.d;
  const LinearCode& gens = half == PauliType::Z ? code.lz : code.lx;
  if (outcomes.modulus() != d || outcomes.size() != gens.dimension()) {
    throw DimensionMismatch("one outcome per stabilizer generator is required");
  }
  const IntMatrix digits = digit_table(d, code.n);
  const long long size = state.amplitudes.size();
  StateVector out = state;
  const std::vector<Complex> roots = roots_table(d);
  if (half == PauliType::Z) {
    for (long long x = 0; x < size; ++x) {
      Complex factor = 1.0;
      for (int i = 0; i < gens.dimension(); ++i) {
        long long s = 0;
        for (int q = 0; q < code.n; ++q) s += static_cast<long long>(gens.generators()(i, q)) * digits(q, x);
        Complex avg = 0.0;
        for (int a = 0; a < d; ++a) avg += roots[mod_reduce(a * (outcomes[i] + s), d)];
        factor *= avg / static_cast<double>(d);
      }
      out.amplitudes[x] *= factor;
    }
    return out;
  }
  for (int i = 0; i < gens.dimension(); ++i) {
    CVector acc = CVector::Zero(size);
    for (int a = 0; a < d; ++a) {
      const IntVector shift = (a * gens.generators().row(i).transpose()).unaryExpr(
          [d](int e) { return e % d; });
      const Complex phase = roots[mod_reduce(static_cast<long long>(a) * outcomes[i], d)];
      for (long long x = 0; x < size; ++x) {
        acc[shifted_index(digits, x, shift, d)] += phase * out.amplitudes[x];
      }
    }
    out.amplitudes = acc / static_cast<double>(d);
  }
  return out;
}

ProjectionOutcome project_stabilizer(const StateVector& state, PauliType half,
                                     const QrmCode& code, const GFVector& outcomes) {
  ProjectionOutcome r;
  r.post_state = apply_stabilizer_projector(state, half, code, outcomes);
  r.squared_norm = r.post_state.amplitudes.squaredNorm();
  if (r.squared_norm > 1e-28) {
    r.post_state.amplitudes /= std::sqrt(r.squared_norm);
  } else {
    r.post_state.amplitudes.setZero();
  }
  return r;
}

StateVector apply_code_projector(const StateVector& state, const QrmCode& code) {
  const StateVector z = apply_stabilizer_projector(
      state, PauliType::Z, code, GFVector::zero(code.lz.dimension(), code.d));
  return apply_stabilizer_projector(z, PauliType::X, code,
                                    GFVector::zero(code.lx.dimension(), code.d));
}

GFVector clifford_correction_vector(const QrmCode& code, const GFVector& outcomes) {
  const int r = code.lz.dimension();
  if (outcomes.modulus() != code.d || outcomes.size() != r) {
    throw DimensionMismatch("one outcome per Z stabilizer generator is required");
  }
  const CanonicalForm cf = canonical_generator_form(code.lz);
  IntVector w = IntVector::Zero(code.n);
  for (int i = 0; i < r; ++i) w[cf.permutation[i]] = outcomes[i];
  return GFVector(w, code.d);
}

StateVector logical_basis_state(const QrmCode& code, int j) {
  StateVector s{code.d, code.n, CVector::Zero(state_dimension(code.d, code.n))};
  const double norm = 1.0 / std::sqrt(static_cast<double>(code.lx.span_size()));
  for_each_codeword(code.lx, [&](const IntVector& u) {
    IntVector v = u;
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = (v[i] + j) % code.d;
    s.amplitudes[basis_index(v, code.d)] += norm;
  });
  return s;
}

StateVector logical_plus_state(const QrmCode& code, int j) {
  StateVector s{code.d, code.n, CVector::Zero(state_dimension(code.d, code.n))};
  const double norm = 1.0 / std::sqrt(static_cast<double>(code.d));
  for (int t = 0; t < code.d; ++t) {
    s.amplitudes += norm * root_of_unity(-static_cast<long long>(j) * t, code.d) *
                    logical_basis_state(code, t).amplitudes;
  }
  return s;
}

CVector logical_amplitudes(const StateVector& state, const QrmCode& code) {
  check_state(state, code.d, code.n);
  CVector a(code.d);
  for (int j = 0; j < code.d; ++j) {
    a[j] = logical_basis_state(code, j).amplitudes.dot(state.amplitudes);
  }
  return a;
}

double projection_constant(const QrmCode& code) {
  return 1.0 / static_cast<double>(code.lz.span_size());
}

TwirlResult twirl_numeric(const CMatrix& rho, const MagicGate& gate) {
  const int d = gate.d();
  if (rho.rows() != d || rho.cols() != d) throw DimensionMismatch("rho must be d x d");
  const CMatrix c = cm_matrix(gate);
  CMatrix ck = CMatrix::Identity(d, d);
  CMatrix avg = CMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    avg += ck * rho * ck.adjoint();
    ck = c * ck;
  }
  avg /= static_cast<double>(d);
  const CMatrix b = magic_basis(gate);
  const CMatrix in_basis = b.adjoint() * avg * b;
  TwirlResult r;
  r.noise.f.resize(d);
  for (int i = 0; i < d; ++i) {
    r.noise.f[i] = in_basis(i, i).real();
    for (int j = 0; j < d; ++j) {
      if (i != j) r.max_off_diagonal = std::max(r.max_off_diagonal, std::abs(in_basis(i, j)));
    }
  }
  return r;
}

RoundOracle::RoundOracle(const QrmCode& code, const MagicGate& gate)
    : d_(code.d), n_(code.n) {
  if (gate.d() != code.d || gate.m() != code.m) {
    throw DimensionMismatch("gate and code parameters differ");
  }
  const int d = d_;
  const int n = n_;
  const int r = code.lz.dimension();
  inputs_ = state_dimension(d, n);
  branches_ = static_cast<int>(ipow(d, r));
  const IntMatrix digits = digit_table(d, n);
  const IntMatrix& g = code.lz.generators();

  // Correction vector for each branch; branch index encodes outcomes k.
  std::vector<IntVector> corrections(branches_);
  for (int b = 0; b < branches_; ++b) {
    corrections[b] = clifford_correction_vector(code, GFVector(basis_digits(b, d, r), d)).entries();
  }

  // Syndrome-free basis states get a compact index.
  std::vector<long long> compact(inputs_, -1);
  long long free_count = 0;
  std::vector<int> branch_of(inputs_);
  for (long long x = 0; x < inputs_; ++x) {
    long long b = 0;
    for (int i = 0; i < r; ++i) {
      long long s = 0;
      for (int q = 0; q < n; ++q) s += static_cast<long long>(g(i, q)) * digits(q, x);
      // Outcome k_i = -<g_i, x>.
      b = b * d + mod_reduce(-s, d);
    }
    branch_of[x] = static_cast<int>(b);
    if (b == 0) compact[x] = free_count++;
  }

  // Corrected destination and phase of each basis state, plus the input
  // amplitude factor prod_i exp(i theta_{x_i}) / sqrt(d).
  std::vector<long long> target(inputs_);
  std::vector<Complex> carried(inputs_);
  const double norm = std::pow(static_cast<double>(d), -0.5 * n);
  for (long long x = 0; x < inputs_; ++x) {
    const IntVector& w = corrections[branch_of[x]];
    double angle = 0;
    long long y = 0;
    for (int q = 0; q < n; ++q) {
      const int xq = digits(q, x);
      const int yq = (xq + w[q]) % d;
      angle += phase_angle(gate, yq);
      y = y * d + yq;
    }
    target[x] = compact[y];
    carried[x] = norm * std::polar(1.0, angle);
  }

  // Logical readout: compact indices of u + j 1 for u in L_X.
  std::vector<std::vector<long long>> logical(d);
  for_each_codeword(code.lx, [&](const IntVector& u) {
    for (int j = 0; j < d; ++j) {
      long long y = 0;
      for (int q = 0; q < n; ++q) y = y * d + (u[q] + j) % d;
      logical[j].push_back(compact[y]);
    }
  });
  const double logical_norm = 1.0 / std::sqrt(static_cast<double>(code.lx.span_size()));
  // Rows are <M_j^dagger| with |M_j^dagger> = M^dagger |+_j>.
  const CMatrix readout = (gate_matrix(dagger(gate)) * [&] {
    CMatrix p(d, d);
    for (int j = 0; j < d; ++j) p.col(j) = plus_state(d, j);
    return p;
  }()).adjoint();

  std::vector<Complex> unit(d);
  for (int t = 0; t < d; ++t) unit[t] = root_of_unity(-t, d);

  responses_.resize(inputs_);
  parallel_for(static_cast<std::size_t>(inputs_), [&](std::size_t vi) {
    const IntVector v = basis_digits(static_cast<long long>(vi), d, n);
    Response& resp = responses_[vi];
    resp.diagonal.assign(d, 0.0);
    resp.diagonal_uncorrected.assign(d, 0.0);
    resp.branch_weight.assign(branches_, 0.0);
    resp.outcome_weight.assign(branches_, 0.0);
    CMatrix branch = CMatrix::Zero(free_count, branches_);
    for (long long x = 0; x < inputs_; ++x) {
      int e = 0;
      for (int q = 0; q < n; ++q) e += v[q] * digits(q, x);
      const Complex amp = carried[x] * unit[e % d];
      branch(target[x], branch_of[x]) += amp;
      resp.outcome_weight[branch_of[x]] += std::norm(amp);
    }
    CVector a(d);
    for (int b = 0; b < branches_; ++b) {
      for (int j = 0; j < d; ++j) {
        Complex s = 0.0;
        for (long long idx : logical[j]) s += branch(idx, b);
        a[j] = logical_norm * s;
      }
      const CVector out = readout * a;
      double weight = 0;
      for (int j = 0; j < d; ++j) {
        const double p = std::norm(out[j]);
        resp.diagonal[j] += p;
        if (b == 0) resp.diagonal_uncorrected[j] += p;
        weight += p;
      }
      resp.branch_weight[b] = weight;
      resp.accepted += weight;
      if (b == 0) resp.accepted_uncorrected = weight;
    }
  });
}

RoundResult RoundOracle::evaluate(const NoiseVector<double>& noise, bool correction) const {
  if (noise.d() != d_) throw DimensionMismatch("noise vector has wrong dimension");
  RoundResult r;
  r.branch_acceptance.assign(branches_, 0.0);
  r.outcome_probability.assign(branches_, 0.0);
  ArrayX<double> diag = ArrayX<double>::Zero(d_);
  double accepted = 0;
  for (long long vi = 0; vi < inputs_; ++vi) {
    const IntVector v = basis_digits(vi, d_, n_);
    double alpha = 1;
    for (int q = 0; q < n_; ++q) alpha *= noise.f[v[q]];
    if (alpha == 0) continue;
    const Response& resp = responses_[vi];
    accepted += alpha * (correction ? resp.accepted : resp.accepted_uncorrected);
    const auto& dv = correction ? resp.diagonal : resp.diagonal_uncorrected;
    for (int j = 0; j < d_; ++j) diag[j] += alpha * dv[j];
    for (int b = 0; b < branches_; ++b) {
      r.branch_acceptance[b] += alpha * resp.branch_weight[b];
      r.outcome_probability[b] += alpha * resp.outcome_weight[b];
    }
  }
  r.success_probability = accepted;
  r.output.f = diag / accepted;
  r.output.parity = flip(noise.parity);
  return r;
}

RoundResult simulate_round(const QrmCode& code, const MagicGate& gate,
                           const NoiseVector<double>& noise, bool correction) {
  return RoundOracle(code, gate).evaluate(noise, correction);
}

CVector simulate_branch_reference(const QrmCode& code, const MagicGate& gate,
                                  const GFVector& v, const GFVector& outcomes,
                                  bool correction) {
  StateVector s = apply_transversal_diagonal(plus_basis_state(code.d, code.n, v), gate,
                                             GFVector::constant(code.n, 1, code.d));
  s = apply_stabilizer_projector(s, PauliType::Z, code, outcomes);
  if (correction) s = apply_transversal_cm(s, gate, clifford_correction_vector(code, outcomes));
  s = apply_code_projector(s, code);
  return logical_amplitudes(s, code);
}

}  // namespace qudit_magic
