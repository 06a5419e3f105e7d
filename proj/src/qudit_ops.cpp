#include "qudit_magic/qudit_ops.hpp"

#include <cmath>
#include <numbers>

namespace qudit_magic {

Complex root_of_unity(long long k, long long denominator) {
  const long long r = ((k % denominator) + denominator) % denominator;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) /
                             static_cast<double>(denominator));
}

CMatrix shift_matrix(int d) {
  CMatrix x = CMatrix::Zero(d, d);
  for (int j = 0; j < d; ++j) x((j + 1) % d, j) = 1.0;
  return x;
}

CMatrix clock_matrix(int d) {
  CMatrix z = CMatrix::Zero(d, d);
  for (int j = 0; j < d; ++j) z(j, j) = root_of_unity(j, d);
  return z;
}

CMatrix gate_matrix(const MagicGate& gate) {
  CMatrix m = CMatrix::Zero(gate.d(), gate.d());
  for (int j = 0; j < gate.d(); ++j) m(j, j) = root_of_unity(gate.lambda(j), gate.period());
  return m;
}

CMatrix cm_matrix(const MagicGate& gate) {
  const CMatrix m = gate_matrix(gate);
  return m * shift_matrix(gate.d()) * m.adjoint();
}

CVector plus_state(int d, int k) {
  CVector v(d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (int t = 0; t < d; ++t) v[t] = norm * root_of_unity(-static_cast<long long>(k) * t, d);
  return v;
}

CVector magic_state(const MagicGate& gate, int k) {
  return gate_matrix(gate) * plus_state(gate.d(), k);
}

CMatrix magic_basis(const MagicGate& gate) {
  CMatrix b(gate.d(), gate.d());
  for (int k = 0; k < gate.d(); ++k) b.col(k) = magic_state(gate, k);
  return b;
}

}  // namespace qudit_magic
