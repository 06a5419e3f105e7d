#ifndef QUDIT_MAGIC_QUDIT_OPS_HPP_
#define QUDIT_MAGIC_QUDIT_OPS_HPP_

#include <complex>

#include <Eigen/Core>

#include "qudit_magic/magic_gate.hpp"

namespace qudit_magic {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

// exp(2 pi i k / denominator).
Complex root_of_unity(long long k, long long denominator);

// X|j> = |j+1>.
CMatrix shift_matrix(int d);
// Z|j> = omega^j |j>.
CMatrix clock_matrix(int d);
CMatrix gate_matrix(const MagicGate& gate);
// C_M = M X M^dagger.
CMatrix cm_matrix(const MagicGate& gate);

// X eigenstate with eigenvalue omega^k: (1/sqrt d) sum_t omega^{-k t} |t>.
CVector plus_state(int d, int k);
// |M_k> = M |+_k>.
CVector magic_state(const MagicGate& gate, int k);
// Columns |M_k>, k = 0..d-1.
CMatrix magic_basis(const MagicGate& gate);

}  // namespace qudit_magic

#endif  // QUDIT_MAGIC_QUDIT_OPS_HPP_
