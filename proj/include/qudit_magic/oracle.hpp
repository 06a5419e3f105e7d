#ifndef QUDIT_MAGIC_ORACLE_HPP_
#define QUDIT_MAGIC_ORACLE_HPP_

#include <cstdint>
#include <vector>

#include "qudit_magic/distillation.hpp"
#include "qudit_magic/qrm_code.hpp"
#include "qudit_magic/qudit_ops.hpp"

namespace qudit_magic {

inline constexpr long long kMaxAmplitudes = 1LL << 20;

// Dense n-qudit state. Basis index x = sum_i x_i d^{n-1-i}.
struct StateVector {
  int d = 0;
  int n = 0;
  CVector amplitudes;

  double norm() const { return amplitudes.norm(); }
};

// d^n, or SizeExceeded above kMaxAmplitudes.
long long state_dimension(int d, int n);

// Digits of basis index x, qudit 0 first.
IntVector basis_digits(long long x, int d, int n);
long long basis_index(const Eigen::Ref<const IntVector>& digits, int d);

// |+_{v_1}> ... |+_{v_n}>.
StateVector plus_basis_state(int d, int n, const GFVector& v);
StateVector computational_basis_state(int d, int n, const GFVector& x);

enum class PauliType { X, Z };

// X[u] = X^{u_1} ... X^{u_n}, likewise Z[u].
StateVector apply_pauli(const StateVector& state, PauliType type, const GFVector& u);
// M^{p_1} ... M^{p_n}.
StateVector apply_transversal_diagonal(const StateVector& state,
                                       const MagicGate& gate,
                                       const GFVector& powers);
// C_M[w] = C_M^{w_1} ... C_M^{w_n}.
StateVector apply_transversal_cm(const StateVector& state, const MagicGate& gate,
                                 const GFVector& w);

struct ProjectionOutcome {
  // Normalized projected state (zero vector when squared_norm vanishes).
  StateVector post_state;
  double squared_norm = 0;
};

// Group average (1/d^r) sum_u omega^{<k,u>} P[G u] over the generators G of
// one stabilizer half, P = Z for the Z half and X for the X half.
StateVector apply_stabilizer_projector(const StateVector& state, PauliType half,
                                       const QrmCode& code, const GFVector& outcomes);
ProjectionOutcome project_stabilizer(const StateVector& state, PauliType half,
                                     const QrmCode& code, const GFVector& outcomes);
// Pi = Pi_X Pi_Z with trivial outcomes.
StateVector apply_code_projector(const StateVector& state, const QrmCode& code);

// w with <w, g_i> = k_i for the generators g_i of L_Z.
GFVector clifford_correction_vector(const QrmCode& code, const GFVector& outcomes);

// |j_L> = |L_X|^{-1/2} sum_{u in L_X} |u + j 1>.
StateVector logical_basis_state(const QrmCode& code, int j);
// |+_j^L> = d^{-1/2} sum_t omega^{-j t} |t_L>.
StateVector logical_plus_state(const QrmCode& code, int j);
// <j_L|state> for j = 0..d-1.
CVector logical_amplitudes(const StateVector& state, const QrmCode& code);

// tr(Pi |+_0><+_0|^{n}) from stabilizer counting: 1 / |L_Z|.
double projection_constant(const QrmCode& code);

struct TwirlResult {
  NoiseVector<double> noise;
  double max_off_diagonal = 0;  // in the |M_k> basis after twirling
};

// (1/d) sum_k C_M^k rho C_M^{-k}, read off in the |M_k> basis.
TwirlResult twirl_numeric(const CMatrix& rho, const MagicGate& gate);

struct RoundResult {
  NoiseVector<double> output;
  double success_probability = 0;
  // Accepted weight per Z-outcome branch, and the probability of each
  // outcome, in the order of the outcome index.
  std::vector<double> branch_acceptance;
  std::vector<double> outcome_probability;
};

// Full-protocol state-vector propagation for one round. Responses of each
// pure input |M_v> are computed once; evaluate() mixes them with the noise
// weights prod_k f_k^{wt_k(v)}.
class RoundOracle {
 public:
  RoundOracle(const QrmCode& code, const MagicGate& gate);

  int d() const { return d_; }
  int n() const { return n_; }
  int branch_count() const { return branches_; }
  long long input_count() const { return inputs_; }

  RoundResult evaluate(const NoiseVector<double>& noise, bool correction) const;

  // Per-input data: accepted weight and unnormalized output diagonal in the
  // |M_j^dagger> basis, summed over all branches and for branch 0 alone.
  struct Response {
    double accepted = 0;
    double accepted_uncorrected = 0;
    std::vector<double> diagonal;
    std::vector<double> diagonal_uncorrected;
    std::vector<double> branch_weight;
    std::vector<double> outcome_weight;
  };
  const Response& response(long long v_index) const { return responses_[v_index]; }

 private:
  int d_;
  int n_;
  int branches_;
  long long inputs_;
  std::vector<Response> responses_;
};

RoundResult simulate_round(const QrmCode& code, const MagicGate& gate,
                           const NoiseVector<double>& noise, bool correction);

// One branch by explicit operator application: project the Z half on
// `outcomes`, apply the correction C_M[w] when enabled, project onto the
// code, and return the logical amplitudes of the (unnormalized) result.
CVector simulate_branch_reference(const QrmCode& code, const MagicGate& gate,
                                  const GFVector& v, const GFVector& outcomes,
                                  bool correction);

}  // namespace qudit_magic

#endif  // QUDIT_MAGIC_ORACLE_HPP_
