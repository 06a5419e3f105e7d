#ifndef QUDIT_MAGIC_INJECTION_HPP_
#define QUDIT_MAGIC_INJECTION_HPP_

#include <vector>

#include <Eigen/Core>

#include "qudit_magic/magic_gate.hpp"
#include "qudit_magic/qudit_ops.hpp"

namespace qudit_magic {

using DensityMatrix = CMatrix;

// |Theta> = d^{-1/2} sum_j exp(i theta_j) |j>.
struct PhaseState {
  Eigen::VectorXd theta;

  int d() const { return static_cast<int>(theta.size()); }
  CVector state() const;
};

PhaseState phase_state_of(const MagicGate& gate);

// U_k(Theta) = sum_j exp(i theta_{j+k}) |j><j|.
CMatrix phase_unitary(const PhaseState& theta, int k);

// Throws std::domain_error unless rho is Hermitian with unit trace and no
// eigenvalue below -tol.
void validate_density_matrix(const DensityMatrix& rho, double tol = 1e-10);

struct InjectionResult {
  DensityMatrix output;
  // Probability of each Z (x) Z^{d-1} outcome k.
  std::vector<double> branch_probability;
};

// Measures Z (x) Z^{d-1} on resource (x) target, maps |a>|b> to |a-b>|b>,
// discards the resource and undoes the outcome-k phase with
// (C_M^k)^dagger X^k. The resource is C_M-twirled first when `twirl` is set.
InjectionResult inject(const MagicGate& gate, const DensityMatrix& resource,
                       const DensityMatrix& target, bool twirl = true);

double trace_norm(const CMatrix& a);

struct UnbiasednessReport {
  std::vector<double> z_probability;
  std::vector<double> zz_probability;
  double max_deviation = 0;  // from 1/d over both distributions
  bool uniform = false;
};

// Z outcome distribution of `state` and Z (x) Z^{d-1} outcome distribution
// of state (x) partner.
UnbiasednessReport measurement_unbiasedness_check(const CVector& state,
                                                  const CVector& partner,
                                                  double tol = 1e-12);

}  // namespace qudit_magic

#endif  // QUDIT_MAGIC_INJECTION_HPP_
