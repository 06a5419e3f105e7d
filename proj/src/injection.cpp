#include "qudit_magic/injection.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>

namespace qudit_magic {

CVector PhaseState::state() const {
  CVector v(d());
  const double norm = 1.0 / std::sqrt(static_cast<double>(d()));
  for (int j = 0; j < d(); ++j) v[j] = std::polar(norm, theta[j]);
  return v;
}

PhaseState phase_state_of(const MagicGate& gate) {
  PhaseState p;
  p.theta.resize(gate.d());
  for (int j = 0; j < gate.d(); ++j) p.theta[j] = gate.phase(j);
  return p;
}

CMatrix phase_unitary(const PhaseState& theta, int k) {
  const int d = theta.d();
  CMatrix u = CMatrix::Zero(d, d);
  for (int j = 0; j < d; ++j) u(j, j) = std::polar(1.0, theta.theta[(j + k) % d]);
  return u;
}

void validate_density_matrix(const DensityMatrix& rho, double tol) {
  if (rho.rows() != rho.cols()) throw DimensionMismatch("density matrix is not square");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol) {
    throw std::domain_error("density matrix is not Hermitian");
  }
  if (std::abs(rho.trace() - Complex(1.0)) > tol) {
    throw std::domain_error("density matrix trace differs from 1");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho);
  if (es.eigenvalues().minCoeff() < -tol) {
    throw std::domain_error("density matrix has a negative eigenvalue");
  }
}

InjectionResult inject(const MagicGate& gate, const DensityMatrix& resource,
                       const DensityMatrix& target, bool twirl) {
  const int d = gate.d();
  if (resource.rows() != d || resource.cols() != d || target.rows() != d ||
      target.cols() != d) {
    throw DimensionMismatch("resource and target must be d x d");
  }
  const CMatrix c = cm_matrix(gate);
  CMatrix sigma = resource;
  if (twirl) {
    CMatrix ck = CMatrix::Identity(d, d);
    sigma.setZero();
    for (int k = 0; k < d; ++k) {
      sigma += ck * resource * ck.adjoint();
      ck = c * ck;
    }
    sigma /= static_cast<double>(d);
  }
  // Joint index a * d + b, resource register first.
  const CMatrix joint = Eigen::kroneckerProduct(sigma, target);
  const CMatrix x = shift_matrix(d);

  InjectionResult r;
  r.output = CMatrix::Zero(d, d);
  r.branch_probability.assign(d, 0.0);
  CMatrix xk = CMatrix::Identity(d, d);
  CMatrix ck = CMatrix::Identity(d, d);
  for (int k = 0; k < d; ++k) {
    // Outcome k of Z (x) Z^{d-1} keeps |a>|b> with a - b = k; the decode
    // sends it to |k>|b>, so tracing out the resource leaves the b block.
    CMatrix reduced = CMatrix::Zero(d, d);
    for (int b = 0; b < d; ++b) {
      for (int b2 = 0; b2 < d; ++b2) {
        const int a = (b + k) % d;
        const int a2 = (b2 + k) % d;
        reduced(b, b2) = joint(a * d + b, a2 * d + b2);
      }
    }
    r.branch_probability[k] = reduced.trace().real();
    const CMatrix fix = ck.adjoint() * xk;
    r.output += fix * reduced * fix.adjoint();
    xk = x * xk;
    ck = c * ck;
  }
  return r;
}

double trace_norm(const CMatrix& a) {
  return Eigen::JacobiSVD<CMatrix>(a).singularValues().sum();
}

UnbiasednessReport measurement_unbiasedness_check(const CVector& state,
                                                  const CVector& partner,
                                                  double tol) {
  const int d = static_cast<int>(state.size());
  if (partner.size() != d) throw DimensionMismatch("partner dimension differs");
  UnbiasednessReport r;
  const double s_norm = state.squaredNorm();
  const double p_norm = partner.squaredNorm();
  r.z_probability.assign(d, 0.0);
  r.zz_probability.assign(d, 0.0);
  for (int a = 0; a < d; ++a) {
    r.z_probability[a] = std::norm(state[a]) / s_norm;
    for (int b = 0; b < d; ++b) {
      r.zz_probability[(a - b + d) % d] += std::norm(state[a]) * std::norm(partner[b]) / (s_norm * p_norm);
    }
  }
  for (int k = 0; k < d; ++k) {
    r.max_deviation = std::max({r.max_deviation, std::abs(r.z_probability[k] - 1.0 / d),
                                std::abs(r.zz_probability[k] - 1.0 / d)});
  }
  r.uniform = r.max_deviation <= tol;
  return r;
}

}  // namespace qudit_magic
