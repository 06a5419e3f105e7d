#ifndef QUDIT_MAGIC_DISTILLATION_HPP_
#define QUDIT_MAGIC_DISTILLATION_HPP_

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "qudit_magic/qrm_code.hpp"
#include "qudit_magic/weight_enumerator.hpp"

namespace qudit_magic {

using Real = long double;

template <typename Scalar>
using ArrayX = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

// Which eigenbasis the twirled state is diagonal in: |M_k> or |M_k^dagger>.
enum class BasisParity { magic, magic_dagger };

inline BasisParity flip(BasisParity p) {
  return p == BasisParity::magic ? BasisParity::magic_dagger : BasisParity::magic;
}

// f_k = <M_k| rho |M_k>.
template <typename Scalar>
struct NoiseVector {
  ArrayX<Scalar> f;
  BasisParity parity = BasisParity::magic;

  int d() const { return static_cast<int>(f.size()); }
  Scalar epsilon() const { return f.tail(f.size() - 1).sum(); }
};

template <typename Scalar>
void validate(const NoiseVector<Scalar>& noise, Scalar tol = Scalar(1e-12)) {
  using std::abs;
  if (noise.f.size() < 2) throw std::domain_error("noise vector needs d >= 2 entries");
  if ((noise.f < -tol).any()) throw std::domain_error("negative noise weight");
  if (abs(noise.f.sum() - Scalar(1)) > tol) {
    throw std::domain_error("noise weights do not sum to 1");
  }
}

template <typename Scalar>
NoiseVector<Scalar> depolarizing_noise(int d, Scalar eps) {
  if (!(eps >= 0 && eps <= 1)) throw std::domain_error("epsilon outside [0, 1]");
  NoiseVector<Scalar> n;
  n.f = ArrayX<Scalar>::Constant(d, eps / Scalar(d - 1));
  n.f[0] = Scalar(1) - eps;
  return n;
}

// f_0 = 1 - eps and f_k = eps * direction_{k-1} for k >= 1, where
// direction lies on the (d-1)-simplex.
template <typename Scalar>
NoiseVector<Scalar> noise_along(const ArrayX<Scalar>& direction, Scalar eps) {
  if (!(eps >= 0 && eps <= 1)) throw std::domain_error("epsilon outside [0, 1]");
  NoiseVector<Scalar> n;
  n.f.resize(direction.size() + 1);
  n.f[0] = Scalar(1) - eps;
  n.f.tail(direction.size()) = eps * direction / direction.sum();
  return n;
}

// (1 - eps, eps cos^2 theta, eps sin^2 theta).
template <typename Scalar>
NoiseVector<Scalar> qutrit_noise(Scalar eps, Scalar theta) {
  using std::cos;
  using std::sin;
  NoiseVector<Scalar> n;
  n.f.resize(3);
  n.f << Scalar(1) - eps, eps * cos(theta) * cos(theta), eps * sin(theta) * sin(theta);
  return n;
}

// eps = (d-1) delta / d, with delta the depolarized fraction.
template <typename Scalar>
Scalar epsilon_from_delta(int d, Scalar delta) {
  return Scalar(d - 1) * delta / Scalar(d);
}

// eps for rho = delta |M_0><M_0| + (1 - delta) 1/d.
template <typename Scalar>
Scalar epsilon_from_mixing_weight(int d, Scalar delta) {
  return Scalar(d - 1) * (Scalar(1) - delta) / Scalar(d);
}

template <typename Scalar>
struct IterationResult {
  NoiseVector<Scalar> output;
  Scalar success_probability;
  Scalar epsilon_out;
};

// k-weight profiles of the words of L_Z, grouped with multiplicities. The
// coset L_Z - j 1 has profile wt_k = counts[(k + j) mod d].
class IterationTable {
 public:
  struct Term {
    std::vector<int> counts;
    std::uint64_t multiplicity;
  };

  explicit IterationTable(const QrmCode& code,
                          std::uint64_t cutoff = kDefaultSpanCutoff);

  int d() const { return d_; }
  int n() const { return n_; }
  int m() const { return m_; }
  const std::vector<Term>& terms() const { return terms_; }

 private:
  int d_;
  int n_;
  int m_;
  std::vector<Term> terms_;
};

// Unnormalized coset sums: numerators[j] = sum over v with v + j 1 in L_Z of
// prod_k f_k^{wt_k(v)}.
template <typename Scalar>
ArrayX<Scalar> coset_numerators(const IterationTable& table,
                                const ArrayX<Scalar>& f) {
  using std::pow;
  const int d = table.d();
  const int n = table.n();
  if (f.size() != d) throw DimensionMismatch("noise vector has wrong dimension");
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> powers(d, n + 1);
  for (int k = 0; k < d; ++k) {
    powers(k, 0) = Scalar(1);
    for (int p = 1; p <= n; ++p) powers(k, p) = powers(k, p - 1) * f[k];
  }
  ArrayX<Scalar> num = ArrayX<Scalar>::Zero(d);
  for (const auto& t : table.terms()) {
    for (int j = 0; j < d; ++j) {
      Scalar prod = Scalar(t.multiplicity);
      for (int k = 0; k < d; ++k) prod *= powers(k, t.counts[(k + j) % d]);
      num[j] += prod;
    }
  }
  return num;
}

template <typename Scalar>
IterationResult<Scalar> iterate_general(const IterationTable& table,
                                        const NoiseVector<Scalar>& noise) {
  const ArrayX<Scalar> num = coset_numerators(table, noise.f);
  const Scalar p = num.sum();
  IterationResult<Scalar> r;
  r.output.f = num / p;
  r.output.parity = flip(noise.parity);
  r.success_probability = p;
  r.epsilon_out = num.tail(num.size() - 1).sum() / p;
  return r;
}

// Sparse (weight, coefficient) view of an enumerator.
template <typename Scalar>
std::vector<std::pair<int, Scalar>> sparse_terms(const WeightEnumerator& w) {
  std::vector<std::pair<int, Scalar>> t;
  for (int k : w.support()) t.emplace_back(k, static_cast<Scalar>(w[k]));
  return t;
}

// Depolarizing iteration from the closed-form enumerators of the shortened
// Reed-Muller code and its span with the all-ones vector.
template <typename Scalar>
class DepolarizingMap {
 public:
  DepolarizingMap(int d, int m)
      : d_(d), m_(m), n_(static_cast<int>(ipow(d, m) - 1)) {
    const RmEnumerators e = closed_form_enumerators(d, m);
    lx_ = sparse_terms<Scalar>(e.lx);
    lx_prime_ = sparse_terms<Scalar>(e.lx_prime);
  }

  int d() const { return d_; }
  int m() const { return m_; }
  int n() const { return n_; }

  IterationResult<Scalar> operator()(Scalar eps) const {
    using std::exp;
    using std::log;
    using std::log1p;
    const Scalar dm1 = Scalar(d_ - 1);
    if (!(eps >= 0 && eps < dm1 / Scalar(d_))) {
      throw std::domain_error("depolarizing epsilon outside [0, (d-1)/d)");
    }
    IterationResult<Scalar> r;
    if (eps == 0) {
      r.output = depolarizing_noise<Scalar>(d_, Scalar(0));
      r.output.parity = BasisParity::magic_dagger;
      r.success_probability = Scalar(1);
      r.epsilon_out = Scalar(0);
      return r;
    }
    const Scalar mu = eps / (dm1 * (Scalar(1) - eps));
    const Scalar log_mu_tilde = log1p(-mu) - log1p(dm1 * mu);
    const Scalar w = eval(lx_, log_mu_tilde);
    const Scalar w_prime = eval(lx_prime_, log_mu_tilde);
    const Scalar f0 = w_prime / (Scalar(d_) * w);
    // 1 - f0 can round below zero for tiny eps.
    r.epsilon_out = f0 < Scalar(1) ? Scalar(1) - f0 : Scalar(0);
    r.output = depolarizing_noise<Scalar>(d_, r.epsilon_out);
    r.output.parity = BasisParity::magic_dagger;
    const Scalar log_p = Scalar(n_) * log1p(-eps) - Scalar(m_) * log(Scalar(d_)) +
                         Scalar(n_) * log1p(dm1 * mu) + log(w);
    r.success_probability = exp(log_p);
    return r;
  }

 private:
  static Scalar eval(const std::vector<std::pair<int, Scalar>>& terms,
                     Scalar log_x) {
    using std::exp;
    Scalar s(0);
    for (const auto& [k, c] : terms) s += c * exp(Scalar(k) * log_x);
    return s;
  }

  int d_;
  int m_;
  int n_;
  std::vector<std::pair<int, Scalar>> lx_;
  std::vector<std::pair<int, Scalar>> lx_prime_;
};

template <typename Scalar>
IterationResult<Scalar> iterate_depolarizing(int d, int m, Scalar eps) {
  return DepolarizingMap<Scalar>(d, m)(eps);
}

// Leading coefficient a in eps' ~ a eps^2: (d^m - 1)(d - 2) / (2(d - 1)).
BigRational taylor_coefficient(int d, int m);

// Whether the depolarizing analysis applies: a transversal non-Clifford gate
// exists (odd d) or the qubit code has m >= 4.
bool protocol_applicable(int d, int m);

}  // namespace qudit_magic

#endif  // QUDIT_MAGIC_DISTILLATION_HPP_
