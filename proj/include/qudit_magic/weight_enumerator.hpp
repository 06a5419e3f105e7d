#ifndef QUDIT_MAGIC_WEIGHT_ENUMERATOR_HPP_
#define QUDIT_MAGIC_WEIGHT_ENUMERATOR_HPP_

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qudit_magic/linear_code.hpp"

namespace qudit_magic {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Hamming weight enumerator: coefficient w counts codewords of weight w.
struct WeightEnumerator {
  int length = 0;
  int modulus = 2;
  std::vector<BigInt> coefficients;  // size length + 1

  WeightEnumerator() = default;
  WeightEnumerator(int n, int d) : length(n), modulus(d), coefficients(n + 1) {}

  const BigInt& operator[](int w) const { return coefficients.at(w); }
  BigInt& operator[](int w) { return coefficients.at(w); }
  BigInt total() const;
  // Weights with a nonzero coefficient, ascending.
  std::vector<int> support() const;

  friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

WeightEnumerator weight_enumerator_bruteforce(
    const LinearCode& code, std::uint64_t cutoff = kDefaultSpanCutoff);

// Enumerator of the dual of a dim-dimensional code with enumerator w.
WeightEnumerator macwilliams_transform(const WeightEnumerator& w, int dim);

struct RmEnumerators {
  WeightEnumerator lx;        // shortened RM code
  WeightEnumerator lx_prime;  // its span with the all-ones vector
};

RmEnumerators closed_form_enumerators(int d, int m);

// W(x) = sum_w A_w x^w, evaluated from log(x) to keep large exponents
// accurate. Requires x > 0.
template <typename Scalar>
Scalar evaluate_from_log(const WeightEnumerator& w, Scalar log_x) {
  using std::exp;
  Scalar s(0);
  for (int k = 0; k <= w.length; ++k) {
    if (w.coefficients[k] == 0) continue;
    s += static_cast<Scalar>(w.coefficients[k]) * exp(Scalar(k) * log_x);
  }
  return s;
}

template <typename Scalar>
Scalar evaluate(const WeightEnumerator& w, Scalar x) {
  using std::pow;
  Scalar s(0);
  for (int k = 0; k <= w.length; ++k) {
    if (w.coefficients[k] == 0) continue;
    s += static_cast<Scalar>(w.coefficients[k]) * pow(x, k);
  }
  return s;
}

}  // namespace qudit_magic

#endif  // QUDIT_MAGIC_WEIGHT_ENUMERATOR_HPP_
