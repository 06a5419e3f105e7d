#include "qudit_magic/weight_enumerator.hpp"

namespace qudit_magic {

BigInt WeightEnumerator::total() const {
  BigInt s = 0;
  for (const auto& c : coefficients) s += c;
  return s;
}

std::vector<int> WeightEnumerator::support() const {
  std::vector<int> s;
  for (int w = 0; w <= length; ++w) {
    if (coefficients[w] != 0) s.push_back(w);
  }
  return s;
}

WeightEnumerator weight_enumerator_bruteforce(const LinearCode& code,
                                              std::uint64_t cutoff) {
  WeightEnumerator we(code.length(), code.modulus());
  std::vector<std::uint64_t> counts(code.length() + 1, 0);
  for_each_codeword(
      code,
      [&](const IntVector& w) {
        int h = 0;
        for (Eigen::Index i = 0; i < w.size(); ++i) h += w[i] != 0;
        ++counts[h];
      },
      cutoff);
  for (int w = 0; w <= code.length(); ++w) we[w] = counts[w];
  return we;
}

namespace {

using Poly = std::vector<BigInt>;

Poly multiply(const Poly& a, const Poly& b) {
  Poly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

}  // namespace

WeightEnumerator macwilliams_transform(const WeightEnumerator& w, int dim) {
  const int n = w.length;
  const int d = w.modulus;
  // powers of (1 - x) and (1 + (d-1)x)
  std::vector<Poly> minus_pow(n + 1), plus_pow(n + 1);
  minus_pow[0] = plus_pow[0] = Poly{1};
  const Poly minus{1, -1};
  const Poly plus{1, d - 1};
  for (int k = 1; k <= n; ++k) {
    minus_pow[k] = multiply(minus_pow[k - 1], minus);
    plus_pow[k] = multiply(plus_pow[k - 1], plus);
  }
  Poly acc(n + 1);
  for (int k = 0; k <= n; ++k) {
    if (w.coefficients[k] == 0) continue;
    Poly term = multiply(minus_pow[k], plus_pow[n - k]);
    for (int i = 0; i <= n; ++i) acc[i] += w.coefficients[k] * term[i];
  }
  BigInt denom = 1;
  for (int i = 0; i < dim; ++i) denom *= d;
  WeightEnumerator out(n, d);
  for (int i = 0; i <= n; ++i) {
    if (acc[i] % denom != 0 || acc[i] < 0) {
      throw NonIntegerResult("MacWilliams coefficient at weight " +
                             std::to_string(i) +
                             " is not a nonnegative integer");
    }
    out[i] = acc[i] / denom;
  }
  return out;
}

RmEnumerators closed_form_enumerators(int d, int m) {
  if (!is_prime(d) || m < 1) {
    throw std::invalid_argument("closed_form_enumerators needs prime d, m >= 1");
  }
  // For d^m = 2 the shortened code already contains the all-ones vector.
  if (d == 2 && m == 1) throw std::invalid_argument("closed_form_enumerators: (2, 1) is degenerate");
  const long long dm = ipow(d, m);
  const long long dm1 = ipow(d, m - 1);
  const int n = static_cast<int>(dm - 1);
  RmEnumerators r{WeightEnumerator(n, d), WeightEnumerator(n, d)};
  r.lx[0] = 1;
  r.lx[static_cast<int>(dm - dm1)] += dm - 1;
  r.lx_prime = r.lx;
  r.lx_prime[n] += d - 1;
  r.lx_prime[static_cast<int>(dm - 1 - dm1)] += BigInt(d - 1) * (dm - 1);
  return r;
}

}  // namespace qudit_magic
