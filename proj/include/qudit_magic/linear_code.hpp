#ifndef QUDIT_MAGIC_LINEAR_CODE_HPP_
#define QUDIT_MAGIC_LINEAR_CODE_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "qudit_magic/errors.hpp"

namespace qudit_magic {

inline constexpr std::uint64_t kDefaultSpanCutoff = std::uint64_t{1} << 24;

using IntVector = Eigen::VectorXi;
using IntMatrix = Eigen::MatrixXi;

bool is_prime(long long d);

// Representative of a in [0, d).
inline int mod_reduce(long long a, int d) {
  long long r = a % d;
  return static_cast<int>(r < 0 ? r + d : r);
}

int mod_inverse(int a, int d);

long long ipow(long long base, int exp);

// base^exp, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, int exp);

class GFVector {
 public:
  GFVector() = default;
  // Entries are reduced into [0, modulus).
  GFVector(const IntVector& entries, int modulus);
  GFVector(std::initializer_list<int> entries, int modulus);

  static GFVector zero(int n, int modulus);
  static GFVector constant(int n, int value, int modulus);

  int modulus() const { return modulus_; }
  int size() const { return static_cast<int>(entries_.size()); }
  int operator[](int i) const { return entries_[i]; }
  const IntVector& entries() const { return entries_; }

  friend bool operator==(const GFVector& a, const GFVector& b) {
    return a.modulus_ == b.modulus_ && a.entries_ == b.entries_;
  }

 private:
  IntVector entries_;
  int modulus_ = 2;
};

GFVector operator+(const GFVector& a, const GFVector& b);
GFVector operator-(const GFVector& a, const GFVector& b);
GFVector operator-(const GFVector& a);
GFVector operator*(int s, const GFVector& a);
int dot(const GFVector& a, const GFVector& b);
std::ostream& operator<<(std::ostream& os, const GFVector& v);

// Number of entries equal to each symbol k in [0, d).
struct KWeightProfile {
  std::vector<int> counts;
  int length() const;
  friend bool operator==(const KWeightProfile&, const KWeightProfile&) = default;
};

struct Weights {
  int hamming = 0;
  KWeightProfile profile;
};

Weights weights(const GFVector& v);
KWeightProfile k_weight_profile(const Eigen::Ref<const IntVector>& v, int d);

// Linear code over GF(d). Generators are kept in reduced row-echelon form,
// so two codes with the same span compare equal.
class LinearCode {
 public:
  LinearCode() = default;
  // Zero code of the given length.
  LinearCode(int length, int modulus);
  // Span of the rows of `rows`; dependent rows are dropped.
  LinearCode(const IntMatrix& rows, int modulus);

  static LinearCode from_vectors(const std::vector<GFVector>& rows, int length,
                                 int modulus);

  int length() const { return length_; }
  int modulus() const { return modulus_; }
  int dimension() const { return static_cast<int>(generators_.rows()); }
  const IntMatrix& generators() const { return generators_; }
  GFVector generator(int i) const;
  const std::vector<int>& pivots() const { return pivots_; }

  // d^dimension, saturating.
  std::uint64_t span_size() const;
  bool contains(const GFVector& v) const;
  bool contains(const Eigen::Ref<const IntVector>& v) const;
  bool is_subcode_of(const LinearCode& other) const;
  GFVector encode(const IntVector& coefficients) const;

  friend bool operator==(const LinearCode& a, const LinearCode& b) {
    return a.modulus_ == b.modulus_ && a.length_ == b.length_ &&
           a.generators_ == b.generators_;
  }

 private:
  IntMatrix generators_;
  std::vector<int> pivots_;
  int length_ = 0;
  int modulus_ = 2;
};

LinearCode dual(const LinearCode& code);
LinearCode shorten(const LinearCode& code);
LinearCode span_with(const LinearCode& code, const GFVector& v);

// First-order Reed-Muller code. Evaluation points are the base-d digit
// vectors of 0, 1, ..., d^m - 1 (most significant digit first); the
// shortened code drops the point 0.
LinearCode rm_code(int d, int m, bool shortened);
GFVector rm_codeword(int d, int m, const std::vector<int>& ubar, int c,
                     bool shortened);

// Calls fn(const IntVector&) once per codeword, coefficient tuples in
// lexicographic order with the last generator varying fastest.
template <typename Fn>
void for_each_codeword(const LinearCode& code, Fn&& fn,
                       std::uint64_t cutoff = kDefaultSpanCutoff) {
  if (code.span_size() > cutoff) {
    throw CutoffExceeded("span of " + std::to_string(code.dimension()) +
                         "-dimensional code over GF(" +
                         std::to_string(code.modulus()) + ") exceeds cutoff");
  }
  const int d = code.modulus();
  const int k = code.dimension();
  const IntMatrix& g = code.generators();
  IntVector word = IntVector::Zero(code.length());
  std::vector<int> coeff(k, 0);
  while (true) {
    fn(static_cast<const IntVector&>(word));
    int i = k - 1;
    for (; i >= 0; --i) {
      for (int j = 0; j < code.length(); ++j) {
        word[j] += g(i, j);
        if (word[j] >= d) word[j] -= d;
      }
      if (++coeff[i] < d) break;
      coeff[i] = 0;
    }
    if (i < 0) break;
  }
}

std::vector<GFVector> span_enumerate(const LinearCode& code,
                                     std::uint64_t cutoff = kDefaultSpanCutoff);

struct CanonicalForm {
  // dim x n matrix whose leading dim x dim block is the identity.
  IntMatrix matrix;
  // Column i of `matrix` is column permutation[i] of the original code.
  std::vector<int> permutation;
};

CanonicalForm canonical_generator_form(const LinearCode& code);

// Minimum weight over ambient \ excluded, searching weights up to
// max_weight; nullopt if nothing is found.
std::optional<int> coset_min_weight(const LinearCode& ambient,
                                    const LinearCode& excluded, int max_weight);

std::string serialize(const LinearCode& code);
LinearCode parse_linear_code(std::string_view text);

}  // namespace qudit_magic

#endif  // QUDIT_MAGIC_LINEAR_CODE_HPP_
