#ifndef QUDIT_MAGIC_MAGIC_GATE_HPP_
#define QUDIT_MAGIC_MAGIC_GATE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qudit_magic/linear_code.hpp"

namespace qudit_magic {

// Diagonal gate M = diag(exp(2 pi i lambda_j / d^m)).
class MagicGate {
 public:
  MagicGate(int d, int m, std::vector<long long> lambda);

  int d() const { return d_; }
  int m() const { return m_; }
  const std::vector<long long>& lambda() const { return lambda_; }
  long long lambda(int j) const { return lambda_[j]; }
  // Phase denominator d^m.
  long long period() const { return period_; }
  double phase(int j) const;

  friend bool operator==(const MagicGate&, const MagicGate&) = default;

 private:
  int d_;
  int m_;
  long long period_;
  std::vector<long long> lambda_;
};

// Exact integer exponents d^{m-2}(d C(j,3) - j C(d,3) + C(d+1,4)); they sum
// to zero over the integers. Throws EmptyGateSet for d = 2 and (3, 1).
MagicGate canonical_gate(int d, int m);

// The same exponents from d^{m-1} C(j,3) + j c + lambda_0.
std::vector<long long> canonical_lambda_recurrence_form(int d, int m);
long long canonical_recurrence_constant(int d, int m);
long long canonical_lambda0(int d, int m);

// (a, b) such that lambda_{j+1} - lambda_j - d^{m-1}(a C(j,2) + b j) is
// constant mod d^m over the cyclic index.
struct QuadraticFit {
  int a = 0;
  int b = 0;
};

struct MembershipReport {
  bool diagonal = true;
  bool integral_period = false;
  bool special_unitary = false;
  long long lambda_sum = 0;
  std::optional<long long> recurrence_constant;
  std::optional<QuadraticFit> second_level_fit;
  bool is_second_level = false;
  bool is_clifford = false;
  bool member = false;
};

MembershipReport verify_membership(const MagicGate& gate);

// sum_j lambda_{v_j} mod d^m, in [0, d^m).
long long lambda_eval(const MagicGate& gate, const GFVector& v);
long long lambda_eval(const MagicGate& gate, const Eigen::Ref<const IntVector>& v);

MagicGate dagger(const MagicGate& gate);
// The same gate viewed with phase denominator d^{m+1}.
MagicGate lift(const MagicGate& gate);

struct LemmaCheck {
  bool passed = true;
  std::uint64_t vectors_checked = 0;
  std::optional<GFVector> counterexample;
  int shift = 0;
  long long value = 0;
  long long expected = 0;
};

// Unshortened: Lambda vanishes on RM_d(1,m). Shortened: Lambda(v + c 1) is
// -lambda_c for every v in the shortened code and every c.
LemmaCheck lemma_check(const MagicGate& gate, bool shortened,
                       std::uint64_t cutoff = kDefaultSpanCutoff);

std::string serialize(const MagicGate& gate);
MagicGate parse_magic_gate(std::string_view text);

}  // namespace qudit_magic

#endif  // QUDIT_MAGIC_MAGIC_GATE_HPP_
