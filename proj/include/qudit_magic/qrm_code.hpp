#ifndef QUDIT_MAGIC_QRM_CODE_HPP_
#define QUDIT_MAGIC_QRM_CODE_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "qudit_magic/linear_code.hpp"
#include "qudit_magic/magic_gate.hpp"

namespace qudit_magic {

// CSS code described by the classical codes behind its X and Z stabilizers,
// plus logical operator vectors.
struct QrmCode {
  int d = 0;
  int m = 0;
  int n = 0;
  LinearCode lx;
  LinearCode lz;
  GFVector x_logical;  // all-ones
  GFVector z_logical;  // (d-1) times all-ones
};

inline constexpr int kMaxQrmLength = 4096;

// L_X = RM*_d(1,m), L_Z = span(L_X, 1)^perp. Throws if the construction
// fails any CSS identity or n exceeds kMaxQrmLength.
QrmCode build_qrm(int d, int m);

// Unchecked assembly from explicit halves.
QrmCode make_css(int d, int m, LinearCode lx, LinearCode lz);

struct CssReport {
  bool stabilizers_commute = false;
  bool x_logical_commutes = false;  // with every Z stabilizer
  bool z_logical_commutes = false;  // with every X stabilizer
  bool logical_phase = false;       // <1, (d-1) 1> = 1 mod d
  bool lz_is_dual_of_lx_prime = false;
  bool lz_dual_is_lx_prime = false;
  bool lx_is_dual_of_lz_prime = false;
  bool lx_dual_is_lz_prime = false;
  bool all_passed() const;
};

CssReport validate_css(const QrmCode& code);

// Lambda(v + j 1) = -lambda_j mod d^m for every v in L_X and every j.
LemmaCheck verify_transversality_classical(const QrmCode& code,
                                           const MagicGate& gate,
                                           std::uint64_t cutoff = kDefaultSpanCutoff);

struct CodeDistance {
  int max_weight = 3;
  std::optional<int> dx;
  std::optional<int> dz;
  // min(dx, dz) when at least one is found within max_weight.
  std::optional<int> distance() const;
};

CodeDistance code_distance(const QrmCode& code, int max_weight = 3);

std::string serialize(const QrmCode& code);
QrmCode parse_qrm_code(std::string_view text);

}  // namespace qudit_magic

#endif  // QUDIT_MAGIC_QRM_CODE_HPP_
