#include "qudit_magic/distillation.hpp"

#include <map>

namespace qudit_magic {

IterationTable::IterationTable(const QrmCode& code, std::uint64_t cutoff)
    : d_(code.d), n_(code.n), m_(code.m) {
  std::map<std::vector<int>, std::uint64_t> groups;
  for_each_codeword(
      code.lz,
      [&](const IntVector& w) { ++groups[k_weight_profile(w, d_).counts]; },
      cutoff);
  terms_.reserve(groups.size());
  for (auto& [counts, mult] : groups) terms_.push_back(Term{counts, mult});
}

BigRational taylor_coefficient(int d, int m) {
  if (!protocol_applicable(d, m)) {
    throw std::invalid_argument("no distillation protocol for this (d, m)");
  }
  return BigRational(BigInt(ipow(d, m) - 1) * (d - 2), BigInt(2 * (d - 1)));
}

bool protocol_applicable(int d, int m) {
  if (!is_prime(d) || m < 1) return false;
  if (d == 2) return m >= 4;
  if (d == 3) return m >= 2;
  return true;
}

}  // namespace qudit_magic
