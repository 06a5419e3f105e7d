#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "qudit_magic/qrm_code.hpp"
#include "qudit_magic/weight_enumerator.hpp"

namespace qm = qudit_magic;
using qm::BigInt;
using qm::IntMatrix;
using qm::LinearCode;
using qm::WeightEnumerator;

namespace {

WeightEnumerator make(int n, int d, std::vector<std::pair<int, int>> terms) {
  WeightEnumerator w(n, d);
  for (auto [k, c] : terms) w[k] = c;
  return w;
}

IntMatrix random_matrix(std::mt19937& rng, int rows, int cols, int d) {
  std::uniform_int_distribution<int> u(0, d - 1);
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = u(rng);
  return m;
}

}  // namespace

TEST(BruteForce, Examples) {
  EXPECT_EQ(qm::weight_enumerator_bruteforce(LinearCode(4, 5)), make(4, 5, {{0, 1}}));
  EXPECT_EQ(qm::weight_enumerator_bruteforce(qm::rm_code(5, 1, true)), make(4, 5, {{0, 1}, {4, 4}}));
  EXPECT_EQ(qm::weight_enumerator_bruteforce(qm::rm_code(3, 2, true)), make(8, 3, {{0, 1}, {6, 8}}));
}

TEST(BruteForce, Invariants) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const LinearCode c(random_matrix(rng, 3, 6, 3), 3);
    const WeightEnumerator w = qm::weight_enumerator_bruteforce(c);
    EXPECT_EQ(w.total(), BigInt(qm::ipow(3, c.dimension())));
    EXPECT_EQ(w[0], 1);
  }
}

TEST(MacWilliams, WholeSpaceToZeroCode) {
  const WeightEnumerator whole = qm::weight_enumerator_bruteforce(LinearCode(IntMatrix::Identity(2, 2), 3));
  EXPECT_EQ(qm::macwilliams_transform(whole, 2), make(2, 3, {{0, 1}}));
}

TEST(MacWilliams, ShortenedRmDual) {
  const LinearCode rm = qm::rm_code(5, 1, true);
  EXPECT_EQ(qm::macwilliams_transform(qm::weight_enumerator_bruteforce(rm), 1),
            qm::weight_enumerator_bruteforce(qm::dual(rm)));
}

TEST(MacWilliams, QrmLxPrimeToLz) {
  const qm::QrmCode c = qm::build_qrm(3, 2);
  const LinearCode lxp = qm::span_with(c.lx, c.x_logical);
  ASSERT_EQ(lxp.dimension(), 3);
  const WeightEnumerator lz = qm::weight_enumerator_bruteforce(c.lz);
  EXPECT_EQ(lz.total(), 243);
  EXPECT_EQ(qm::macwilliams_transform(qm::weight_enumerator_bruteforce(lxp), 3), lz);
}

TEST(MacWilliams, InconsistentInputRejected) {
  // 1 + x is not the enumerator of any 1-dimensional ternary code.
  EXPECT_THROW(qm::macwilliams_transform(make(2, 3, {{0, 1}, {1, 1}}), 1), qm::NonIntegerResult);
}

TEST(MacWilliams, PropertyRandomCodes) {
  std::mt19937 rng(22);
  for (int d : {2, 3, 5}) {
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 6);
      const int k = static_cast<int>(rng() % (n + 1));
      const LinearCode c(random_matrix(rng, k, n, d), d);
      const WeightEnumerator w = qm::weight_enumerator_bruteforce(c);
      const WeightEnumerator wd = qm::macwilliams_transform(w, c.dimension());
      EXPECT_EQ(wd, qm::weight_enumerator_bruteforce(qm::dual(c)));
      EXPECT_EQ(qm::macwilliams_transform(wd, n - c.dimension()), w);
    }
  }
}

TEST(ClosedForm, Examples) {
  auto e = qm::closed_form_enumerators(5, 1);
  EXPECT_EQ(e.lx, make(4, 5, {{0, 1}, {4, 4}}));
  EXPECT_EQ(e.lx_prime, make(4, 5, {{0, 1}, {3, 16}, {4, 8}}));
  e = qm::closed_form_enumerators(3, 2);
  EXPECT_EQ(e.lx, make(8, 3, {{0, 1}, {6, 8}}));
  EXPECT_EQ(e.lx_prime, make(8, 3, {{0, 1}, {5, 16}, {6, 8}, {8, 2}}));
  e = qm::closed_form_enumerators(2, 4);
  EXPECT_EQ(e.lx, make(15, 2, {{0, 1}, {8, 15}}));
  EXPECT_EQ(e.lx, qm::weight_enumerator_bruteforce(qm::rm_code(2, 4, true)));
}

TEST(ClosedForm, PropertyMatchesBruteForce) {
  for (int d : {2, 3, 5, 7}) {
    for (int m = 1; m <= 2; ++m) {
      if (d == 2 && m == 1) {
        EXPECT_THROW(qm::closed_form_enumerators(d, m), std::invalid_argument);
        continue;
      }
      const auto e = qm::closed_form_enumerators(d, m);
      const LinearCode lx = qm::rm_code(d, m, true);
      const LinearCode lxp = qm::span_with(lx, qm::GFVector::constant(lx.length(), 1, d));
      EXPECT_EQ(e.lx, qm::weight_enumerator_bruteforce(lx)) << d << "," << m;
      EXPECT_EQ(e.lx_prime, qm::weight_enumerator_bruteforce(lxp)) << d << "," << m;
      EXPECT_EQ(e.lx_prime.total(), BigInt(qm::ipow(d, m + 1)));
    }
  }
}

TEST(ClosedForm, LargeParametersExact) {
  const auto e = qm::closed_form_enumerators(19, 4);
  EXPECT_EQ(e.lx.total(), BigInt(qm::ipow(19, 4)));
  EXPECT_EQ(e.lx_prime.total(), BigInt(qm::ipow(19, 5)));
}

TEST(Evaluate, LogFormAgrees) {
  const auto e = qm::closed_form_enumerators(3, 2);
  for (double x : {0.01, 0.3, 0.9}) {
    EXPECT_NEAR(qm::evaluate(e.lx_prime, x), qm::evaluate_from_log(e.lx_prime, std::log(x)), 1e-12);
  }
  EXPECT_DOUBLE_EQ(qm::evaluate(e.lx, 1.0), 9.0);
}
