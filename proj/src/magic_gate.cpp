#include "qudit_magic/magic_gate.hpp"

#include <numbers>
#include <numeric>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace qudit_magic {

namespace {

using Rational = boost::multiprecision::cpp_rational;

long long binom(long long n, int k) {
  if (k < 0 || n < k) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// d^e as an exact rational; e may be negative.
Rational rational_power(int d, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= d;
  for (int i = 0; i > e; --i) r /= d;
  return r;
}

long long certify_integer(const Rational& r, int d, int m) {
  if (boost::multiprecision::denominator(r) != 1) {
    throw EmptyGateSet("no non-Clifford gate for d=" + std::to_string(d) +
                       " m=" + std::to_string(m));
  }
  return static_cast<long long>(boost::multiprecision::numerator(r));
}

void require_gate_exists(int d, int m) {
  if (!is_prime(d)) throw std::invalid_argument("d must be prime");
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (d == 2 || (d == 3 && m == 1)) {
    throw EmptyGateSet("no non-Clifford gate for d=" + std::to_string(d) +
                       " m=" + std::to_string(m));
  }
}

}  // namespace

MagicGate::MagicGate(int d, int m, std::vector<long long> lambda)
    : d_(d), m_(m), period_(ipow(d, m)), lambda_(std::move(lambda)) {
  if (!is_prime(d)) throw std::invalid_argument("gate dimension must be prime");
  if (m < 1) throw std::invalid_argument("gate level m must be positive");
  if (static_cast<int>(lambda_.size()) != d) {
    throw DimensionMismatch("lambda must have d entries");
  }
}

double MagicGate::phase(int j) const {
  return 2.0 * std::numbers::pi * static_cast<double>(lambda_[j]) /
         static_cast<double>(period_);
}

MagicGate canonical_gate(int d, int m) {
  require_gate_exists(d, m);
  const Rational scale = rational_power(d, m - 2);
  std::vector<long long> lambda(d);
  for (int j = 0; j < d; ++j) {
    Rational v = scale * Rational(d * binom(j, 3) - j * binom(d, 3) +
                                  binom(d + 1, 4));
    lambda[j] = certify_integer(v, d, m);
  }
  return MagicGate(d, m, std::move(lambda));
}

long long canonical_recurrence_constant(int d, int m) {
  require_gate_exists(d, m);
  return certify_integer(-rational_power(d, m - 2) * binom(d, 3), d, m);
}

long long canonical_lambda0(int d, int m) {
  require_gate_exists(d, m);
  return certify_integer(rational_power(d, m - 2) * binom(d + 1, 4), d, m);
}

std::vector<long long> canonical_lambda_recurrence_form(int d, int m) {
  const long long c = canonical_recurrence_constant(d, m);
  const long long l0 = canonical_lambda0(d, m);
  const long long top = ipow(d, m - 1);
  std::vector<long long> lambda(d);
  for (int j = 0; j < d; ++j) lambda[j] = top * binom(j, 3) + j * c + l0;
  return lambda;
}

namespace {

// Residue of d^{m-1}(a C(j,2) + b j) mod d^m for j taken mod d.
long long quadratic_term(int a, int b, int j, int d, long long top,
                         long long period) {
  const long long q = mod_reduce(a * binom(j, 2) + static_cast<long long>(b) * j, d);
  return mod_reduce(top * q, static_cast<int>(period));
}

std::optional<long long> fit_constant(const std::vector<long long>& delta,
                                      int a, int b, int d, long long top,
                                      long long period) {
  const int p = static_cast<int>(period);
  const long long c0 = mod_reduce(delta[0] - quadratic_term(a, b, 0, d, top, period), p);
  for (int j = 1; j < d; ++j) {
    if (mod_reduce(delta[j] - quadratic_term(a, b, j, d, top, period), p) != c0) {
      return std::nullopt;
    }
  }
  return c0;
}

}  // namespace

MembershipReport verify_membership(const MagicGate& gate) {
  MembershipReport r;
  const int d = gate.d();
  const long long period = gate.period();
  const long long top = period / d;
  // Exponents are integers over d^m, so M^{d^m} = 1 holds by construction.
  r.integral_period = period == ipow(d, gate.m());
  r.lambda_sum = std::accumulate(gate.lambda().begin(), gate.lambda().end(), 0LL);
  r.special_unitary = mod_reduce(r.lambda_sum, static_cast<int>(period)) == 0;

  std::vector<long long> delta(d);
  for (int j = 0; j < d; ++j) {
    delta[j] = gate.lambda((j + 1) % d) - gate.lambda(j);
  }
  if (fit_constant(delta, 1, 0, d, top, period)) {
    r.recurrence_constant = delta[0];
  }
  for (int a = 0; a < d && !r.second_level_fit; ++a) {
    for (int b = 0; b < d; ++b) {
      if (fit_constant(delta, a, b, d, top, period)) {
        r.second_level_fit = QuadraticFit{a, b};
        break;
      }
    }
  }
  r.is_second_level = r.second_level_fit.has_value();
  r.is_clifford = r.is_second_level && r.second_level_fit->a == 0;
  r.member = r.diagonal && r.integral_period && r.special_unitary &&
             r.is_second_level && !r.is_clifford;
  return r;
}

long long lambda_eval(const MagicGate& gate,
                      const Eigen::Ref<const IntVector>& v) {
  long long s = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    s += gate.lambda(mod_reduce(v[i], gate.d()));
  }
  return mod_reduce(s, static_cast<int>(gate.period()));
}

long long lambda_eval(const MagicGate& gate, const GFVector& v) {
  if (v.modulus() != gate.d()) throw DimensionMismatch("vector modulus != gate d");
  return lambda_eval(gate, v.entries());
}

MagicGate dagger(const MagicGate& gate) {
  std::vector<long long> l(gate.lambda());
  for (auto& x : l) x = -x;
  return MagicGate(gate.d(), gate.m(), std::move(l));
}

MagicGate lift(const MagicGate& gate) {
  std::vector<long long> l(gate.lambda());
  for (auto& x : l) x *= gate.d();
  return MagicGate(gate.d(), gate.m() + 1, std::move(l));
}

LemmaCheck lemma_check(const MagicGate& gate, bool shortened,
                       std::uint64_t cutoff) {
  const int d = gate.d();
  const int p = static_cast<int>(gate.period());
  LinearCode code = rm_code(d, gate.m(), shortened);
  LemmaCheck r;
  const int shifts = shortened ? d : 1;
  for_each_codeword(
      code,
      [&](const IntVector& w) {
        if (!r.passed) return;
        for (int c = 0; c < shifts; ++c) {
          IntVector v = w;
          for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = (v[i] + c) % d;
          const long long got = lambda_eval(gate, v);
          const long long want = shortened ? mod_reduce(-gate.lambda(c), p) : 0;
          ++r.vectors_checked;
          if (got != want) {
            r.passed = false;
            r.counterexample = GFVector(w, d);
            r.shift = c;
            r.value = got;
            r.expected = want;
            return;
          }
        }
      },
      cutoff);
  return r;
}

std::string serialize(const MagicGate& gate) {
  std::ostringstream os;
  os << "d=" << gate.d() << " m=" << gate.m() << " lambda=";
  for (int j = 0; j < gate.d(); ++j) os << (j ? "," : "") << gate.lambda(j);
  return os.str();
}

MagicGate parse_magic_gate(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string a, b, c;
  is >> a >> b >> c;
  if (a.rfind("d=", 0) != 0 || b.rfind("m=", 0) != 0 ||
      c.rfind("lambda=", 0) != 0) {
    throw ParseError("gate must read \"d=<d> m=<m> lambda=<ints>\"");
  }
  try {
    const int d = std::stoi(a.substr(2));
    const int m = std::stoi(b.substr(2));
    std::vector<long long> lambda;
    std::istringstream ls(c.substr(7));
    std::string item;
    while (std::getline(ls, item, ',')) {
      std::size_t used = 0;
      lambda.push_back(std::stoll(item, &used));
      if (used != item.size()) throw ParseError("bad lambda entry: " + item);
    }
    return MagicGate(d, m, std::move(lambda));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("malformed gate: ") + e.what());
  }
}

}  // namespace qudit_magic
