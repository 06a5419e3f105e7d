#include "qudit_magic/qrm_code.hpp"

#include <algorithm>
#include <sstream>

namespace qudit_magic {

QrmCode make_css(int d, int m, LinearCode lx, LinearCode lz) {
  if (lx.length() != lz.length() || lx.modulus() != d || lz.modulus() != d) {
    throw DimensionMismatch("CSS halves differ in length or modulus");
  }
  QrmCode c;
  c.d = d;
  c.m = m;
  c.n = lx.length();
  c.lx = std::move(lx);
  c.lz = std::move(lz);
  c.x_logical = GFVector::constant(c.n, 1, d);
  c.z_logical = GFVector::constant(c.n, d - 1, d);
  return c;
}

QrmCode build_qrm(int d, int m) {
  if (!is_prime(d) || m < 1) throw std::invalid_argument("build_qrm needs prime d, m >= 1");
  const long long n = ipow(d, m) - 1;
  if (n < m + 1) throw std::invalid_argument("build_qrm: no stabilizer code for n < m + 1");
  if (n > kMaxQrmLength) {
    throw SizeExceeded("QRM_" + std::to_string(d) + "(" + std::to_string(m) +
                       ") has n=" + std::to_string(n) +
                       " qudits; use the closed-form analytics instead");
  }
  LinearCode lx = rm_code(d, m, true);
  LinearCode lz = dual(span_with(lx, GFVector::constant(static_cast<int>(n), 1, d)));
  QrmCode c = make_css(d, m, std::move(lx), std::move(lz));
  if (c.lx.dimension() != m || c.lz.dimension() != c.n - m - 1) {
    throw std::logic_error("QRM construction has unexpected dimensions");
  }
  if (!validate_css(c).all_passed()) {
    throw std::logic_error("QRM construction violates a CSS identity");
  }
  return c;
}

bool CssReport::all_passed() const {
  return stabilizers_commute && x_logical_commutes && z_logical_commutes &&
         logical_phase && lz_is_dual_of_lx_prime && lz_dual_is_lx_prime &&
         lx_is_dual_of_lz_prime && lx_dual_is_lz_prime;
}

namespace {

bool orthogonal_to_all(const LinearCode& code, const GFVector& v) {
  for (int i = 0; i < code.dimension(); ++i) {
    if (dot(code.generator(i), v) != 0) return false;
  }
  return true;
}

}  // namespace

CssReport validate_css(const QrmCode& code) {
  CssReport r;
  r.stabilizers_commute = true;
  for (int i = 0; i < code.lz.dimension() && r.stabilizers_commute; ++i) {
    r.stabilizers_commute = orthogonal_to_all(code.lx, code.lz.generator(i));
  }
  r.x_logical_commutes = orthogonal_to_all(code.lz, code.x_logical);
  r.z_logical_commutes = orthogonal_to_all(code.lx, code.z_logical);
  r.logical_phase = dot(code.x_logical, code.z_logical) == 1;
  const LinearCode lx_prime = span_with(code.lx, code.x_logical);
  const LinearCode lz_prime = span_with(code.lz, code.z_logical);
  r.lz_is_dual_of_lx_prime = code.lz == dual(lx_prime);
  r.lz_dual_is_lx_prime = dual(code.lz) == lx_prime;
  r.lx_is_dual_of_lz_prime = code.lx == dual(lz_prime);
  r.lx_dual_is_lz_prime = dual(code.lx) == lz_prime;
  return r;
}

LemmaCheck verify_transversality_classical(const QrmCode& code,
                                           const MagicGate& gate,
                                           std::uint64_t cutoff) {
  if (gate.d() != code.d || gate.m() != code.m) {
    throw DimensionMismatch("gate and code parameters differ");
  }
  const int d = code.d;
  const int p = static_cast<int>(gate.period());
  LemmaCheck r;
  for_each_codeword(
      code.lx,
      [&](const IntVector& w) {
        if (!r.passed) return;
        for (int j = 0; j < d; ++j) {
          IntVector v = w;
          for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = (v[i] + j) % d;
          const long long got = lambda_eval(gate, v);
          const long long want = mod_reduce(-gate.lambda(j), p);
          ++r.vectors_checked;
          if (got != want) {
            r.passed = false;
            r.counterexample = GFVector(w, d);
            r.shift = j;
            r.value = got;
            r.expected = want;
            return;
          }
        }
      },
      cutoff);
  return r;
}

std::optional<int> CodeDistance::distance() const {
  if (dx && dz) return std::min(*dx, *dz);
  if (dx) return dx;
  return dz;
}

CodeDistance code_distance(const QrmCode& code, int max_weight) {
  CodeDistance r;
  r.max_weight = max_weight;
  r.dz = coset_min_weight(dual(code.lx), code.lz, max_weight);
  r.dx = coset_min_weight(dual(code.lz), code.lx, max_weight);
  return r;
}

std::string serialize(const QrmCode& code) {
  std::ostringstream os;
  os << "d=" << code.d << " m=" << code.m << '\n';
  os << "[X]\n" << serialize(code.lx);
  os << "[Z]\n" << serialize(code.lz);
  return os.str();
}

QrmCode parse_qrm_code(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  if (!std::getline(is, line)) throw ParseError("missing QRM header");
  int d = 0, m = 0;
  {
    std::istringstream hs(line);
    std::string a, b;
    hs >> a >> b;
    if (a.rfind("d=", 0) != 0 || b.rfind("m=", 0) != 0) {
      throw ParseError("QRM header must read \"d=<d> m=<m>\"");
    }
    try {
      d = std::stoi(a.substr(2));
      m = std::stoi(b.substr(2));
    } catch (const std::exception&) {
      throw ParseError("malformed QRM header: " + line);
    }
  }
  std::string x_text, z_text;
  std::string* section = nullptr;
  while (std::getline(is, line)) {
    if (line == "[X]") {
      section = &x_text;
    } else if (line == "[Z]") {
      section = &z_text;
    } else if (section) {
      *section += line + '\n';
    } else if (line.find_first_not_of(" \t\r") != std::string::npos) {
      throw ParseError("content before [X] section");
    }
  }
  if (x_text.empty() || z_text.empty()) throw ParseError("missing [X] or [Z] section");
  LinearCode lx = parse_linear_code(x_text);
  LinearCode lz = parse_linear_code(z_text);
  if (lx.modulus() != d || lz.modulus() != d) throw ParseError("section modulus differs from header");
  return make_css(d, m, std::move(lx), std::move(lz));
}

}  // namespace qudit_magic
