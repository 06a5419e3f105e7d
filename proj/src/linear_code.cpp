#include "qudit_magic/linear_code.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <tuple>

namespace qudit_magic {

bool is_prime(long long d) {
  if (d < 2) return false;
  for (long long p = 2; p * p <= d; ++p) {
    if (d % p == 0) return false;
  }
  return true;
}

int mod_inverse(int a, int d) {
  long long t = 0, new_t = 1, r = d, new_r = mod_reduce(a, d);
  while (new_r != 0) {
    long long q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (r != 1) throw std::domain_error("element is not invertible mod d");
  return mod_reduce(t, d);
}

long long ipow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::uint64_t saturating_pow(std::uint64_t base, int exp) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > kMax / base) return kMax;
    r *= base;
  }
  return r;
}

namespace {

void require_prime(int d) {
  if (!is_prime(d)) {
    throw std::invalid_argument("modulus " + std::to_string(d) +
                                " is not prime");
  }
}

// Reduced row-echelon form mod d; zero rows are dropped.
IntMatrix rref(IntMatrix m, int d, std::vector<int>* pivots) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = mod_reduce(m(i, j), d);
  }
  pivots->clear();
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    m.row(row).swap(m.row(sel));
    const int inv = mod_inverse(m(row, col), d);
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      m(row, j) = static_cast<int>(static_cast<long long>(m(row, j)) * inv % d);
    }
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const int f = m(i, col);
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        m(i, j) = mod_reduce(m(i, j) - static_cast<long long>(f) * m(row, j), d);
      }
    }
    pivots->push_back(static_cast<int>(col));
    ++row;
  }
  return m.topRows(row);
}

void check_same_field(const GFVector& a, const GFVector& b) {
  if (a.modulus() != b.modulus() || a.size() != b.size()) {
    throw DimensionMismatch("GF vectors differ in length or modulus");
  }
}

}  // namespace

GFVector::GFVector(const IntVector& entries, int modulus)
    : entries_(entries), modulus_(modulus) {
  require_prime(modulus);
  for (Eigen::Index i = 0; i < entries_.size(); ++i) {
    entries_[i] = mod_reduce(entries_[i], modulus);
  }
}

GFVector::GFVector(std::initializer_list<int> entries, int modulus)
    : GFVector(Eigen::Map<const IntVector>(entries.begin(),
                                           static_cast<Eigen::Index>(entries.size())),
               modulus) {}

GFVector GFVector::zero(int n, int modulus) {
  return GFVector(IntVector::Zero(n), modulus);
}

GFVector GFVector::constant(int n, int value, int modulus) {
  return GFVector(IntVector::Constant(n, value), modulus);
}

GFVector operator+(const GFVector& a, const GFVector& b) {
  check_same_field(a, b);
  return GFVector(a.entries() + b.entries(), a.modulus());
}

GFVector operator-(const GFVector& a, const GFVector& b) {
  check_same_field(a, b);
  return GFVector(a.entries() - b.entries(), a.modulus());
}

GFVector operator-(const GFVector& a) {
  return GFVector(-a.entries(), a.modulus());
}

GFVector operator*(int s, const GFVector& a) {
  return GFVector(mod_reduce(s, a.modulus()) * a.entries(), a.modulus());
}

int dot(const GFVector& a, const GFVector& b) {
  check_same_field(a, b);
  long long s = 0;
  for (int i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
  return mod_reduce(s, a.modulus());
}

std::ostream& operator<<(std::ostream& os, const GFVector& v) {
  os << '(';
  for (int i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

int KWeightProfile::length() const {
  return std::accumulate(counts.begin(), counts.end(), 0);
}

KWeightProfile k_weight_profile(const Eigen::Ref<const IntVector>& v, int d) {
  KWeightProfile p;
  p.counts.assign(d, 0);
  for (Eigen::Index i = 0; i < v.size(); ++i) ++p.counts[v[i]];
  return p;
}

Weights weights(const GFVector& v) {
  Weights w;
  w.profile = k_weight_profile(v.entries(), v.modulus());
  w.hamming = v.size() - w.profile.counts[0];
  return w;
}

LinearCode::LinearCode(int length, int modulus)
    : generators_(0, length), length_(length), modulus_(modulus) {
  require_prime(modulus);
}

LinearCode::LinearCode(const IntMatrix& rows, int modulus)
    : length_(static_cast<int>(rows.cols())), modulus_(modulus) {
  require_prime(modulus);
  generators_ = rref(rows, modulus, &pivots_);
}

LinearCode LinearCode::from_vectors(const std::vector<GFVector>& rows,
                                    int length, int modulus) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), length);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != length || rows[i].modulus() != modulus) {
      throw DimensionMismatch("generator row has wrong length or modulus");
    }
    m.row(static_cast<Eigen::Index>(i)) = rows[i].entries().transpose();
  }
  return LinearCode(m, modulus);
}

GFVector LinearCode::generator(int i) const {
  return GFVector(generators_.row(i).transpose(), modulus_);
}

std::uint64_t LinearCode::span_size() const {
  return saturating_pow(static_cast<std::uint64_t>(modulus_), dimension());
}

bool LinearCode::contains(const Eigen::Ref<const IntVector>& v) const {
  if (v.size() != length_) return false;
  IntVector r = v;
  for (int i = 0; i < dimension(); ++i) {
    const int f = mod_reduce(r[pivots_[i]], modulus_);
    if (f == 0) continue;
    for (int j = 0; j < length_; ++j) {
      r[j] = mod_reduce(r[j] - static_cast<long long>(f) * generators_(i, j),
                        modulus_);
    }
  }
  for (int j = 0; j < length_; ++j) {
    if (mod_reduce(r[j], modulus_) != 0) return false;
  }
  return true;
}

bool LinearCode::contains(const GFVector& v) const {
  return v.modulus() == modulus_ && contains(v.entries());
}

bool LinearCode::is_subcode_of(const LinearCode& other) const {
  if (other.modulus_ != modulus_ || other.length_ != length_) return false;
  for (int i = 0; i < dimension(); ++i) {
    if (!other.contains(IntVector(generators_.row(i).transpose()))) return false;
  }
  return true;
}

GFVector LinearCode::encode(const IntVector& coefficients) const {
  if (coefficients.size() != dimension()) {
    throw DimensionMismatch("coefficient count differs from code dimension");
  }
  IntVector w = IntVector::Zero(length_);
  for (int i = 0; i < dimension(); ++i) {
    w += mod_reduce(coefficients[i], modulus_) * generators_.row(i).transpose();
  }
  return GFVector(w, modulus_);
}

LinearCode dual(const LinearCode& code) {
  const int n = code.length();
  const int d = code.modulus();
  const int k = code.dimension();
  const auto& piv = code.pivots();
  std::vector<bool> is_pivot(n, false);
  for (int p : piv) is_pivot[p] = true;
  IntMatrix h(n - k, n);
  h.setZero();
  int row = 0;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    h(row, f) = 1;
    for (int i = 0; i < k; ++i) h(row, piv[i]) = mod_reduce(-code.generators()(i, f), d);
    ++row;
  }
  if (n - k == 0) return LinearCode(n, d);
  return LinearCode(h, d);
}

LinearCode shorten(const LinearCode& code) {
  if (code.length() < 2) throw std::invalid_argument("shorten needs n >= 2");
  const int n = code.length();
  const IntMatrix& g = code.generators();
  // In RREF only a row pivoting on column 0 can be nonzero there.
  std::vector<Eigen::Index> keep;
  for (int i = 0; i < code.dimension(); ++i) {
    if (code.pivots()[i] != 0) keep.push_back(i);
  }
  IntMatrix s(static_cast<Eigen::Index>(keep.size()), n - 1);
  for (std::size_t r = 0; r < keep.size(); ++r) {
    s.row(static_cast<Eigen::Index>(r)) = g.row(keep[r]).tail(n - 1);
  }
  if (keep.empty()) return LinearCode(n - 1, code.modulus());
  return LinearCode(s, code.modulus());
}

LinearCode span_with(const LinearCode& code, const GFVector& v) {
  if (v.size() != code.length() || v.modulus() != code.modulus()) {
    throw DimensionMismatch("vector does not match code");
  }
  IntMatrix m(code.dimension() + 1, code.length());
  m.topRows(code.dimension()) = code.generators();
  m.row(code.dimension()) = v.entries().transpose();
  return LinearCode(m, code.modulus());
}

namespace {

// Digit i (most significant first) of point j in base d with m digits.
int point_digit(long long j, int i, int d, int m) {
  for (int s = m - 1; s > i; --s) j /= d;
  return static_cast<int>(j % d);
}

}  // namespace

GFVector rm_codeword(int d, int m, const std::vector<int>& ubar, int c,
                     bool shortened) {
  require_prime(d);
  if (static_cast<int>(ubar.size()) != m) {
    throw DimensionMismatch("ubar must have m entries");
  }
  const long long points = ipow(d, m);
  const long long first = shortened ? 1 : 0;
  IntVector w(points - first);
  for (long long j = first; j < points; ++j) {
    long long s = shortened ? 0 : c;
    for (int i = 0; i < m; ++i) s += static_cast<long long>(ubar[i]) * point_digit(j, i, d, m);
    w[j - first] = mod_reduce(s, d);
  }
  return GFVector(w, d);
}

LinearCode rm_code(int d, int m, bool shortened) {
  require_prime(d);
  if (m < 1) throw std::invalid_argument("rm_code needs m >= 1");
  const long long points = ipow(d, m);
  const long long first = shortened ? 1 : 0;
  const int rows = shortened ? m : m + 1;
  IntMatrix g(rows, points - first);
  for (long long j = first; j < points; ++j) {
    for (int i = 0; i < m; ++i) g(i, j - first) = point_digit(j, i, d, m);
    if (!shortened) g(m, j) = 1;
  }
  return LinearCode(g, d);
}

std::vector<GFVector> span_enumerate(const LinearCode& code,
                                     std::uint64_t cutoff) {
  std::vector<GFVector> out;
  for_each_codeword(
      code, [&](const IntVector& w) { out.emplace_back(w, code.modulus()); },
      cutoff);
  return out;
}

CanonicalForm canonical_generator_form(const LinearCode& code) {
  const int n = code.length();
  const int k = code.dimension();
  CanonicalForm cf;
  const auto& piv = code.pivots();
  bool leading = true;
  for (int i = 0; i < k; ++i) leading = leading && piv[i] == i;
  if (leading) {
    cf.permutation.resize(n);
    std::iota(cf.permutation.begin(), cf.permutation.end(), 0);
  } else {
    std::vector<bool> is_pivot(n, false);
    for (int p : piv) is_pivot[p] = true;
    cf.permutation.assign(piv.begin(), piv.end());
    for (int j = 0; j < n; ++j) {
      if (!is_pivot[j]) cf.permutation.push_back(j);
    }
  }
  cf.matrix.resize(k, n);
  for (int j = 0; j < n; ++j) {
    cf.matrix.col(j) = code.generators().col(cf.permutation[j]);
  }
  return cf;
}

std::optional<int> coset_min_weight(const LinearCode& ambient,
                                    const LinearCode& excluded,
                                    int max_weight) {
  const int n = ambient.length();
  const int d = ambient.modulus();
  max_weight = std::min(max_weight, n);
  IntVector v = IntVector::Zero(n);
  std::vector<int> pos;
  for (int w = 1; w <= max_weight; ++w) {
    pos.resize(w);
    std::iota(pos.begin(), pos.end(), 0);
    while (true) {
      // Every nonzero value assignment on the chosen support.
      std::vector<int> val(w, 1);
      while (true) {
        v.setZero();
        for (int i = 0; i < w; ++i) v[pos[i]] = val[i];
        if (ambient.contains(v) && !excluded.contains(v)) return w;
        int i = w - 1;
        while (i >= 0 && val[i] == d - 1) val[i--] = 1;
        if (i < 0) break;
        ++val[i];
      }
      int i = w - 1;
      while (i >= 0 && pos[i] == n - w + i) --i;
      if (i < 0) break;
      ++pos[i];
      for (int j = i + 1; j < w; ++j) pos[j] = pos[j - 1] + 1;
    }
  }
  return std::nullopt;
}

std::string serialize(const LinearCode& code) {
  std::ostringstream os;
  os << "d=" << code.modulus() << " n=" << code.length() << '\n';
  for (int i = 0; i < code.dimension(); ++i) {
    for (int j = 0; j < code.length(); ++j) {
      os << (j ? " " : "") << code.generators()(i, j);
    }
    os << '\n';
  }
  return os.str();
}

LinearCode parse_linear_code(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  if (!std::getline(is, line)) throw ParseError("missing code header");
  int d = 0, n = 0;
  {
    std::istringstream hs(line);
    std::string a, b;
    hs >> a >> b;
    if (a.rfind("d=", 0) != 0 || b.rfind("n=", 0) != 0) {
      throw ParseError("code header must read \"d=<d> n=<n>\"");
    }
    try {
      d = std::stoi(a.substr(2));
      n = std::stoi(b.substr(2));
    } catch (const std::exception&) {
      throw ParseError("malformed code header: " + line);
    }
  }
  if (!is_prime(d) || n < 0) throw ParseError("invalid code header: " + line);
  std::vector<IntVector> rows;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    IntVector r(n);
    for (int j = 0; j < n; ++j) {
      if (!(ls >> r[j]) || r[j] < 0 || r[j] >= d) {
        throw ParseError("bad generator row: " + line);
      }
    }
    std::string extra;
    if (ls >> extra) throw ParseError("generator row too long: " + line);
    rows.push_back(r);
  }
  if (rows.empty()) return LinearCode(n, d);
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  }
  LinearCode code(m, d);
  if (code.dimension() != static_cast<int>(rows.size())) {
    throw ParseError("generator rows are linearly dependent");
  }
  return code;
}

}  // namespace qudit_magic
