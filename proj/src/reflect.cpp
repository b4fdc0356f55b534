#include "rigidroots/reflect.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace rigid {

IntPolynomial::IntPolynomial(long long c) {
  if (c != 0) c_.emplace_back(c);
}

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::x() { return IntPolynomial(std::vector<Integer>{0, 1}); }

Integer IntPolynomial::coeff(int k) const {
  return k >= 0 && k < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(k)] : Integer(0);
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPolynomial operator-(const IntPolynomial& a) { return IntPolynomial(0) - a; }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return IntPolynomial(std::move(out));
}

double IntPolynomial::eval(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->convert_to<double>();
  return acc;
}

Real IntPolynomial::eval(const Real& x) const {
  Real acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Real(*it);
  return acc;
}

std::string IntPolynomial::str() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Integer& c = c_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const Integer mag = abs(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (mag != 1 || k == 0) out << mag;
    if (k >= 1) out << "x";
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

PolyMatrix poly_identity() {
  PolyMatrix id;
  for (int i = 0; i < 3; ++i) id[i][i] = 1;
  return id;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

PolyMatrix reflection_matrix(int i) {
  const IntPolynomial x = IntPolynomial::x();
  PolyMatrix s = poly_identity();
  switch (i) {
    case 1: s[0] = {-1, x, 2}; break;
    case 2: s[1] = {x, -1, x}; break;
    case 3: s[2] = {2, x, -1}; break;
    default: throw std::domain_error("reflection_matrix: index must be 1, 2 or 3");
  }
  return s;
}

PolyMatrix word_matrix(std::string_view w) {
  require_word(w);
  PolyMatrix out = poly_identity();
  for (char c : w) out = out * reflection_matrix(c - '0');
  return out;
}

namespace {

void require_index(int n) {
  if (n < 0) throw std::domain_error("polynomial index must be >= 0");
}

// (f_n, g_n) by the recurrence.
std::pair<IntPolynomial, IntPolynomial> fg(int n) {
  const IntPolynomial x = IntPolynomial::x();
  IntPolynomial f = 1, g = 0;
  for (int i = 0; i < n; ++i) {
    g = x * f - g;
    f = x * g - f;
  }
  return {f, g};
}

Integer binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  Integer out = 1;
  for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

IntPolynomial cheb_f_recurrence(int n) {
  require_index(n);
  return fg(n).first;
}

IntPolynomial cheb_g_recurrence(int n) {
  require_index(n);
  return fg(n).second;
}

IntPolynomial cheb_f_closed(int n) {
  require_index(n);
  std::vector<Integer> c(static_cast<std::size_t>(2 * n + 1));
  for (int k = 0; k <= n; ++k) {
    const Integer b = binomial(n + k, n - k);
    c[static_cast<std::size_t>(2 * k)] = (n - k) % 2 == 0 ? b : Integer(-b);
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial cheb_g_closed(int n) {
  require_index(n);
  if (n == 0) return {};
  // U_k(t) with 2t = x^2 - 2: U_0 = 1, U_1 = 2t, U_{k+1} = 2t U_k - U_{k-1}.
  const IntPolynomial x = IntPolynomial::x();
  const IntPolynomial two_t = x * x - 2;
  IntPolynomial prev = 1, cur = two_t;
  if (n == 1) return x;
  for (int k = 1; k < n - 1; ++k) {
    IntPolynomial next = two_t * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return x * cur;
}

IntPolynomial cheb_f(int n) {
  IntPolynomial r = cheb_f_recurrence(n);
  if (r != cheb_f_closed(n)) throw std::logic_error("f_" + std::to_string(n) + ": closed form disagrees with recurrence");
  return r;
}

IntPolynomial cheb_g(int n) {
  IntPolynomial r = cheb_g_recurrence(n);
  if (r != cheb_g_closed(n)) throw std::logic_error("g_" + std::to_string(n) + ": closed form disagrees with recurrence");
  return r;
}

PolyMatrix tau_matrix(int n) {
  require_index(n);
  const PolyMatrix s23 = reflection_matrix(2) * reflection_matrix(3);
  PolyMatrix out = poly_identity();
  for (int i = 0; i < n; ++i) out = out * s23;
  return out * reflection_matrix(2) * reflection_matrix(1);
}

std::array<std::array<IntPolynomial, 2>, 2> a_power(int n) {
  require_index(n);
  const IntPolynomial x = IntPolynomial::x();
  const std::array<std::array<IntPolynomial, 2>, 2> a{{{x * x - 1, -x}, {x, -1}}};
  std::array<std::array<IntPolynomial, 2>, 2> out{{{1, 0}, {0, 1}}};
  for (int k = 0; k < n; ++k) {
    std::array<std::array<IntPolynomial, 2>, 2> next;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) next[i][j] = out[i][0] * a[0][j] + out[i][1] * a[1][j];
    out = std::move(next);
  }
  return out;
}

std::vector<PolyIdentity> chebyshev_identities(int n) {
  if (n < 1) throw std::domain_error("chebyshev_identities: n must be >= 1");
  const IntPolynomial x = IntPolynomial::x();
  const IntPolynomial f = cheb_f_recurrence(n), f1 = cheb_f_recurrence(n - 1);
  const IntPolynomial g = cheb_g_recurrence(n), g_next = cheb_g_recurrence(n + 1);
  const auto an = a_power(n);
  return {
      {"f_n closed form", cheb_f_closed(n), f},
      {"g_n closed form", cheb_g_closed(n), g},
      {"g_{n+1} = x f_n - g_n", g_next, x * f - g},
      {"g_{n+1} = (x^2-1) g_n - x f_{n-1}", g_next, (x * x - 1) * g - x * f1},
      {"f_n = x g_n - f_{n-1}", f, x * g - f1},
      {"x g_{n+1} = (x^2-1) f_n - f_{n-1}", x * g_next, (x * x - 1) * f - f1},
      {"A^n[1,1] = f_n", an[0][0], f},
      {"A^n[1,2] = -g_n", an[0][1], -g},
      {"A^n[2,1] = g_n", an[1][0], g},
      {"A^n[2,2] = -f_{n-1}", an[1][1], -f1},
  };
}

std::vector<PolyIdentity> tau_identities(int n) {
  if (n < 0) throw std::domain_error("tau_identities: n must be >= 0");
  const IntPolynomial x = IntPolynomial::x();
  const PolyMatrix t = tau_matrix(n);
  std::vector<PolyIdentity> out{
      {"tau_11 = -1", t[0][0], -1},
      {"tau_12 = x", t[0][1], x},
      {"tau_13 = 2", t[0][2], 2},
  };
  if (n == 0) {
    out.push_back({"tau_21 = -x", t[1][0], -x});
    out.push_back({"tau_22 = x^2 - 1", t[1][1], x * x - 1});
    out.push_back({"tau_23 = 3x", t[1][2], 3 * x});
    out.push_back({"tau_31 = 0", t[2][0], 0});
    out.push_back({"tau_32 = 0", t[2][1], 0});
    out.push_back({"tau_33 = 1", t[2][2], 1});
    return out;
  }
  if (n == 1) {
    out.push_back({"tau_31 = -x^2 - 2", t[2][0], -(x * x) - 2});
    out.push_back({"tau_32 = x^3 + x", t[2][1], x * x * x + x});
    out.push_back({"tau_33 = 3x^2 + 3", t[2][2], 3 * x * x + 3});
    return out;
  }
  auto f = [](int k) { return k == -1 ? IntPolynomial(-3) : cheb_f_recurrence(k); };
  auto g = [](int k) { return cheb_g_recurrence(k); };
  auto h = [&](int k) { return 3 * f(k) + f(k - 1); };
  auto hsum = [&](int upto) {
    IntPolynomial s;
    for (int k = 1; k <= upto; ++k) s += h(k);
    return s;
  };
  const IntPolynomial x2 = x * x;
  out.push_back({"tau_31 = -(x^2+2) f_{n-1} - 2 - sum_{k<=n-2} h_k", t[2][0], -(x2 + 2) * f(n - 1) - 2 - hsum(n - 2)});
  out.push_back({"tau_31 = -x g_n - 2 - sum_{k<=n-1} h_k", t[2][0], -x * g(n) - 2 - hsum(n - 1)});
  out.push_back({"x tau_32 = (x^4+x^2+1) f_{n-1} + f_{n-2} + 2x^2 + x^2 sum_{k<=n-2} h_k", x * t[2][1],
                 (x2 * x2 + x2 + 1) * f(n - 1) + f(n - 2) + 2 * x2 + x2 * hsum(n - 2)});
  out.push_back({"tau_32 = (x^2-1) g_n + 2x + x sum_{k<=n-1} h_k", t[2][1], (x2 - 1) * g(n) + 2 * x + x * hsum(n - 1)});
  out.push_back({"tau_33 = (3x^2+2) f_{n-1} + 5 f_{n-2} + 2 f_{n-3} + 4 + 2 sum_{k<=n-3} h_k", t[2][2],
                 (3 * x2 + 2) * f(n - 1) + 5 * f(n - 2) + 2 * f(n - 3) + 4 + 2 * hsum(n - 3)});
  out.push_back({"x tau_33 = 3x^2 g_n + 5 g_n + 7 g_{n-1} + 2 g_{n-2} + 4x + 2x sum_{k<=n-2} h_k", x * t[2][2],
                 3 * x2 * g(n) + 5 * g(n) + 7 * g(n - 1) + 2 * g(n - 2) + 4 * x + 2 * x * hsum(n - 2)});
  for (int k = 1; k <= n - 1; ++k)
    out.push_back({"x h_" + std::to_string(k) + " = 3 g_{k+1} + 4 g_k + g_{k-1}", x * h(k),
                   3 * g(k + 1) + 4 * g(k) + g(k - 1)});
  return out;
}

Real two_cos_pi_over(const Real& q) { return 2 * cos(boost::math::constants::pi<Real>() / q); }

ZeroResiduals zero_residuals(int n) {
  if (n < 1) throw std::domain_error("zero_residuals: n must be >= 1");
  const IntPolynomial f = cheb_f(n), g = cheb_g(n);
  const Real pi = boost::math::constants::pi<Real>();
  ZeroResiduals out;
  for (int k = 1; k <= 2 * n; ++k)
    out.f = std::max(out.f, static_cast<double>(abs(f.eval(Real(2 * cos(pi * k / (2 * n + 1)))))));
  for (int k = 1; k <= 2 * n - 1; ++k)
    out.g = std::max(out.g, static_cast<double>(abs(g.eval(Real(2 * cos(pi * k / (2 * n)))))));
  return out;
}

double min_f_below_half(const Integer& m) {
  require_rank(m);
  const long long mm = to_i64(m);
  const Real x = two_cos_pi_over(Real(m));
  double out = std::numeric_limits<double>::infinity();
  for (long long k = 1; k <= (mm + 1) / 2 - 1; ++k)
    out = std::min(out, static_cast<double>(cheb_f_recurrence(static_cast<int>(k)).eval(x)));
  return out;
}

namespace {

using RealMatrix = std::array<std::array<Real, 3>, 3>;

RealMatrix evaluate(const PolyMatrix& p, const Real& x) {
  RealMatrix out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = p[i][j].eval(x);
  return out;
}

RealMatrix multiply(const RealMatrix& a, const RealMatrix& b) {
  RealMatrix out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      out[i][j] = 0;
      for (int k = 0; k < 3; ++k) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

double identity_residual(const RealMatrix& base, long long e) {
  RealMatrix acc = base;
  for (long long i = 1; i < e; ++i) acc = multiply(acc, base);
  Real out = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out = std::max(out, Real(abs(acc[i][j] - (i == j ? 1 : 0))));
  return static_cast<double>(out);
}

}  // namespace

double braid_residual(const Integer& m) {
  require_rank(m);
  const Real x = two_cos_pi_over(Real(m));
  const long long e = to_i64(m);
  return std::max(identity_residual(evaluate(word_matrix("12"), x), e),
                  identity_residual(evaluate(word_matrix("23"), x), e));
}

RootVector root_vector(const Integer& m, std::string_view w) {
  require_rank(m);
  require_word(w);
  if (w.size() % 2 == 0 || !is_palindrome(w)) throw std::domain_error("root_vector: '" + std::string(w) + "' is not an odd palindrome");
  const Real x = two_cos_pi_over(Real(m));
  std::array<Real, 3> v{0, 0, 0};
  const std::size_t t = w.size() / 2;
  v[static_cast<std::size_t>(w[t] - '1')] = 1;
  for (std::size_t i = t; i-- > 0;) {
    switch (w[i]) {
      case '1': v[0] = -v[0] + x * v[1] + 2 * v[2]; break;
      case '2': v[1] = x * v[0] - v[1] + x * v[2]; break;
      case '3': v[2] = 2 * v[0] + x * v[1] - v[2]; break;
    }
  }
  const auto big = std::max_element(v.begin(), v.end(), [](const Real& a, const Real& b) { return abs(a) < abs(b); });
  if (*big < 0)
    for (Real& c : v) c = -c;
  return {v[0], v[1], v[2]};
}

DichotomyReport check_dichotomy(const Integer& m, int bound, double tolerance) {
  DichotomyReport rep;
  rep.m = m;
  rep.bound = bound;
  rep.tolerance = tolerance;
  bool have_gap = false;
  for (const Root& root : enumerate_reduced_all(m, bound)) {
    if (root.a == root.b) continue;
    const RootVector v = root_vector(m, s_of_root(root));
    ++rep.checked;
    const Real scale = std::max({Real(1), abs(v.p), abs(v.q), abs(v.r)});
    const Real tol = Real(tolerance) * scale;
    const Real gap = root.a > root.b ? v.r - v.p : v.p - v.r;
    const double rel = static_cast<double>(gap / scale);
    if (!have_gap || rel < rep.min_relative_gap) rep.min_relative_gap = rel;
    have_gap = true;
    std::string reason;
    if (v.p < -tol || v.q < -tol || v.r < -tol)
      reason = "negative coordinate";
    else if (gap <= tol)
      reason = root.a > root.b ? "p >= r with a > b" : "p <= r with a < b";
    if (!reason.empty())
      rep.violations.push_back({root, static_cast<double>(v.p), static_cast<double>(v.q), static_cast<double>(v.r), reason});
  }
  return rep;
}

}  // namespace rigid
