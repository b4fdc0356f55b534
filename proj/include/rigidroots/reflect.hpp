#pragma once

// The geometric representation of W(m) on span{alpha_1, alpha_2, alpha_3}
// with x = 2 cos(pi/m):
//
//   s1 = [-1 x 2; 0 1 0; 0 0 1],  s2 = [1 0 0; x -1 x; 0 0 1],
//   s3 = [1 0 0; 0 1 0; 2 x -1].
//
// Identities are checked over Z[x]; inequalities are evaluated numerically in
// 50-digit binary floating point.

#include "rigidroots/arith.hpp"
#include "rigidroots/roots.hpp"
#include "rigidroots/words.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <array>
#include <string>
#include <vector>

namespace rigid {

using Real = boost::multiprecision::cpp_bin_float_50;

class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(long long c);  // NOLINT: constants convert implicitly
  explicit IntPolynomial(std::vector<Integer> coeffs);

  static IntPolynomial x();

  const std::vector<Integer>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Integer coeff(int k) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator-(const IntPolynomial& a);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  double eval(double x) const;
  Real eval(const Real& x) const;

  std::string str() const;

 private:
  void trim();
  std::vector<Integer> c_;  // ascending powers of x
};

using PolyMatrix = std::array<std::array<IntPolynomial, 3>, 3>;

PolyMatrix poly_identity();
PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

/// Matrix of s_i, i in {1,2,3}.
PolyMatrix reflection_matrix(int i);

/// Product of the reflection matrices of the letters of w, left to right.
PolyMatrix word_matrix(std::string_view w);

/// f_n and g_n from the recurrences g_{n+1} = x f_n - g_n, f_{n+1} = x g_{n+1}
/// - f_n with f_0 = 1, g_0 = 0.
IntPolynomial cheb_f_recurrence(int n);
IntPolynomial cheb_g_recurrence(int n);

/// f_n = sum_k (-1)^{n-k} C(n+k, n-k) x^{2k} and g_n = x U_{n-1}(x^2/2 - 1).
IntPolynomial cheb_f_closed(int n);
IntPolynomial cheb_g_closed(int n);

/// Both routes; throws std::logic_error if they disagree.
IntPolynomial cheb_f(int n);
IntPolynomial cheb_g(int n);

/// (s2 s3)^n s2 s1.
PolyMatrix tau_matrix(int n);

/// A^n for A = [x^2-1, -x; x, -1].
std::array<std::array<IntPolynomial, 2>, 2> a_power(int n);

struct PolyIdentity {
  std::string name;
  IntPolynomial lhs;
  IntPolynomial rhs;

  bool holds() const { return lhs == rhs; }
};

/// The recurrence identities linking f_n, g_n, f_{n-1}, g_{n+1} and the
/// A^n block form, for one n >= 1.
std::vector<PolyIdentity> chebyshev_identities(int n);

/// Closed forms of the third row of tau_matrix(n), n >= 2, in both variants,
/// with identities carrying a 1/x multiplied through by x. h_k = 3f_k +
/// f_{k-1} with f_{-1} = -3.
std::vector<PolyIdentity> tau_identities(int n);

/// 2 cos(pi / q) in high precision.
Real two_cos_pi_over(const Real& q);

/// max |f_n| over 2 cos(k pi/(2n+1)), k = 1..2n, and max |g_n| over
/// 2 cos(k pi/(2n)), k = 1..2n-1; both sets are the full zero sets.
struct ZeroResiduals {
  double f = 0;
  double g = 0;
};
ZeroResiduals zero_residuals(int n);

/// min over k = 1..ceil(m/2)-1 of f_k(2 cos(pi/m)); nonnegative, and zero
/// exactly at k = (m-1)/2 for odd m.
/// Returns +inf when the range is empty.
double min_f_below_half(const Integer& m);

/// max entry of |(s1 s2)^m - I| and |(s2 s3)^m - I| at x = 2 cos(pi/m).
double braid_residual(const Integer& m);

struct RootVector {
  Real p, q, r;  // coefficients of alpha_1, alpha_2, alpha_3
};

/// The root s_{i_1} ... s_{i_t} alpha_{i_{t+1}} of the reflection given by an
/// odd palindrome i_1 ... i_{2t+1}, at x = 2 cos(pi/m), signed so that its
/// largest coordinate in absolute value is positive.
RootVector root_vector(const Integer& m, std::string_view w);

struct DichotomyViolation {
  Root root;
  double p, q, r;
  std::string reason;
};

struct DichotomyReport {
  Integer m;
  int bound = 0;
  long long checked = 0;
  double tolerance = 1e-9;
  double min_relative_gap = 0;  // min |r - p| / max(1, |root|) over a != b
  std::vector<DichotomyViolation> violations;
};

/// For all reduced positive roots with a + b <= bound: the root of s([a,b])
/// has 0 <= p < r when a > b and p > r >= 0 when a < b. Comparisons use the
/// tolerance relative to max(1, largest coordinate). [1,1] is skipped.
DichotomyReport check_dichotomy(const Integer& m, int bound, double tolerance = 1e-9);

}  // namespace rigid
