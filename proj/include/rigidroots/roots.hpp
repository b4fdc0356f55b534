#pragma once

// Root lattice of the rank 2 Kac-Moody algebra H(m) with Cartan matrix
// [[2,-m],[-m,2]]. An element is written [a,b] = a*[1,0] + b*[0,1].

#include "rigidroots/arith.hpp"

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace rigid {

struct Root {
  Integer a;
  Integer b;

  Root() = default;
  Root(Integer a_, Integer b_) : a(std::move(a_)), b(std::move(b_)) {}

  friend bool operator==(const Root&, const Root&) = default;
  friend bool operator<(const Root& x, const Root& y) {
    return x.a < y.a || (x.a == y.a && x.b < y.b);
  }

  /// [b,a], the image under the 1 <-> 3 symmetry of W(m).
  Root swapped() const { return {b, a}; }
  std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const Root& r);

/// Parses "a,b" with optional surrounding brackets, e.g. "[5,3]".
Root parse_root(std::string_view text);

enum class RootClass { RealPositive, ImaginaryPositive, NotRoot, NotReduced };

std::string_view to_string(RootClass c);

/// Throws std::domain_error unless m >= 2.
void require_rank(const Integer& m);

/// The quadratic form a^2 + b^2 - m*a*b, invariant under the Weyl group.
Integer quadratic_form(const Integer& m, const Root& r);

/// [a,b] is a root iff a^2 + b^2 - m*a*b <= 1.
bool is_root(const Integer& m, const Root& r);

/// gcd(a,b) = 1 and ab != 0.
bool is_reduced(const Root& r);

/// F_0 = 0, F_1 = 1, F_n = m F_{n-1} - F_{n-2}.
Integer fib(const Integer& m, int n);

/// Index n >= 2 with r = [F_n, F_{n-1}] when r is a real root with a > b;
/// 0 otherwise. Found by generating F_n until it exceeds max(a,b).
int real_root_index(const Integer& m, const Root& r);

RootClass classify(const Integer& m, const Root& r);

/// sigma_1[a,b] = [-a + m b, b].
Root weyl_sigma1(const Integer& m, const Root& r);
/// sigma_2[a,b] = [a, -b + m a].
Root weyl_sigma2(const Integer& m, const Root& r);

/// Representative of the Weyl orbit of an imaginary positive root inside the
/// fundamental chamber 2a <= m b, 2b <= m a. When the orbit meets the region
/// 2a/m <= b < a the result lies in it.
Root orbit_representative(const Integer& m, const Root& r);

/// Reduced positive roots with a >= b >= 1 and a + b <= max_sum, sorted.
std::vector<Root> enumerate_reduced(const Integer& m, int max_sum);

/// Same set extended by the mirrored roots [b,a] (a != b), sorted.
std::vector<Root> enumerate_reduced_all(const Integer& m, int max_sum);

}  // namespace rigid
