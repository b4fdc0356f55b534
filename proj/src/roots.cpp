#include "rigidroots/roots.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace rigid {

std::string Root::str() const { return "[" + a.str() + "," + b.str() + "]"; }

std::ostream& operator<<(std::ostream& os, const Root& r) { return os << r.str(); }

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
  auto bad = [&] { return std::invalid_argument("malformed root '" + std::string(whole) + "'"); };
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw bad();
  std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
  if (i == s.size()) throw bad();
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw bad();
  return Integer(std::string(s));
}

}  // namespace

Root parse_root(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (!s.empty() && (s.front() == '[' || s.front() == '(')) {
    const char close = s.front() == '[' ? ']' : ')';
    if (s.back() != close) throw std::invalid_argument("malformed root '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
  }
  const auto comma = s.find(',');
  if (comma == std::string_view::npos || s.find(',', comma + 1) != std::string_view::npos)
    throw std::invalid_argument("malformed root '" + std::string(text) + "'");
  return {parse_integer(s.substr(0, comma), text), parse_integer(s.substr(comma + 1), text)};
}

std::string_view to_string(RootClass c) {
  switch (c) {
    case RootClass::RealPositive: return "real";
    case RootClass::ImaginaryPositive: return "imaginary";
    case RootClass::NotRoot: return "not-a-root";
    case RootClass::NotReduced: return "not-reduced";
  }
  return "?";
}

void require_rank(const Integer& m) {
  if (m < 2) throw std::domain_error("m must be >= 2, got " + m.str());
}

Integer quadratic_form(const Integer& m, const Root& r) { return r.a * r.a + r.b * r.b - m * r.a * r.b; }

bool is_root(const Integer& m, const Root& r) {
  require_rank(m);
  return quadratic_form(m, r) <= 1;
}

bool is_reduced(const Root& r) { return r.a != 0 && r.b != 0 && gcd(r.a, r.b) == 1; }

Integer fib(const Integer& m, int n) {
  if (n < 0) throw std::domain_error("fib: n must be >= 0");
  Integer prev = 0, cur = 1;
  if (n == 0) return prev;
  for (int i = 1; i < n; ++i) {
    Integer next = m * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

int real_root_index(const Integer& m, const Root& r) {
  require_rank(m);
  if (r.a <= r.b || r.b <= 0) return 0;
  // F is strictly increasing for m >= 2, so the scan stops once F_n > a.
  Integer prev = 0, cur = 1;  // F_{n-1}, F_n with n = 1
  for (int n = 1; cur <= r.a; ++n) {
    if (cur == r.a && prev == r.b) return n;
    Integer next = m * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return 0;
}

RootClass classify(const Integer& m, const Root& r) {
  if (!is_root(m, r)) return RootClass::NotRoot;
  if (!is_reduced(r) || r.a < 0 || r.b < 0) return RootClass::NotReduced;
  if (real_root_index(m, r) != 0 || real_root_index(m, r.swapped()) != 0) return RootClass::RealPositive;
  return RootClass::ImaginaryPositive;
}

Root weyl_sigma1(const Integer& m, const Root& r) { return {-r.a + m * r.b, r.b}; }

Root weyl_sigma2(const Integer& m, const Root& r) { return {r.a, -r.b + m * r.a}; }

Root orbit_representative(const Integer& m, const Root& r) {
  if (classify(m, r) != RootClass::ImaginaryPositive)
    throw std::domain_error("orbit_representative: " + r.str() + " is not an imaginary positive root");
  Root cur = r;
  // Each applied reflection strictly lowers a + b; positive imaginary roots
  // stay positive, so the descent ends in the chamber.
  for (;;) {
    if (2 * cur.a > m * cur.b)
      cur = weyl_sigma1(m, cur);
    else if (2 * cur.b > m * cur.a)
      cur = weyl_sigma2(m, cur);
    else
      return cur;
  }
}

std::vector<Root> enumerate_reduced(const Integer& m, int max_sum) {
  require_rank(m);
  std::vector<Root> out;
  for (int a = 1; a < max_sum; ++a) {
    for (int b = 1; b <= a && a + b <= max_sum; ++b) {
      Root r{a, b};
      if (is_reduced(r) && is_root(m, r)) out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<Root> enumerate_reduced_all(const Integer& m, int max_sum) {
  std::vector<Root> out = enumerate_reduced(m, max_sum);
  const std::size_t n = out.size();
  for (std::size_t i = 0; i < n; ++i)
    if (out[i].a != out[i].b) out.push_back(out[i].swapped());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rigid
