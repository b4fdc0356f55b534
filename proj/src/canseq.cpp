#include "rigidroots/canseq.hpp"

#include <stdexcept>
#include <string>

namespace rigid {

std::string_view to_string(SeqType t) {
  switch (t) {
    case SeqType::Plus: return "+";
    case SeqType::Minus: return "-";
    case SeqType::Equal: return "=";
    case SeqType::Zero: return "0";
  }
  return "?";
}

Sequence first_sequence(const Root& r) {
  if (r.b < 1 || r.a < r.b) throw std::domain_error("first_sequence: need a >= b >= 1, got " + r.str());
  if (gcd(r.a, r.b) != 1) throw std::domain_error("first_sequence: " + r.str() + " is not reduced");
  const long long a = to_i64(r.a);
  const long long b = to_i64(r.b);
  auto ceil_div = [](long long p, long long q) { return (p + q - 1) / q; };  // p >= 0, q > 0
  Sequence seq;
  seq.reserve(static_cast<std::size_t>(b));
  for (long long i = 1; i <= b; ++i) seq.push_back(ceil_div(a * i, b) - ceil_div(a * (i - 1), b));
  return seq;
}

SeqType classify_type(const Sequence& seq, long long N) {
  if (seq.empty()) throw std::domain_error("classify_type: empty sequence");
  if (N < 1) throw std::domain_error("classify_type: N must be positive");
  for (long long v : seq)
    if (v != N && v != N + 1)
      throw std::domain_error("classify_type: entry " + std::to_string(v) + " outside {N, N+1} for N = " +
                              std::to_string(N));
  if (seq.size() == 1) return SeqType::Zero;
  bool low_pair = false, high_pair = false, equal_pair = false;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (seq[i] == seq[i + 1]) {
      equal_pair = true;
      (seq[i] == N ? low_pair : high_pair) = true;
    }
  }
  if (!equal_pair) return SeqType::Equal;
  if (!low_pair) return SeqType::Plus;
  if (!high_pair) return SeqType::Minus;
  throw std::domain_error("classify_type: sequence has both (N,N) and (N+1,N+1) neighbours");
}

Sequence next_sequence(const CanonicalData& prev) {
  if (prev.ty != SeqType::Plus && prev.ty != SeqType::Minus)
    throw std::domain_error("next_sequence: recursion stops at type " + std::string(to_string(prev.ty)));
  const long long counted = prev.ty == SeqType::Plus ? prev.N + 1 : prev.N;
  Sequence runs;
  long long run = 0;
  std::size_t separators = 0;
  for (long long v : prev.seq) {
    if (v == counted) {
      ++run;
    } else {
      ++separators;
      if (run > 0) runs.push_back(run);
      run = 0;
    }
  }
  if (run > 0) runs.push_back(run);
  if (runs.size() != separators)
    throw std::domain_error("next_sequence: run count does not match the number of separating letters");
  return runs;
}

NRho next_N_rho(const Rational& rho_prev) {
  if (rho_prev <= 0 || rho_prev >= 1) throw std::domain_error("next_N_rho: need 0 < rho < 1");
  const Rational half(1, 2);
  const Rational value = rho_prev >= half ? rho_prev / (1 - rho_prev) : (1 - rho_prev) / rho_prev;
  const Integer n = floor_of(value);
  return {to_i64(n), value - Rational(n)};
}

namespace {

SeqType type_from_rho(const Rational& rho) {
  const Rational half(1, 2);
  if (rho == 0) return SeqType::Zero;
  if (rho == half) return SeqType::Equal;
  return rho > half ? SeqType::Plus : SeqType::Minus;
}

}  // namespace

std::vector<CanonicalData> canonical_chain(const Root& r) {
  std::vector<CanonicalData> chain;
  CanonicalData cur;
  cur.seq = first_sequence(r);
  const Rational ratio(r.a, r.b);
  cur.N = to_i64(floor_of(ratio));
  cur.rho = ratio - Rational(cur.N);
  cur.ty = classify_type(cur.seq, cur.N);
  for (;;) {
    if (cur.ty != type_from_rho(cur.rho))
      throw std::logic_error("canonical_chain: type of c_" + std::to_string(chain.size() + 1) + " disagrees with rho for " +
                             r.str());
    chain.push_back(cur);
    if (cur.ty == SeqType::Equal || cur.ty == SeqType::Zero) return chain;
    CanonicalData next;
    next.seq = next_sequence(cur);
    const NRho nr = next_N_rho(cur.rho);
    next.N = nr.N;
    next.rho = nr.rho;
    next.ty = classify_type(next.seq, next.N);
    cur = std::move(next);
  }
}

std::vector<CanonicalData> all_canonical_data(const Integer& m, const Root& r) {
  if (!is_reduced(r) || r.b < 1 || r.a < r.b)
    throw std::domain_error("all_canonical_data: need a reduced positive root with a >= b, got " + r.str());
  if (!is_root(m, r)) throw std::domain_error("all_canonical_data: " + r.str() + " is not a root for m = " + m.str());
  if (r.b == 1 && r.a == m)
    throw std::domain_error("all_canonical_data: a/b = m excluded ([m,1] is the real root [F_2,F_1])");
  return canonical_chain(r);
}

std::vector<Rational> gamma_sequence(const Integer& m, int count) {
  std::vector<Rational> g;
  if (count <= 0) return g;
  g.emplace_back(0);
  if (count > 1) g.push_back(Rational(m) - Rational(1, 2));
  while (static_cast<int>(g.size()) < count) g.push_back(Rational(m) - 1 / g.back());
  return g;
}

LevelInfo level(const Integer& m, const Root& r) {
  if (r.a < r.b || classify(m, r) != RootClass::ImaginaryPositive)
    throw std::domain_error("level: need an imaginary reduced positive root with a >= b, got " + r.str());
  const Rational ratio(r.a, r.b);
  LevelInfo info;
  info.gammas = gamma_sequence(m, 2);
  // a/b < gamma for imaginary roots and gamma_n -> gamma, so this terminates.
  while (!(ratio <= info.gammas.back())) info.gammas.push_back(Rational(m) - 1 / info.gammas.back());
  info.level = static_cast<int>(info.gammas.size()) - 1;
  return info;
}

Sequence expand(long long N, SeqType ty, const Sequence& next, bool starts_high) {
  if (ty != SeqType::Plus && ty != SeqType::Minus)
    throw std::domain_error("expand: type must be + or -");
  if (N < 1) throw std::domain_error("expand: N must be positive");
  if (next.empty()) throw std::domain_error("expand: empty run sequence");
  const long long counted = ty == SeqType::Plus ? N + 1 : N;
  const long long separator = ty == SeqType::Plus ? N : N + 1;
  // The sequence starts with N+1; that letter is the run letter for type +
  // and the separator for type -.
  const bool run_first = starts_high == (counted == N + 1);
  Sequence out;
  for (long long run : next) {
    if (run < 1) throw std::domain_error("expand: run lengths must be positive");
    if (!run_first) out.push_back(separator);
    out.insert(out.end(), static_cast<std::size_t>(run), counted);
    if (run_first) out.push_back(separator);
  }
  return out;
}

bool starts_high(const std::vector<CanonicalData>& chain, std::size_t k) {
  if (k >= chain.size()) throw std::out_of_range("starts_high: index past the end of the chain");
  bool high = true;
  for (std::size_t i = 0; i < k; ++i) high = high != (chain[i].ty == SeqType::Minus);
  return high;
}

Root reconstruct_root(const Sequence& c1) {
  if (c1.empty()) throw std::domain_error("reconstruct_root: empty sequence");
  Integer sum = 0;
  for (long long v : c1) sum += v;
  return {sum, Integer(c1.size())};
}

Sequence closed_form_sequence(const Rational& rho_prev, SeqType prev_ty, const Rational& rho_n) {
  const Integer d = D(rho_n);
  Sequence out;
  if (prev_ty == SeqType::Plus) {
    const Rational step = rho_prev / (1 - rho_prev);
    for (Integer i = 1; i <= d; ++i) out.push_back(to_i64(ceil_of(step * i) - ceil_of(step * (i - 1))));
  } else if (prev_ty == SeqType::Minus) {
    const Rational step = (1 - rho_prev) / rho_prev;
    for (Integer i = 1; i <= d; ++i) out.push_back(to_i64(floor_of(step * i) - floor_of(step * (i - 1))));
  } else {
    throw std::domain_error("closed_form_sequence: predecessor type must be + or -");
  }
  return out;
}

}  // namespace rigid
