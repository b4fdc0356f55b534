#include "rigidroots/words.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace rigid {

bool is_word(std::string_view w) {
  return std::all_of(w.begin(), w.end(), [](char c) { return c >= '1' && c <= '3'; });
}

void require_word(std::string_view w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] < '1' || w[i] > '3')
      throw std::invalid_argument("bad letter '" + std::string(1, w[i]) + "' at position " + std::to_string(i) +
                                  " (words use 1, 2, 3)");
}

std::string display(std::string_view w) { return w.empty() ? std::string("e") : std::string(w); }

Word parse_word(std::string_view text) {
  if (text == "e") return {};
  require_word(text);
  return Word(text);
}

Word power(std::string_view w, long long n) {
  if (n < 0) throw std::domain_error("power: negative exponent");
  Word out;
  out.reserve(w.size() * static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) out += w;
  return out;
}

Word reversed(std::string_view w) { return Word(w.rbegin(), w.rend()); }

bool is_palindrome(std::string_view w) { return std::equal(w.begin(), w.begin() + w.size() / 2, w.rbegin()); }

Word swap13(std::string_view w) {
  Word out(w);
  for (char& c : out) c = c == '1' ? '3' : c == '3' ? '1' : c;
  return out;
}

Word free_reduce(std::string_view w) {
  Word out;
  out.reserve(w.size());
  for (char c : w) {
    if (!out.empty() && out.back() == c)
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

Word dyck_word(const Root& r) {
  Word out;
  for (long long n : first_sequence(r)) {
    out += power("23", n);
    out += "21";
  }
  return out;
}

Word s_of_root(const Root& r) {
  if (!is_reduced(r) || r.a < 0 || r.b < 0) throw std::domain_error("s_of_root: " + r.str() + " is not reduced positive");
  if (r.a < r.b) return swap13(s_of_root(r.swapped()));
  return free_reduce("32" + dyck_word(r) + "1");
}

std::vector<Crossing> crossings(const Root& r) {
  if (!is_reduced(r) || r.a < 0 || r.b < 0)
    throw std::domain_error("crossings: " + r.str() + " is not reduced positive");
  const long long a = to_i64(r.a);
  const long long b = to_i64(r.b);
  std::vector<Crossing> events;
  for (long long k = 1; k < a; ++k) events.push_back({k, a, '3'});
  for (long long k = 1; k < b; ++k) events.push_back({k, b, '1'});
  for (long long k = 1; k < a + b; ++k) events.push_back({k, a + b, '2'});
  std::sort(events.begin(), events.end(), [](const Crossing& x, const Crossing& y) {
    return static_cast<__int128>(x.k) * y.n < static_cast<__int128>(y.k) * x.n;
  });
  for (std::size_t i = 1; i < events.size(); ++i) {
    // gcd(a,b) = 1 keeps every interior crossing on a single line.
    if (static_cast<__int128>(events[i - 1].k) * events[i].n == static_cast<__int128>(events[i].k) * events[i - 1].n)
      throw std::logic_error("crossings: two lines crossed at the same point of " + r.str());
  }
  return events;
}

Word crossing_word(const Root& r) {
  Word out;
  for (const Crossing& c : crossings(r)) out.push_back(c.label);
  return out;
}

Word real_root_word(const Integer&, int n) {
  if (n < 2) throw std::domain_error("real_root_word: n must be >= 2");
  if (n == 2) return "21";
  if (n % 2 == 1) {
    const long long e = (n - 3) / 2;
    return "1" + power("321", e) + "23" + power("123", e) + "1";
  }
  const long long e = (n - 4) / 2;
  return "1" + power("321", e) + "3123" + power("123", e) + "1";
}

std::pair<Word, Word> hk_vk(int k) {
  if (k < 1) throw std::domain_error("hk_vk: k must be >= 1");
  if (k == 1) return {"23", "21"};
  if (k == 2) return {"21", "31"};
  if (k % 2 == 1) {
    const long long l = (k - 1) / 2;
    const Word pre = "1" + power("321", l - 1);
    const Word post = power("123", l - 1) + "1";
    return {pre + "23" + post, pre + "2123" + post};
  }
  const long long l = (k - 2) / 2;
  const Word pre = "13" + power("213", l - 1);
  const Word post = power("312", l - 1) + "31";
  return {pre + "12" + post, pre + "2312" + post};
}

namespace {

CanonicalData chain_entry(const Integer& m, const Root& r, int k, int min_k, const char* who) {
  const LevelInfo info = level(m, r);
  if (k < min_k || k > info.level)
    throw std::domain_error(std::string(who) + ": k = " + std::to_string(k) + " outside [" + std::to_string(min_k) +
                            ", " + std::to_string(info.level) + "] for " + r.str());
  std::vector<CanonicalData> chain = all_canonical_data(m, r);
  if (static_cast<int>(chain.size()) < k)
    throw std::logic_error(std::string(who) + ": chain of " + r.str() + " shorter than its level");
  return std::move(chain[static_cast<std::size_t>(k - 1)]);
}

}  // namespace

Word word_via_level(const Integer& m, const Root& r, int k) {
  const CanonicalData ck = chain_entry(m, r, k, 1, "word_via_level");
  const auto [h, v] = hk_vk(k);
  Word out;
  for (long long n : ck.seq) {
    out += power(h, n);
    out += v;
  }
  return out;
}

Word word_conjugated_level(const Integer& m, const Root& r, int k) {
  const CanonicalData ck = chain_entry(m, r, k, 2, "word_conjugated_level");
  const bool even = k % 2 == 0;
  const long long l = even ? (k - 2) / 2 : (k - 1) / 2;
  Word out = power("132", l);
  for (long long n : ck.seq) {
    out += even ? power("21", n) + "31" : power("23", n + 1) + "21";
  }
  out += power("231", l);
  return out;
}

ConjugatedRoot conjugated_root(const Integer& m, const Root& r, int k) {
  const CanonicalData ck = chain_entry(m, r, k, 2, "conjugated_root");
  const int L = level(m, r).level;
  ConjugatedRoot out;
  if (k % 2 == 1) {
    Sequence shifted = ck.seq;
    for (long long& v : shifted) ++v;
    out.l = (k - 1) / 2;
    out.root = reconstruct_root(shifted);
    out.expected_level = L - k + 1;
  } else {
    out.l = (k - 2) / 2;
    out.root = reconstruct_root(expand(to_i64(m) - 1, SeqType::Plus, ck.seq));
    out.expected_level = L - k + 2;
  }
  return out;
}

}  // namespace rigid
