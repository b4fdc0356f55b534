#include "rigidroots/stdwords.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace rigid {

std::string_view to_string(StdForm f) {
  switch (f) {
    case StdForm::Real: return "real";
    case StdForm::Level1: return "level-1";
    case StdForm::Level1M3: return "level-1-m3";
    case StdForm::Even: return "even";
    case StdForm::EvenSmallM: return "even-small-m";
    case StdForm::Odd: return "odd";
    case StdForm::OddM3: return "odd-m3";
  }
  return "?";
}

std::pair<Word, Word> w_table(const Integer& m, long long N) {
  const long long mm = to_i64(m);
  const long long ell = mm / 2;
  if (mm < 3 || N < 0 || N > mm - 2)
    throw std::domain_error("w_table: N = " + std::to_string(N) + " outside [0, m-2] for m = " + m.str());
  if (N == mm - 2) return {"21", "31"};
  if (N <= ell - 3) return {power("23", N + 2) + "21", power("23", N + 1) + "21"};
  if (N == ell - 2) return {power("32", mm - ell - 1) + "31", power("23", ell - 1) + "21"};
  return {power("32", mm - N - 3) + "31", power("32", mm - N - 2) + "31"};
}

std::pair<Word, Word> v_table(const Integer& m, long long N_L) {
  const long long mm = to_i64(m);
  const long long ell = mm / 2;
  if (mm < 3 || N_L < 1 || N_L > mm - 2)
    throw std::domain_error("v_table: N_L = " + std::to_string(N_L) + " outside [1, m-2] for m = " + m.str());
  if (N_L <= ell - 2) return {power("12", N_L + 1) + "13", power("12", N_L) + "13"};
  if (N_L == ell - 1) return {power("21", mm - ell - 1) + "23", power("12", ell - 1) + "13"};
  return {power("21", mm - N_L - 2) + "23", power("21", mm - N_L - 1) + "23"};
}

PrefixWords prefix_words(int level) {
  if (level < 2) throw std::domain_error("prefix_words: level must be >= 2");
  PrefixWords p;
  const long long e = (level - 2) / 2;
  p.x = power("132", e) + "1";
  p.x_inv = "1" + power("231", e);
  if (level % 2 == 0) {
    if (level >= 4)
      p.y = power("132", (level - 4) / 2) + "13";
    else
      p.y_hat2 = true;
  }
  return p;
}

namespace {

// Concatenation with support for the 2^ marker.
class Builder {
 public:
  Builder& hat2() {
    pending_ = true;
    return *this;
  }
  Builder& operator<<(std::string_view w) {
    if (pending_ && !w.empty()) {
      pending_ = false;
      if (w.front() == '2')
        w.remove_prefix(1);
      else
        out_.push_back('2');
    }
    out_ += w;
    return *this;
  }
  Builder& y(const PrefixWords& p) { return p.y_hat2 ? hat2() : *this << p.y; }
  Word str() && {
    if (pending_) out_.push_back('2');
    return std::move(out_);
  }

 private:
  Word out_;
  bool pending_ = false;
};

[[noreturn]] void unreachable(const Root& r, const std::string& what) {
  throw std::logic_error("standard_word: no closed form for " + r.str() + " (" + what + ")");
}

const CanonicalData& at(const std::vector<CanonicalData>& chain, std::size_t k, const Root& r) {
  if (k >= chain.size()) unreachable(r, "canonical sequence c_" + std::to_string(k + 1) + " missing");
  return chain[k];
}

}  // namespace

StdCaseKey dispatch_case(const Integer& m, const Root& r) {
  if (m < 3) throw std::domain_error("standard words need m >= 3, got m = " + m.str());
  if (!is_reduced(r) || r.b < 1 || r.a < r.b)
    throw std::domain_error("dispatch_case: need a reduced positive root with a >= b, got " + r.str());
  const RootClass cls = classify(m, r);
  if (cls == RootClass::NotRoot) throw std::domain_error(r.str() + " is not a root for m = " + m.str());
  StdCaseKey key;
  key.m = m;
  if (cls == RootClass::RealPositive) {
    key.real_index = real_root_index(m, r);
    return key;
  }
  const std::vector<CanonicalData> chain = all_canonical_data(m, r);
  key.level = level(m, r).level;
  const CanonicalData& cl = at(chain, static_cast<std::size_t>(key.level - 1), r);
  key.ty = cl.ty;
  key.N_L = cl.N;
  const long long mm = to_i64(m);
  const int L = key.level;
  if (key.N_L == mm - 2 + (L == 1 ? 1 : 0) && key.ty == SeqType::Plus)
    unreachable(r, "N_L = m - 2 + [L = 1] with c_L of type +");
  if (L >= 2 && key.N_L == 1 && key.ty == SeqType::Zero) unreachable(r, "L >= 2, N_L = 1 with c_L of type 0");
  if (L == 1) {
    key.exceptional = mm == 3 && key.N_L == 2 && key.ty == SeqType::Minus;
    key.form = key.exceptional ? StdForm::Level1M3 : StdForm::Level1;
  } else if (L % 2 == 0) {
    key.exceptional = mm <= 5 && key.N_L == mm - 2;
    key.form = key.exceptional ? StdForm::EvenSmallM : StdForm::Even;
  } else {
    key.exceptional = mm == 3 && key.N_L == 1 && key.ty == SeqType::Minus;
    key.form = key.exceptional ? StdForm::OddM3 : StdForm::Odd;
  }
  return key;
}

Word standard_word(const Integer& m, const Root& r) {
  const StdCaseKey key = dispatch_case(m, r);
  if (key.form == StdForm::Real) return real_root_word(m, key.real_index);

  const std::vector<CanonicalData> chain = all_canonical_data(m, r);
  const int L = key.level;
  const std::size_t li = static_cast<std::size_t>(L);  // index of c_{L+1}
  const long long mm = to_i64(m);
  const long long ell = mm / 2;
  const long long NL = key.N_L;
  Builder b;

  // c_{L+1} and its entries; only read when c_L has type + or -.
  auto next = [&]() -> const Sequence& { return at(chain, li, r).seq; };

  switch (key.form) {
    case StdForm::Real:
      break;

    case StdForm::Level1: {
      const auto [w1, w2] = w_table(m, NL - 1);
      switch (key.ty) {
        case SeqType::Plus:
          for (long long a : next()) b << power(w1, a) << w2;
          break;
        case SeqType::Minus:
          for (long long a : next()) b << w1 << power(w2, a);
          break;
        case SeqType::Equal: b << w1 << w2; break;
        case SeqType::Zero: b << w2; break;
      }
      return std::move(b).str();
    }

    case StdForm::Level1M3: {
      const Word w1 = "21", w2 = "31", w3 = "3212", w4 = "3231", w5 = "231321", w6 = "3132132312";
      const CanonicalData& c2 = at(chain, 1, r);
      if (c2.N > 1) {
        b << w1;
        for (std::size_t i = 0; i + 1 < c2.seq.size(); ++i) b << power(w2, c2.seq[i] - 1) << w3;
        b << power(w2, c2.seq.back());
        return std::move(b).str();
      }
      if (c2.ty == SeqType::Equal) {
        b << w1 << w3 << w2 << w2;
        return std::move(b).str();
      }
      if (c2.ty == SeqType::Zero) unreachable(r, "m = 3, L = 1, N_2 = 1 with c_2 of type 0");
      const Sequence& c3 = at(chain, 2, r).seq;
      if (c2.ty == SeqType::Plus) {
        b << w1 << w3 << power(w2 + w3, c3[0] - 1);
        for (std::size_t i = 1; i < c3.size(); ++i) b << w6 << power(w2 + w3, c3[i] - 1);
        b << w2 << w2;
      } else {
        b << "21321" << power(w4, c3[0] - 1);
        for (std::size_t i = 1; i < c3.size(); ++i) b << w5 << power(w4, c3[i]);
        b << "23131";
      }
      return std::move(b).str();
    }

    case StdForm::Even: {
      const auto [v1, v2] = v_table(m, NL);
      const PrefixWords p = prefix_words(L);
      switch (key.ty) {
        case SeqType::Plus: {
          const Sequence& c = next();
          b.y(p) << v2 << power(v1, c[0] - 1) << v2;
          for (std::size_t i = 1; i < c.size(); ++i) b << power(v1, c[i]) << v2;
          break;
        }
        case SeqType::Minus: {
          const Sequence& c = next();
          b.y(p) << power(v2, c[0] + 1);
          for (std::size_t i = 1; i < c.size(); ++i) b << v1 << power(v2, c[i]);
          break;
        }
        case SeqType::Equal: b.y(p) << v2 << v2; break;
        case SeqType::Zero:
          if (NL <= ell)
            b.y(p) << power("12", NL - 1) << "13";
          else
            b << p.x << v2;
          break;
      }
      b << p.x_inv;
      return std::move(b).str();
    }

    case StdForm::EvenSmallM: {
      const PrefixWords p = prefix_words(L);
      const Word v3 = "31", v4 = "3231", v5 = "2321", v6 = "323231";
      const Word& head = mm == 3 ? v4 : v5;
      const Word& sep = mm == 3 ? v3 : mm == 4 ? v4 : v6;
      switch (key.ty) {
        case SeqType::Minus: {
          const Sequence& c = next();
          b << p.x << power(head, c[0]);
          for (std::size_t i = 1; i < c.size(); ++i) b << sep << power(head, c[i] - 1);
          b << "23" << p.x_inv;
          break;
        }
        case SeqType::Equal: b << p.x << head << "23" << p.x_inv; break;
        case SeqType::Zero:
          if (mm == 4)
            b.y(p) << "1213" << p.x_inv;
          else if (mm == 5)
            b << p.x << "2123" << p.x_inv;
          else
            unreachable(r, "m = 3, even L, c_L of type 0");
          break;
        case SeqType::Plus: unreachable(r, "c_L of type + with N_L = m - 2");
      }
      return std::move(b).str();
    }

    case StdForm::Odd: {
      const auto [w1, w2] = w_table(m, NL);
      const PrefixWords p = prefix_words(L);
      switch (key.ty) {
        case SeqType::Plus: {
          const Sequence& c = next();
          b << p.x << w2 << power(w1, c[0] - 1) << w2;
          for (std::size_t i = 1; i < c.size(); ++i) b << power(w1, c[i]) << w2;
          break;
        }
        case SeqType::Minus: {
          const Sequence& c = next();
          b << p.x << power(w2, c[0] + 1);
          for (std::size_t i = 1; i < c.size(); ++i) b << w1 << power(w2, c[i]);
          break;
        }
        case SeqType::Equal: b << p.x << w2 << w2; break;
        case SeqType::Zero:
          if (NL <= ell - 1)
            b << p.x << power("23", NL) << "21";
          else
            b << p.x << "32" << w2;
          break;
      }
      b << "23" << p.x_inv;
      return std::move(b).str();
    }

    case StdForm::OddM3: {
      const PrefixWords p = prefix_words(L);
      const Word u3 = "31", u4 = "3212", u5 = "1323", u6 = "123132", u7 = "123131";
      const CanonicalData& c1 = at(chain, li, r);
      b << p.x;
      if (c1.N != 1) {
        b << "31";
        for (std::size_t i = 0; i + 1 < c1.seq.size(); ++i) b << power(u3, c1.seq[i] - 1) << u4;
        b << power(u3, c1.seq.back());
      } else {
        b << "3132";
        if (c1.ty == SeqType::Minus) {
          const Sequence& c = at(chain, li + 1, r).seq;
          b << power(u5, c[0] - 1);
          for (std::size_t i = 1; i < c.size(); ++i) b << u6 << power(u5, c[i]);
        } else if (c1.ty == SeqType::Plus) {
          const Sequence& c = at(chain, li + 1, r).seq;
          for (std::size_t i = 0; i + 1 < c.size(); ++i) b << power(u6, c[i]) << u5;
          b << power(u6, c.back() - 1);
        } else if (c1.ty == SeqType::Zero) {
          unreachable(r, "m = 3, odd L, N_{L+1} = 1 with c_{L+1} of type 0");
        }
        b << u7;
      }
      b << "23" << p.x_inv;
      return std::move(b).str();
    }
  }
  unreachable(r, "unknown case");
}

namespace {

bool starts_with_any(std::string_view word, std::string_view prefix, std::initializer_list<std::string_view> tails) {
  if (word.substr(0, prefix.size()) != prefix) return false;
  const std::string_view rest = word.substr(prefix.size());
  for (std::string_view t : tails)
    if (rest.substr(0, t.size()) == t) return true;
  return false;
}

}  // namespace

bool has_level_prefix(int level, std::string_view word) {
  if (level < 1) throw std::domain_error("has_level_prefix: level must be >= 1");
  if (level == 1) return starts_with_any(word, "", {"2131", "2132", "2321", "2323", "31", "3231", "3232"});
  if (level == 2) return starts_with_any(word, "", {"12121", "12123", "12321", "13231", "21212", "21213"});
  const PrefixWords p = prefix_words(level);
  if (level % 2 == 1) return starts_with_any(word, p.x, {"2323", "31", "3231", "3232"});
  return starts_with_any(word, p.y, {"1212", "1213", "13", "2121", "2123"}) ||
         starts_with_any(word, p.x, {"2121", "2123", "2321", "3231"});
}

}  // namespace rigid
