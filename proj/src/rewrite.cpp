#include "rigidroots/rewrite.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace rigid {

bool deg_lex_less(std::string_view u, std::string_view v) {
  if (u.size() != v.size()) return u.size() < v.size();
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != v[i]) return u[i] > v[i];
  return false;
}

Rule orient(Word u, Word v) {
  if (u == v) throw std::invalid_argument("orient: trivial relation " + display(u) + " = " + display(v));
  if (deg_lex_less(u, v)) std::swap(u, v);
  return {std::move(u), std::move(v)};
}

std::string to_string(const Rule& r) { return display(r.lhs) + " -> " + display(r.rhs); }

std::string_view to_string(CompositionKind k) {
  return k == CompositionKind::Intersection ? "intersection" : "inclusion";
}

RewriteSystem::RewriteSystem(std::vector<Rule> rules) : rules_(std::move(rules)) {
  for (const Rule& r : rules_) {
    require_word(r.lhs);
    require_word(r.rhs);
    if (r.lhs.empty()) throw std::invalid_argument("rule with empty left-hand side");
    if (!deg_lex_less(r.rhs, r.lhs)) throw std::invalid_argument("rule " + to_string(r) + " is not decreasing");
  }
  std::sort(rules_.begin(), rules_.end(), [](const Rule& x, const Rule& y) { return deg_lex_less(x.lhs, y.lhs); });
  for (std::size_t i = 1; i < rules_.size(); ++i)
    if (rules_[i].lhs == rules_[i - 1].lhs)
      throw std::invalid_argument("two rules share the left-hand side " + rules_[i].lhs);
  trie_.emplace_back();
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    int node = 0;
    for (char c : rules_[i].lhs) {
      const int letter = c - '1';
      if (trie_[static_cast<std::size_t>(node)].next[letter] < 0) {
        trie_[static_cast<std::size_t>(node)].next[letter] = static_cast<int>(trie_.size());
        trie_.emplace_back();
      }
      node = trie_[static_cast<std::size_t>(node)].next[letter];
    }
    trie_[static_cast<std::size_t>(node)].rule = static_cast<int>(i);
    max_lhs_ = std::max(max_lhs_, rules_[i].lhs.size());
  }
}

template <class At>
int RewriteSystem::match(At at, std::size_t avail, bool shortest) const {
  int found = -1;
  int node = 0;
  for (std::size_t i = 0; i < avail; ++i) {
    node = trie_[static_cast<std::size_t>(node)].next[at(i) - '1'];
    if (node < 0) break;
    const int r = trie_[static_cast<std::size_t>(node)].rule;
    if (r >= 0) {
      found = r;
      if (shortest) break;
    }
  }
  return found;
}

Word RewriteSystem::normal_form(std::string_view w) const {
  require_word(w);
  if (rules_.empty()) return Word(w);
  // left holds the letters before the scan position; right holds the rest in
  // reverse, so its back is the letter at the scan position. No lhs starts
  // inside left.
  Word left;
  Word right(w.rbegin(), w.rend());
  left.reserve(w.size());
  while (!right.empty()) {
    const std::size_t n = right.size();
    const int idx = match([&](std::size_t i) { return right[n - 1 - i]; }, n, false);
    if (idx < 0) {
      left.push_back(right.back());
      right.pop_back();
      continue;
    }
    const Rule& rule = rules_[static_cast<std::size_t>(idx)];
    right.resize(n - rule.lhs.size());
    right.append(rule.rhs.rbegin(), rule.rhs.rend());
    // Only an lhs ending at or after the scan position can be new, and it
    // starts at most max_lhs_ - 1 letters back.
    for (std::size_t k = std::min(left.size(), max_lhs_ - 1); k > 0; --k) {
      right.push_back(left.back());
      left.pop_back();
    }
  }
  return left;
}

Word RewriteSystem::normal_form_rightmost(std::string_view w) const {
  require_word(w);
  Word cur(w);
  for (;;) {
    bool rewritten = false;
    for (std::size_t pos = cur.size(); pos-- > 0;) {
      const int idx = match([&](std::size_t i) { return cur[pos + i]; }, cur.size() - pos, true);
      if (idx >= 0) {
        const Rule& rule = rules_[static_cast<std::size_t>(idx)];
        cur.replace(pos, rule.lhs.size(), rule.rhs);
        rewritten = true;
        break;
      }
    }
    if (!rewritten) return cur;
  }
}

bool RewriteSystem::is_irreducible(std::string_view w) const {
  for (std::size_t pos = 0; pos < w.size(); ++pos)
    if (match([&](std::size_t i) { return w[pos + i]; }, w.size() - pos, true) >= 0) return false;
  return true;
}

bool RewriteSystem::is_interreduced() const {
  for (const Rule& p : rules_) {
    if (!is_irreducible(p.rhs)) return false;
    for (const Rule& q : rules_)
      if (&p != &q && p.lhs.find(q.lhs) != Word::npos) return false;
  }
  return true;
}

std::vector<CompositionReport> compositions(const Rule& p, const Rule& q, const RewriteSystem& ambient) {
  std::vector<CompositionReport> out;
  const std::size_t lp = p.lhs.size();
  const std::size_t lq = q.lhs.size();
  for (std::size_t k = 1; k < std::min(lp, lq); ++k) {
    if (p.lhs.compare(lp - k, k, q.lhs, 0, k) != 0) continue;
    const std::string_view tail = std::string_view(q.lhs).substr(k);
    const std::string_view head = std::string_view(p.lhs).substr(0, lp - k);
    out.push_back({CompositionKind::Intersection, p.lhs + Word(tail), ambient.normal_form(p.rhs + Word(tail)),
                   ambient.normal_form(Word(head) + q.rhs)});
  }
  if (lq < lp) {
    for (std::size_t j = p.lhs.find(q.lhs); j != Word::npos; j = p.lhs.find(q.lhs, j + 1)) {
      const Word replaced = p.lhs.substr(0, j) + q.rhs + p.lhs.substr(j + lq);
      out.push_back({CompositionKind::Inclusion, p.lhs, ambient.normal_form(p.rhs), ambient.normal_form(replaced)});
    }
  }
  return out;
}

std::vector<CompositionReport> nontrivial_compositions(const RewriteSystem& s) {
  std::vector<CompositionReport> out;
  for (const Rule& p : s.rules())
    for (const Rule& q : s.rules())
      for (CompositionReport& c : compositions(p, q, s))
        if (!c.trivial()) out.push_back(std::move(c));
  return out;
}

bool is_closed(const RewriteSystem& s) {
  for (const Rule& p : s.rules())
    for (const Rule& q : s.rules())
      for (const CompositionReport& c : compositions(p, q, s))
        if (!c.trivial()) return false;
  return true;
}

RewriteSystem interreduce(const std::vector<Rule>& rules) {
  std::vector<Rule> pending(rules.rbegin(), rules.rend());
  std::vector<Rule> current;
  while (!pending.empty()) {
    Rule r = std::move(pending.back());
    pending.pop_back();
    const RewriteSystem sys(current);
    Word l = sys.normal_form(r.lhs);
    Word rr = sys.normal_form(r.rhs);
    if (l == rr) continue;
    Rule n = orient(std::move(l), std::move(rr));
    // Rules whose lhs the new lhs divides go back on the worklist.
    for (auto it = current.begin(); it != current.end();) {
      if (it->lhs.find(n.lhs) != Word::npos) {
        pending.push_back(std::move(*it));
        it = current.erase(it);
      } else {
        ++it;
      }
    }
    current.push_back(std::move(n));
  }
  const RewriteSystem sys(current);
  for (Rule& r : current) r.rhs = sys.normal_form(r.rhs);
  return RewriteSystem(std::move(current));
}

CompletionResult complete(const RewriteSystem& s, int max_rounds) {
  if (max_rounds < 1) throw std::invalid_argument("complete: max_rounds must be >= 1");
  RewriteSystem cur = interreduce(s.rules());
  for (int round = 0;; ++round) {
    std::vector<CompositionReport> open = nontrivial_compositions(cur);
    if (open.empty()) return {std::move(cur), round};
    if (round == max_rounds)
      throw CompletionError("completion not closed after " + std::to_string(max_rounds) + " rounds (" +
                            std::to_string(cur.size()) + " rules, " + std::to_string(open.size()) +
                            " open compositions)");
    std::vector<Rule> rules = cur.rules();
    for (const CompositionReport& c : open) rules.push_back(orient(c.left, c.right));
    cur = interreduce(rules);
  }
}

namespace {

long long rank_of(const Integer& m, long long min_m) {
  if (m < min_m) throw std::domain_error("m must be >= " + std::to_string(min_m) + ", got " + m.str());
  return to_i64(m);
}

std::vector<Rule> braid_rules(long long m) {
  std::vector<Rule> rules{{"11", ""}, {"22", ""}, {"33", ""}};
  const long long k = m / 2;
  if (m % 2 == 0) {
    rules.push_back({power("12", k), power("21", k)});
    rules.push_back({power("23", k), power("32", k)});
  } else {
    rules.push_back({power("12", k) + "1", power("21", k) + "2"});
    rules.push_back({power("23", k) + "2", power("32", k) + "3"});
  }
  return rules;
}

}  // namespace

RewriteSystem defining_relations(const Integer& m) { return RewriteSystem(braid_rules(rank_of(m, 2))); }

RewriteSystem gs_basis(const Integer& m) {
  const long long mm = rank_of(m, 3);
  std::vector<Rule> rules = braid_rules(mm);
  if (mm % 2 == 0) {
    const long long k = mm / 2;
    rules.push_back({power("12", k - 1) + "1" + power("32", k), power("21", k) + "3" + power("23", k - 1)});
  }
  return RewriteSystem(std::move(rules));
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::vector<Rule> parse_rules(std::istream& in) {
  std::vector<Rule> rules;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    const auto arrow = s.find("->");
    if (arrow == std::string_view::npos)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'lhs -> rhs'");
    try {
      rules.push_back({parse_word(trim(s.substr(0, arrow))), parse_word(trim(s.substr(arrow + 2)))});
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return rules;
}

std::string format_rules(const RewriteSystem& s) {
  std::ostringstream out;
  for (const Rule& r : s.rules()) out << to_string(r) << '\n';
  return out.str();
}

}  // namespace rigid
