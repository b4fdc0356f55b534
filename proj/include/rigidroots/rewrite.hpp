#pragma once

// String rewriting over {1,2,3} with the degree-lexicographic order in which
// 1 > 2 > 3: a shorter word is smaller, and words of equal length compare at
// their first difference with the smaller digit winning.

#include "rigidroots/arith.hpp"
#include "rigidroots/words.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rigid {

/// u < v in the deg-lex order.
bool deg_lex_less(std::string_view u, std::string_view v);

struct Rule {
  Word lhs;
  Word rhs;

  friend bool operator==(const Rule&, const Rule&) = default;
};

/// Orients the relation u = v as a rule; u must differ from v.
Rule orient(Word u, Word v);

std::string to_string(const Rule& r);

enum class CompositionKind { Intersection, Inclusion };

std::string_view to_string(CompositionKind k);

struct CompositionReport {
  CompositionKind kind = CompositionKind::Intersection;
  Word overlap;  // the word w both sides are derived from
  Word left;     // normal form of the side rewritten by p
  Word right;    // normal form of the side rewritten by q

  bool trivial() const { return left == right; }
};

class RewriteSystem {
 public:
  RewriteSystem() = default;

  /// Validates the rules (nonempty lhs, lhs > rhs, distinct lhs, letters in
  /// {1,2,3}) and keeps them sorted by lhs in deg-lex order.
  explicit RewriteSystem(std::vector<Rule> rules);

  const std::vector<Rule>& rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }
  std::size_t max_lhs_length() const { return max_lhs_; }

  /// Rewrites at the leftmost position where a lhs occurs, preferring the
  /// longest lhs there, until the word is irreducible.
  Word normal_form(std::string_view w) const;

  /// Reference reducer: rightmost occurrence, shortest lhs, rescanning the
  /// whole word after every step. Quadratic; meant for cross-checks.
  Word normal_form_rightmost(std::string_view w) const;

  /// True when no lhs occurs as a factor of w.
  bool is_irreducible(std::string_view w) const;

  /// True when no lhs contains another lhs as a factor and every rhs is
  /// irreducible.
  bool is_interreduced() const;

  friend bool operator==(const RewriteSystem& x, const RewriteSystem& y) { return x.rules_ == y.rules_; }

 private:
  // Index into rules_ of the longest (or shortest) lhs that is a prefix of
  // the letters at(0), at(1), ..., at(avail - 1); -1 if none is.
  template <class At>
  int match(At at, std::size_t avail, bool shortest) const;

  struct Node {
    int next[3] = {-1, -1, -1};
    int rule = -1;
  };

  std::vector<Rule> rules_;
  std::vector<Node> trie_;
  std::size_t max_lhs_ = 0;
};

/// All compositions of p with q: overlaps where a proper suffix of p.lhs is a
/// proper prefix of q.lhs, and inclusions of q.lhs as a proper factor of
/// p.lhs. Both sides are reduced to normal form in `ambient`.
std::vector<CompositionReport> compositions(const Rule& p, const Rule& q, const RewriteSystem& ambient);

/// Every composition of every ordered pair of rules is trivial.
bool is_closed(const RewriteSystem& s);

/// The nontrivial compositions of s, in pair order.
std::vector<CompositionReport> nontrivial_compositions(const RewriteSystem& s);

/// Removes rules whose lhs is reducible by the others (re-adding the
/// normalized pair when it is still a relation) and normalizes every rhs.
RewriteSystem interreduce(const std::vector<Rule>& rules);

class CompletionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CompletionResult {
  RewriteSystem system;
  int rounds = 0;  // rounds that added rules
};

/// Knuth-Bendix completion: each round adds every nontrivial composition
/// (oriented) and interreduces. Throws CompletionError if the system is not
/// closed after max_rounds rounds.
CompletionResult complete(const RewriteSystem& s, int max_rounds);

/// The braid presentation of W(m): s_i^2 = e and (s1s2)^m = (s2s3)^m = e,
/// written as length-m braid relations. m >= 2.
RewriteSystem defining_relations(const Integer& m);

/// The closed system S(m) for W(m), m >= 3.
RewriteSystem gs_basis(const Integer& m);

/// One rule per line, "lhs -> rhs", with e for the empty word. Blank lines and
/// lines starting with # are skipped.
std::vector<Rule> parse_rules(std::istream& in);
std::string format_rules(const RewriteSystem& s);

}  // namespace rigid
