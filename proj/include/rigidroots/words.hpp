#pragma once

// Words over the alphabet {1,2,3}; letter i stands for the simple reflection
// s_i of W(m). A word is stored as a std::string of the characters '1'..'3',
// the empty string being the identity e.

#include "rigidroots/arith.hpp"
#include "rigidroots/canseq.hpp"
#include "rigidroots/roots.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rigid {

using Word = std::string;

bool is_word(std::string_view w);

/// Throws std::invalid_argument naming the first bad character.
void require_word(std::string_view w);

/// "e" for the empty word, the letters otherwise.
std::string display(std::string_view w);

/// Parses a word as printed by display(); accepts "e" and "" for the identity.
Word parse_word(std::string_view text);

Word power(std::string_view w, long long n);
Word reversed(std::string_view w);
bool is_palindrome(std::string_view w);
Word swap13(std::string_view w);

/// Cancels adjacent equal letters (xx -> e) until none remain.
Word free_reduce(std::string_view w);

/// s^{a x b}: the product over c_1 of (23)^{a_{1,i}} (21).
Word dyck_word(const Root& r);

/// The reflection word s([a,b]): free reduction of 32 s^{a x b} 1 for a >= b,
/// and the 1 <-> 3 swap of s([b,a]) for a < b.
Word s_of_root(const Root& r);

/// A crossing of the open segment (0,0)-(a,b) with a grid line at parameter
/// t = k / n along the segment. Vertical lines carry 3, horizontal lines 1
/// and anti-diagonals x + y = const carry 2.
struct Crossing {
  long long k = 0;
  long long n = 1;
  char label = '2';
};

/// All crossings in order of t.
std::vector<Crossing> crossings(const Root& r);

/// Labels of the lines crossed by the open segment (0,0)-(a,b) in the
/// triangulated plane: x = k gives 3, y = k gives 1, x + y = k gives 2.
Word crossing_word(const Root& r);

/// Closed form of s^{F_n x F_{n-1}}, n >= 2.
Word real_root_word(const Integer& m, int n);

/// The pair (H_k, V_k), k >= 1.
std::pair<Word, Word> hk_vk(int k);

/// H_k^{a_{k,1}} V_k ... H_k^{a_{k,d_k}} V_k for 1 <= k <= level.
Word word_via_level(const Integer& m, const Root& r, int k);

/// The conjugated expression (132)^l [ ... ] (231)^l of s^{a x b} built from
/// c_k, 2 <= k <= level: blocks (21)^{a_{k,i}}(31) for k = 2l+2 and
/// (23)^{a_{k,i}+1}(21) for k = 2l+1.
Word word_conjugated_level(const Integer& m, const Root& r, int k);

/// The exponent l and the root [a~,b~] with (231)^l s^{a x b} (132)^l =
/// s^{a~ x b~}. For odd k the first sequence of [a~,b~] is c_k shifted by one;
/// for even k its second sequence is c_k.
struct ConjugatedRoot {
  int l = 0;
  Root root;
  int expected_level = 0;
};
ConjugatedRoot conjugated_root(const Integer& m, const Root& r, int k);

}  // namespace rigid
