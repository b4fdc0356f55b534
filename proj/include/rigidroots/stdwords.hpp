#pragma once

// Closed forms for the normal form of s^{a x b} with respect to gs_basis(m),
// organised by the level L of [a,b] and the data (N_L, type of c_L).

#include "rigidroots/canseq.hpp"
#include "rigidroots/roots.hpp"
#include "rigidroots/words.hpp"

#include <string_view>
#include <utility>

namespace rigid {

enum class StdForm {
  Real,               // [F_n, F_{n-1}]
  Level1,             // L = 1
  Level1M3,           // m = 3, L = 1, N_1 = 2, type -
  Even,               // even L >= 2
  EvenSmallM,         // m in {3,4,5}, even L, N_L = m - 2
  Odd,                // odd L >= 3
  OddM3,              // m = 3, odd L >= 3, type -
};

std::string_view to_string(StdForm f);

struct StdCaseKey {
  StdForm form = StdForm::Real;
  Integer m;
  int level = 0;        // 0 for real roots
  int real_index = 0;   // n with [a,b] = [F_n, F_{n-1}], real roots only
  SeqType ty = SeqType::Zero;
  long long N_L = 0;
  bool exceptional = false;

  bool odd() const { return level % 2 == 1; }
};

/// Rows of the w-table, indexed by N = N_L - [L = 1], 0 <= N <= m - 2.
std::pair<Word, Word> w_table(const Integer& m, long long N);

/// Rows of the v-table, 1 <= N_L <= m - 2.
std::pair<Word, Word> v_table(const Integer& m, long long N_L);

/// x = (132)^{floor((L-2)/2)} 1 and its inverse; y = (132)^{(L-4)/2} 13 for
/// even L >= 4. For L = 2, y is the marker 2^ (y_hat2 set, y empty): it emits
/// 2 unless the next letter is 2, in which case both disappear.
struct PrefixWords {
  Word x;
  Word x_inv;
  Word y;
  bool y_hat2 = false;
};

PrefixWords prefix_words(int level);

/// Routes a reduced positive root (a >= b, m >= 3) to its closed form.
/// Throws std::logic_error if the canonical data violate the structural
/// constraints (N_L = m - 2 + [L = 1] with type +, or L >= 2, N_L = 1, type 0).
StdCaseKey dispatch_case(const Integer& m, const Root& r);

/// The normal form of s^{a x b} in W(m) from the closed forms alone.
Word standard_word(const Integer& m, const Root& r);

/// Whether a standard word of an imaginary root of the given level starts
/// with one of the words allowed for that level.
bool has_level_prefix(int level, std::string_view word);

}  // namespace rigid
