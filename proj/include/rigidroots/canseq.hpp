#pragma once

// Canonical sequences of a reduced positive root [a,b], a >= b.
//
// c_1 records the horizontal run lengths of the maximal Dyck path under the
// segment (0,0)-(a,b). Each later c_n is the run-length refinement of c_{n-1}:
// the entries of c_{n-1} take two values N, N+1, and c_n lists the lengths of
// the maximal runs of N+1 (type +) or of N (type -). The recursion stops at the
// first sequence of type = or 0. Alongside, a/b = N_1 + rho_1 and
// N_n + rho_n = rho/(1-rho) or (1-rho)/rho for rho = rho_{n-1} >= 1/2 or < 1/2.

#include "rigidroots/arith.hpp"
#include "rigidroots/roots.hpp"

#include <string_view>
#include <vector>

namespace rigid {

using Sequence = std::vector<long long>;

enum class SeqType { Plus, Minus, Equal, Zero };

std::string_view to_string(SeqType t);

struct CanonicalData {
  Sequence seq;
  long long N = 0;
  Rational rho;
  SeqType ty = SeqType::Zero;
};

struct LevelInfo {
  int level = 0;
  std::vector<Rational> gammas;  // gamma_0 .. gamma_level
};

/// a_{1,i} = ceil(a i / b) - ceil(a (i-1) / b), 1 <= i <= b.
Sequence first_sequence(const Root& r);

/// Type of a sequence whose entries all lie in {N, N+1}.
SeqType classify_type(const Sequence& seq, long long N);

/// Maximal run lengths of N+1 (Plus) or N (Minus) in prev.seq.
Sequence next_sequence(const CanonicalData& prev);

struct NRho {
  long long N;
  Rational rho;
};

NRho next_N_rho(const Rational& rho_prev);

/// The full chain c_1, c_2, ... ending at the first type = or 0 sequence.
/// Requires a reduced root of H(m) with a >= b and [a,b] != [m,1].
std::vector<CanonicalData> all_canonical_data(const Integer& m, const Root& r);

/// Same chain without the root-of-H(m) requirement (any coprime a >= b >= 1).
std::vector<CanonicalData> canonical_chain(const Root& r);

/// gamma_0 = 0, gamma_1 = m - 1/2, gamma_n = m - 1/gamma_{n-1}.
std::vector<Rational> gamma_sequence(const Integer& m, int count);

/// The level L with gamma_{L-1} < a/b <= gamma_L of an imaginary reduced
/// positive root with a >= b.
LevelInfo level(const Integer& m, const Root& r);

/// Inverse of next_sequence: rebuilds c_k from (N_k, type of c_k, c_{k+1}).
/// `starts_high` says whether c_k starts with N+1 (true for c_1); see
/// starts_high.
Sequence expand(long long N, SeqType ty, const Sequence& next, bool starts_high = true);

/// Whether c_{k+1} = chain[k] starts with N_{k+1} + 1, from the types alone:
/// c_1 does, a type + step keeps the orientation and a type - step flips it.
bool starts_high(const std::vector<CanonicalData>& chain, std::size_t k);

/// [sum of entries, length]; the inverse of first_sequence.
Root reconstruct_root(const Sequence& c1);

/// Closed form for c_n (n >= 2) from rho_{n-1} and the type of c_{n-1}, with
/// d_n = D(rho_n) entries.
Sequence closed_form_sequence(const Rational& rho_prev, SeqType prev_ty, const Rational& rho_n);

}  // namespace rigid
