#include "rigidroots/rewrite.hpp"
#include "rigidroots/stdwords.hpp"

#include <doctest.h>

#include <set>

using namespace rigid;

TEST_CASE("worked standard words") {
  CHECK(standard_word(3, {5, 3}) == "31313231");
  CHECK(standard_word(3, {17, 7}) == "21321323123131");
  CHECK(standard_word(3, {13, 5}) == "13231231");
  CHECK(standard_word(4, {85, 23}) == "1" + power("2321", 2) + "3231" + power("2321", 2) + "231");
  CHECK(standard_word(6, {73, 13}) == "2" "1213" "121213" "1213" "121213" "1213" "1");
}

TEST_CASE("tables") {
  CHECK(w_table(3, 0) == std::pair<Word, Word>{"31", "3231"});
  CHECK(w_table(3, 1) == std::pair<Word, Word>{"21", "31"});
  CHECK(v_table(6, 1) == std::pair<Word, Word>{"121213", "1213"});
  CHECK(v_table(5, 3) == std::pair<Word, Word>{"23", "2123"});
  CHECK_THROWS_AS(w_table(3, 2), std::domain_error);
  CHECK_THROWS_AS(w_table(3, -1), std::domain_error);
  CHECK_THROWS_AS(v_table(6, 0), std::domain_error);
  CHECK_THROWS_AS(v_table(6, 5), std::domain_error);
  for (long long m = 3; m <= 10; ++m) {
    for (long long N = 0; N <= m - 2; ++N) {
      const auto [w1, w2] = w_table(m, N);
      CHECK(w1 != w2);
      CHECK(is_word(w1));
      CHECK(is_word(w2));
    }
    for (long long N = 1; N <= m - 2; ++N) {
      const auto [v1, v2] = v_table(m, N);
      CHECK(v1 != v2);
    }
  }
}

TEST_CASE("prefix words") {
  const PrefixWords p2 = prefix_words(2);
  CHECK(p2.x == "1");
  CHECK(p2.y_hat2);
  CHECK(p2.y.empty());
  const PrefixWords p6 = prefix_words(6);
  CHECK(p6.x == "1321321");
  CHECK(p6.x_inv == "1231231");
  CHECK(p6.y == "13213");
  CHECK_FALSE(p6.y_hat2);
  for (long long m = 3; m <= 6; ++m) {
    const RewriteSystem gs = gs_basis(m);
    for (int L = 2; L <= 9; ++L) {
      const PrefixWords p = prefix_words(L);
      CHECK(gs.normal_form(p.x + p.x_inv).empty());
    }
  }
}

TEST_CASE("dispatch") {
  const StdCaseKey k17 = dispatch_case(3, {17, 7});
  CHECK(k17.form == StdForm::Level1M3);
  CHECK(k17.exceptional);
  CHECK(k17.level == 1);
  CHECK(k17.N_L == 2);
  CHECK(k17.ty == SeqType::Minus);
  const StdCaseKey k62 = dispatch_case(5, {62, 13});
  CHECK(k62.form == StdForm::EvenSmallM);
  CHECK(k62.level == 2);
  CHECK(k62.N_L == 3);
  CHECK(k62.exceptional);
  const StdCaseKey k73 = dispatch_case(6, {73, 13});
  CHECK(k73.form == StdForm::Even);
  CHECK_FALSE(k73.exceptional);
  const StdCaseKey k8 = dispatch_case(3, {8, 3});
  CHECK(k8.form == StdForm::Real);
  CHECK(k8.real_index == 3);
  CHECK(to_string(StdForm::OddM3) == "odd-m3");
  CHECK_THROWS(dispatch_case(3, {3, 8}));
}

TEST_CASE("closed forms agree with rewriting") {
  for (long long m = 3; m <= 8; ++m) {
    const RewriteSystem gs = gs_basis(m);
    std::set<StdForm> seen;
    std::set<Word> distinct;
    long long n = 0;
    for (const Root& r : enumerate_reduced(m, 200)) {
      const StdCaseKey key = dispatch_case(m, r);
      seen.insert(key.form);
      const Word w = standard_word(m, r);
      INFO("m=" << m << " " << r << " " << to_string(key.form));
      CHECK(w == gs.normal_form(dyck_word(r)));
      CHECK(gs.is_irreducible(w));
      if (key.form != StdForm::Real) CHECK(has_level_prefix(key.level, w));
      distinct.insert(w);
      ++n;
    }
    CHECK(distinct.size() == static_cast<std::size_t>(n));
    CHECK(seen.count(StdForm::Level1));
    if (m > 3) CHECK(seen.count(StdForm::Even));
    if (m == 3) CHECK(seen.count(StdForm::OddM3));
    if (m <= 5) CHECK(seen.count(StdForm::EvenSmallM));
  }
}

TEST_CASE("level prefixes") {
  CHECK(has_level_prefix(1, "31313231"));
  CHECK(has_level_prefix(1, "2131"));
  CHECK_FALSE(has_level_prefix(1, "1213"));
  CHECK_FALSE(has_level_prefix(1, ""));
}
