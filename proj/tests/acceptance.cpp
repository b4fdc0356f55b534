// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include "properties.hpp"

#include "rigidroots/canseq.hpp"
#include "rigidroots/reflect.hpp"
#include "rigidroots/rewrite.hpp"
#include "rigidroots/stdwords.hpp"
#include "rigidroots/verify.hpp"
#include "rigidroots/words.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace rigid;

namespace {

struct Gate {
  std::vector<std::string> problems;
  std::ostringstream summary;
  long long checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && problems.size() < 10) problems.push_back(what);
  }
  void take(const CampaignReport& rep) {
    for (const auto& f : rep.failures) {
      std::string roots;
      for (const auto& r : f.roots) roots += r.str();
      expect(false, rep.campaign + " m=" + rep.m.str() + " " + f.check + " " + roots);
    }
  }
  void take(const props::Problems& p, const std::string& tag) {
    for (const auto& s : p) expect(false, tag + ": " + s);
  }
};

struct Row {
  Sequence seq;
  long long N;
  Rational rho;
  SeqType ty;
};

void expect_chain(Gate& g, long long m, const Root& r, const std::vector<Row>& want) {
  const auto chain = all_canonical_data(m, r);
  bool ok = chain.size() == want.size();
  for (std::size_t k = 0; ok && k < want.size(); ++k)
    ok = chain[k].seq == want[k].seq && chain[k].N == want[k].N && chain[k].rho == want[k].rho &&
         chain[k].ty == want[k].ty;
  g.expect(ok, "chain of " + r.str() + " at m=" + std::to_string(m));
}

int bound_for(long long m) { return m == 3 ? 300 : m <= 6 ? 200 : 120; }

void goldens(Gate& g) {
  using enum SeqType;
  g.expect(s_of_root({5, 3}) == "2321232321232", "s([5,3])");
  g.expect(crossing_word({5, 3}) == "2321232321232", "crossing_word([5,3])");
  const Rational q23(2, 3), q35(3, 5), q12(1, 2), q1323(13, 23), q310(3, 10), q13(1, 3), q1013(10, 13);
  expect_chain(g, 3, {5, 3}, {{{2, 2, 1}, 1, q23, Plus}, {{2}, 2, 0, Zero}});
  expect_chain(g, 3, {8, 5}, {{{2, 2, 1, 2, 1}, 1, q35, Plus}, {{2, 1}, 1, q12, Equal}});
  expect_chain(g, 3, {59, 23},
               {{{3, 3, 2, 3, 2, 3, 2, 3, 3, 2, 3, 2, 3, 2, 3, 3, 2, 3, 2, 3, 2, 3, 2}, 2, q1323, Plus},
                {{2, 1, 1, 2, 1, 1, 2, 1, 1, 1}, 1, q310, Minus},
                {{2, 2, 3}, 2, q13, Minus},
                {{2}, 2, 0, Zero}});
  expect_chain(g, 5, {62, 13},
               {{{5, 5, 5, 5, 4, 5, 5, 5, 4, 5, 5, 5, 4}, 4, q1013, Plus}, {{4, 3, 3}, 3, q13, Minus}, {{2}, 2, 0, Zero}});
  g.expect(level(3, {339, 130}).level == 3, "level (3,[339,130])");
  g.expect(level(6, {73, 13}).level == 2, "level (6,[73,13])");
  g.expect(level(5, {62, 13}).level == 2, "level (5,[62,13])");
  g.expect(standard_word(3, {5, 3}) == "31313231", "standard (3,[5,3])");
  g.expect(standard_word(3, {17, 7}) == "21321323123131", "standard (3,[17,7])");
  g.expect(standard_word(3, {13, 5}) == "13231231", "standard (3,[13,5])");
  g.expect(standard_word(4, {85, 23}) == "1" + power("2321", 2) + "3231" + power("2321", 2) + "231",
           "standard (4,[85,23])");
  g.expect(standard_word(6, {73, 13}) == "2" "1213" "121213" "1213" "121213" "1213" "1", "standard (6,[73,13])");
  g.expect(word_via_level(5, {62, 13}, 2) == power("21", 4) + "31" + power("21", 3) + "31" + power("21", 3) + "31",
           "level-2 form (5,[62,13])");
  g.summary << g.checks << " goldens";
}

void bases(Gate& g) {
  for (long long m = 3; m <= 10; ++m) {
    const RewriteSystem def = defining_relations(m);
    const CompletionResult res = complete(def, 10);
    g.expect(res.system == gs_basis(m), "complete != gs_basis at m=" + std::to_string(m));
    std::vector<Rule> added;
    for (const Rule& r : res.system.rules())
      if (std::find(def.rules().begin(), def.rules().end(), r) == def.rules().end()) added.push_back(r);
    const long long k = m / 2;
    const Rule extra{power("12", k - 1) + "1" + power("32", k), power("21", k) + "3" + power("23", k - 1)};
    if (m % 2 == 0)
      g.expect(added.size() == 1 && added[0] == extra, "extra rule at m=" + std::to_string(m));
    else
      g.expect(added.empty(), "extra rule at odd m=" + std::to_string(m));
  }
  for (long long m = 3; m <= 12; ++m) g.expect(is_closed(gs_basis(m)), "gs_basis not closed at m=" + std::to_string(m));
  g.summary << "completion m=3..10, closed m=3..12";
}

void injectivity(Gate& g) {
  long long roots = 0;
  for (long long m = 3; m <= 8; ++m) {
    const CampaignReport rep = verify_injectivity(m, bound_for(m));
    g.take(rep);
    roots += rep.counts.at("s([a,b]) words");
  }
  g.summary << roots << " roots, bounds 300/200/120";
}

void equivalences(Gate& g) {
  long long n = 0;
  for (long long m = 3; m <= 8; ++m) {
    const CampaignReport st = verify_stdwords(m, bound_for(m));
    g.take(st);
    n += st.counts.at("roots");
    g.take(verify_identities(m, bound_for(m)));
  }
  long long crossings = 0;
  for (long long a = 1; a <= 200; ++a)
    for (long long b = 1; a + b <= 200; ++b)
      if (oracle::gcd(a, b) == 1) {
        g.expect(crossing_word({a, b}) == s_of_root({a, b}), "crossing_word " + Root{a, b}.str());
        ++crossings;
      }
  g.summary << n << " standard words, " << crossings << " crossing words";
}

void conjugation(Gate& g) {
  long long checks = 0;
  for (long long m = 3; m <= 6; ++m) {
    const CampaignReport rep = verify_identities(m, 150);
    g.take(rep);
    checks += rep.counts.at("checks");
  }
  g.summary << checks << " identities, a+b <= 150";
}

void numerics(Gate& g) {
  for (int n = 0; n <= 12; ++n)
    for (const auto& id : tau_identities(n)) g.expect(id.holds(), id.name + " n=" + std::to_string(n));
  for (int n = 1; n <= 20; ++n) {
    for (const auto& id : chebyshev_identities(n)) g.expect(id.holds(), id.name + " n=" + std::to_string(n));
    const ZeroResiduals z = zero_residuals(n);
    g.expect(z.f < 1e-9 && z.g < 1e-9, "zeros n=" + std::to_string(n));
  }
  double gap = 1;
  long long checked = 0;
  for (long long m = 3; m <= 8; ++m) {
    const DichotomyReport d = check_dichotomy(m, 100, 1e-9);
    for (const auto& v : d.violations) g.expect(false, "dichotomy m=" + std::to_string(m) + " " + v.root.str());
    gap = std::min(gap, d.min_relative_gap);
    checked += d.checked;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", gap);
  g.summary << checked << " root vectors, min gap " << buf;
}

void properties(Gate& g) {
  for (long long m = 3; m <= 8; ++m) {
    g.take(props::normal_forms(m, 10000, 1000 + static_cast<std::uint64_t>(m)), "normal forms");
    g.take(props::chains(m, 300), "chains");
  }
  g.take(props::palindromes(200), "palindromes");
  g.summary << "6 x 10^4 random words, chains m=3..8 a+b <= 300";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Gate&)>>> criteria{
      {"worked-example goldens", goldens},
      {"closed rewriting bases", bases},
      {"injectivity", injectivity},
      {"oracle equivalences", equivalences},
      {"conjugation identities", conjugation},
      {"polynomial identities and root-vector dichotomy", numerics},
      {"property suites", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Gate g;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(g);
    } catch (const std::exception& e) {
      g.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = g.problems.empty();
    failed += ok ? 0 : 1;
    char t[32];
    std::snprintf(t, sizeof t, "%.1fs", secs);
    std::cout << (ok ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first << " (" << g.summary.str()
              << ", " << t << ")\n";
    for (const auto& p : g.problems) std::cout << "      " << p << "\n";
  }
  std::cout << (failed ? "FAILED " + std::to_string(failed) + " of 7" : std::string("all 7 criteria pass")) << "\n";
  return failed ? 1 : 0;
}
