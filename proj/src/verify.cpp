#include "rigidroots/verify.hpp"

#include "rigidroots/canseq.hpp"
#include "rigidroots/reflect.hpp"
#include "rigidroots/rewrite.hpp"
#include "rigidroots/stdwords.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace rigid {

unsigned worker_count() {
  if (const char* env = std::getenv("RIGIDROOTS_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(worker_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t i; !stop && (i = next++) < n;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        stop = true;
      }
    }
  };
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
  pool.clear();
  if (error) std::rethrow_exception(error);
}

std::string to_text(const CampaignReport& rep) {
  std::ostringstream out;
  out << rep.campaign << ": m=" << rep.m << " bound=" << rep.bound << '\n';
  for (const auto& [name, n] : rep.counts) out << "  " << name << ": " << n << '\n';
  out << "  failures: " << rep.failures.size() << '\n';
  for (const Failure& f : rep.failures) {
    out << "  FAIL " << f.check;
    for (const Root& r : f.roots) out << ' ' << r;
    out << ": " << f.details << '\n';
  }
  out << (rep.ok() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

nlohmann::json to_json(const CampaignReport& rep) {
  nlohmann::json failures = nlohmann::json::array();
  for (const Failure& f : rep.failures) {
    nlohmann::json roots = nlohmann::json::array();
    for (const Root& r : f.roots) roots.push_back({to_i64(r.a), to_i64(r.b)});
    failures.push_back({{"roots", roots}, {"check", f.check}, {"details", f.details}});
  }
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [name, n] : rep.counts) counts[name] = n;
  return {{"campaign", rep.campaign}, {"m", to_i64(rep.m)},   {"bound", rep.bound},
          {"counts", counts},          {"ok", rep.ok()},     {"failures", failures}};
}

std::vector<Failure> find_collisions(const std::vector<std::pair<Root, Word>>& entries, const std::string& check) {
  std::vector<Failure> out;
  std::unordered_map<std::string_view, std::size_t> first;
  first.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto [it, fresh] = first.emplace(entries[i].second, i);
    if (!fresh)
      out.push_back({{entries[it->second].first, entries[i].first}, check, "shared word " + display(entries[i].second)});
  }
  return out;
}

namespace {

struct RootResult {
  std::vector<Failure> failures;
  long long checks = 0;
};

void expect_equal(RootResult& res, std::vector<Root> roots, const std::string& check, const Word& got,
                  const Word& want) {
  ++res.checks;
  if (got != want) res.failures.push_back({std::move(roots), check, display(got) + " != " + display(want)});
}

void expect(RootResult& res, std::vector<Root> roots, const std::string& check, bool ok, const std::string& details) {
  ++res.checks;
  if (!ok) res.failures.push_back({std::move(roots), check, details});
}

// Runs per_root on every root in parallel and merges in root order.
template <class F>
void sweep(CampaignReport& rep, const std::vector<Root>& roots, F per_root) {
  std::vector<RootResult> results(roots.size());
  parallel_for(roots.size(), [&](std::size_t i) {
    try {
      per_root(roots[i], results[i]);
    } catch (const std::exception& e) {
      results[i].failures.push_back({{roots[i]}, "exception", e.what()});
    }
  });
  rep.counts["roots"] += static_cast<long long>(roots.size());
  for (RootResult& r : results) {
    rep.counts["checks"] += r.checks;
    for (Failure& f : r.failures) rep.failures.push_back(std::move(f));
  }
}

CampaignReport start(const char* name, const Integer& m, int bound) {
  require_rank(m);
  if (m < 3) throw std::domain_error(std::string(name) + ": m must be >= 3");
  CampaignReport rep;
  rep.campaign = name;
  rep.m = m;
  rep.bound = bound;
  return rep;
}

std::vector<Root> imaginary_roots(const Integer& m, int bound) {
  std::vector<Root> out;
  for (const Root& r : enumerate_reduced(m, bound))
    if (classify(m, r) == RootClass::ImaginaryPositive) out.push_back(r);
  return out;
}

std::vector<std::pair<Root, Word>> normal_forms(const RewriteSystem& gs, const std::vector<Root>& roots,
                                                Word (*word)(const Root&)) {
  std::vector<std::pair<Root, Word>> out(roots.size());
  parallel_for(roots.size(), [&](std::size_t i) { out[i] = {roots[i], gs.normal_form(word(roots[i]))}; });
  return out;
}

}  // namespace

CampaignReport verify_injectivity(const Integer& m, int bound) {
  CampaignReport rep = start("injectivity", m, bound);
  const RewriteSystem gs = gs_basis(m);

  const std::vector<Root> upper = enumerate_reduced(m, bound);
  for (Failure& f : find_collisions(normal_forms(gs, upper, dyck_word), "distinct s^{a x b}"))
    rep.failures.push_back(std::move(f));
  rep.counts["s^{a x b} words"] = static_cast<long long>(upper.size());

  const std::vector<Root> all = enumerate_reduced_all(m, bound);
  for (Failure& f : find_collisions(normal_forms(gs, all, s_of_root), "distinct s([a,b])"))
    rep.failures.push_back(std::move(f));
  rep.counts["s([a,b]) words"] = static_cast<long long>(all.size());

  const DichotomyReport dich = check_dichotomy(m, bound);
  rep.counts["root vectors"] = dich.checked;
  for (const DichotomyViolation& v : dich.violations) {
    std::ostringstream d;
    d.precision(12);
    d << v.reason << " (p, q, r) = (" << v.p << ", " << v.q << ", " << v.r << ")";
    rep.failures.push_back({{v.root}, "dichotomy", d.str()});
  }
  return rep;
}

CampaignReport verify_identities(const Integer& m, int bound) {
  CampaignReport rep = start("identities", m, bound);
  const RewriteSystem gs = gs_basis(m);

  sweep(rep, imaginary_roots(m, bound), [&](const Root& r, RootResult& res) {
    const Word target = gs.normal_form(dyck_word(r));
    const int L = level(m, r).level;
    for (int k = 1; k <= L; ++k)
      expect_equal(res, {r}, "level form k=" + std::to_string(k), gs.normal_form(word_via_level(m, r, k)), target);
    for (int k = 2; k <= L; ++k) {
      const std::string tag = " k=" + std::to_string(k);
      expect_equal(res, {r}, "conjugated level form" + tag, gs.normal_form(word_conjugated_level(m, r, k)), target);
      const ConjugatedRoot c = conjugated_root(m, r, k);
      const Word conj = power("231", c.l) + dyck_word(r) + power("132", c.l);
      expect_equal(res, {r, c.root}, "conjugated root" + tag, gs.normal_form(conj), gs.normal_form(dyck_word(c.root)));
      const int got = level(m, c.root).level;
      expect(res, {r, c.root}, "conjugated root level" + tag, got == c.expected_level,
             "level " + std::to_string(got) + ", expected " + std::to_string(c.expected_level));
    }
    const Root c = weyl_sigma1(m, weyl_sigma2(m, r));
    expect_equal(res, {r, c}, "321 s([a,b]) 123", gs.normal_form("321" + s_of_root(r) + "123"),
                 gs.normal_form(s_of_root(c)));
  });

  RootResult real;
  for (int n = 2;; ++n) {
    const Root r{fib(m, n), fib(m, n - 1)};
    if (r.a + r.b > bound && n > 2) break;
    const Word w = real_root_word(m, n);
    expect_equal(real, {r}, "real root word irreducible", gs.normal_form(w), w);
    expect_equal(real, {r}, "real root word", gs.normal_form(dyck_word(r)), w);
    ++rep.counts["real roots"];
  }
  rep.counts["checks"] += real.checks;
  for (Failure& f : real.failures) rep.failures.push_back(std::move(f));
  return rep;
}

CampaignReport verify_stdwords(const Integer& m, int bound) {
  CampaignReport rep = start("stdwords", m, bound);
  const RewriteSystem gs = gs_basis(m);
  sweep(rep, enumerate_reduced(m, bound), [&](const Root& r, RootResult& res) {
    const Word sw = standard_word(m, r);
    expect_equal(res, {r}, "standard word", sw, gs.normal_form(dyck_word(r)));
    if (classify(m, r) == RootClass::ImaginaryPositive) {
      const int L = level(m, r).level;
      expect(res, {r}, "starting word", has_level_prefix(L, sw),
             display(sw) + " has no allowed prefix for level " + std::to_string(L));
    }
  });
  return rep;
}

CampaignReport verify_structure(const Integer& m, int bound) {
  CampaignReport rep = start("structure", m, bound);
  const long long mm = to_i64(m);
  sweep(rep, imaginary_roots(m, bound), [&](const Root& r, RootResult& res) {
    const std::vector<CanonicalData> chain = all_canonical_data(m, r);
    const int L = level(m, r).level;
    expect(res, {r}, "chain longer than level", static_cast<int>(chain.size()) >= L,
           std::to_string(chain.size()) + " sequences for level " + std::to_string(L));
    if (static_cast<int>(chain.size()) < L) return;
    for (int k = 1; k < L; ++k) {
      const CanonicalData& c = chain[static_cast<std::size_t>(k - 1)];
      const long long want = k == 1 ? mm - 1 : mm - 2;
      const std::string tag = " k=" + std::to_string(k);
      expect(res, {r}, "N_k" + tag, c.N == want, "N = " + std::to_string(c.N) + ", expected " + std::to_string(want));
      expect(res, {r}, "type below level" + tag, c.ty == SeqType::Plus, "type " + std::string(to_string(c.ty)));
    }
    const CanonicalData& top = chain[static_cast<std::size_t>(L - 1)];
    const Rational cap = Rational(mm - 2 + (L == 1 ? 1 : 0)) + Rational(1, 2);
    expect(res, {r}, "N_L + rho_L bound", Rational(top.N) + top.rho <= cap,
           "N_L + rho_L = " + to_string(Rational(top.N) + top.rho) + " > " + to_string(cap));

    expect(res, {r}, "reconstruct_root", reconstruct_root(chain.front().seq) == r,
           "got " + reconstruct_root(chain.front().seq).str());
    for (std::size_t k = 0; k < chain.size(); ++k) {
      const CanonicalData& c = chain[k];
      const std::string tag = " k=" + std::to_string(k + 1);
      if (c.ty == SeqType::Zero) continue;
      const bool high = starts_high(chain, k);
      expect(res, {r}, "orientation" + tag, (c.seq.front() == c.N + 1) == high, "first entry " + std::to_string(c.seq.front()));
      if (k + 1 < chain.size() && c.ty != SeqType::Equal)
        expect(res, {r}, "expand" + tag, expand(c.N, c.ty, chain[k + 1].seq, high) == c.seq, "does not rebuild c_k");
    }
  });
  return rep;
}

const std::vector<std::string>& campaign_names() {
  static const std::vector<std::string> names{"injectivity", "identities", "stdwords", "structure"};
  return names;
}

CampaignReport run_campaign(const std::string& name, const Integer& m, int bound) {
  if (name == "injectivity") return verify_injectivity(m, bound);
  if (name == "identities") return verify_identities(m, bound);
  if (name == "stdwords") return verify_stdwords(m, bound);
  if (name == "structure") return verify_structure(m, bound);
  throw std::invalid_argument("unknown campaign '" + name + "'");
}

}  // namespace rigid
