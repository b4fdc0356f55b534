#pragma once

// Verification campaigns over all reduced positive roots up to a bound on
// a + b. Each campaign reports what it counted and every failure with enough
// data to reproduce it.

#include "rigidroots/roots.hpp"
#include "rigidroots/words.hpp"

#include <json.hpp>

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace rigid {

struct Failure {
  std::vector<Root> roots;
  std::string check;
  std::string details;
};

struct CampaignReport {
  std::string campaign;
  Integer m;
  int bound = 0;
  std::map<std::string, long long> counts;
  std::vector<Failure> failures;

  bool ok() const { return failures.empty(); }
};

std::string to_text(const CampaignReport& rep);
nlohmann::json to_json(const CampaignReport& rep);

/// Distinct normal forms of s^{a x b} over a >= b, distinct normal forms of
/// s([a,b]) over all roots, and the root-vector dichotomy.
CampaignReport verify_injectivity(const Integer& m, int bound);

/// Level forms, conjugated level forms, conjugated roots and their levels,
/// 321 s([a,b]) 123 = s(sigma1 sigma2 [a,b]), and real-root words being
/// irreducible.
CampaignReport verify_identities(const Integer& m, int bound);

/// standard_word against the rewriting normal form, plus the starting-word
/// taxonomy by level.
CampaignReport verify_stdwords(const Integer& m, int bound);

/// Shape of the canonical chain: (N_1, ..., N_L) = (m-1, m-2, ..., m-2, c),
/// type + below the level, the bound on N_L + rho_L, and round trips through
/// expand and reconstruct_root.
CampaignReport verify_structure(const Integer& m, int bound);

/// Names accepted by run_campaign: injectivity, identities, stdwords, structure.
const std::vector<std::string>& campaign_names();
CampaignReport run_campaign(const std::string& name, const Integer& m, int bound);

/// One failure per pair of entries sharing a word, in input order.
std::vector<Failure> find_collisions(const std::vector<std::pair<Root, Word>>& entries, const std::string& check);

/// Worker count: RIGIDROOTS_THREADS if set to a positive integer, else the
/// hardware concurrency.
unsigned worker_count();

/// Calls fn(i) for 0 <= i < n on up to worker_count() threads. The first
/// exception thrown is rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace rigid
