#include "rigidroots/verify.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace rigid;

TEST_CASE("campaigns pass at small bounds") {
  for (long long m = 3; m <= 4; ++m)
    for (const auto& name : campaign_names()) {
      const CampaignReport rep = run_campaign(name, m, 100);
      INFO(to_text(rep));
      CHECK(rep.ok());
      CHECK(rep.campaign == name);
      CHECK(rep.bound == 100);
      CHECK_FALSE(rep.counts.empty());
    }
  CHECK(verify_identities(5, 80).ok());
  CHECK(verify_stdwords(6, 120).ok());
  CHECK_THROWS_AS(run_campaign("nope", 3, 10), std::invalid_argument);
  CHECK_THROWS(verify_injectivity(2, 10));
}

TEST_CASE("collisions are reported") {
  const std::vector<std::pair<Root, Word>> entries{
      {{5, 3}, "31313231"}, {{2, 1}, "232"}, {{8, 3}, "31313231"}, {{3, 2}, "12"}, {{4, 3}, "232"}};
  const auto f = find_collisions(entries, "dup");
  REQUIRE(f.size() == 2);
  CHECK(f[0].roots == std::vector<Root>{{5, 3}, {8, 3}});
  CHECK(f[1].roots == std::vector<Root>{{2, 1}, {4, 3}});
  CHECK(f[0].check == "dup");
  CHECK(find_collisions({{{1, 1}, "2"}, {{2, 1}, "232"}}, "dup").empty());
}

TEST_CASE("report formats") {
  CampaignReport rep{"injectivity", 3, 10, {{"roots", 4}}, {}};
  CHECK(to_text(rep).ends_with("PASS\n"));
  rep.failures.push_back({{{5, 3}, {8, 3}}, "dup", "same word"});
  CHECK(to_text(rep).ends_with("FAIL\n"));
  const nlohmann::json j = to_json(rep);
  CHECK(j.at("campaign") == "injectivity");
  CHECK(j.at("m") == 3);
  CHECK(j.at("bound") == 10);
  CHECK(j.at("ok") == false);
  CHECK(j.at("counts").at("roots") == 4);
  CHECK(j.at("failures")[0].at("roots") == nlohmann::json::parse("[[5,3],[8,3]]"));
  CHECK(j.at("failures")[0].at("check") == "dup");
  CHECK(j.at("failures")[0].at("details") == "same word");
}

TEST_CASE("thread count does not change reports") {
  ::setenv("RIGIDROOTS_THREADS", "1", 1);
  CHECK(worker_count() == 1);
  const auto one = to_json(verify_structure(5, 80)).dump();
  ::setenv("RIGIDROOTS_THREADS", "7", 1);
  CHECK(worker_count() == 7);
  CHECK(to_json(verify_structure(5, 80)).dump() == one);
  ::setenv("RIGIDROOTS_THREADS", "junk", 1);
  CHECK(worker_count() >= 1);
  ::unsetenv("RIGIDROOTS_THREADS");
}

TEST_CASE("parallel_for") {
  std::vector<int> hit(1000, 0);
  parallel_for(hit.size(), [&](std::size_t i) { hit[i] += 1; });
  CHECK(std::count(hit.begin(), hit.end(), 1) == 1000);
  CHECK_THROWS_AS(parallel_for(50, [](std::size_t i) {
                    if (i == 17) throw std::runtime_error("boom");
                  }),
                  std::runtime_error);
  parallel_for(0, [](std::size_t) { FAIL("called"); });
}
