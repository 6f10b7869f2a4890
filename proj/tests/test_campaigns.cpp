#include <doctest.h>

#include <cstdlib>

#include "bct/campaigns.hpp"

using namespace bct;

namespace {

CampaignParams with_max(int n) {
  CampaignParams p;
  p.max_n = n;
  return p;
}

}  // namespace

TEST_CASE("small campaign slices pass") {
  CHECK(run_campaign("T1").passed());
  CHECK(run_campaign("T2", with_max(4)).passed());
  CHECK(run_campaign("T4", with_max(4)).passed());
  CHECK(run_campaign("T5", with_max(4)).passed());
  CHECK(run_campaign("T6", with_max(6)).passed());
  CHECK(run_campaign("T8", with_max(3)).passed());
}

TEST_CASE("seeded random campaign is deterministic") {
  CampaignParams p;
  p.count = 20;
  p.seed = 99;
  auto a = run_campaign("T3", p);
  auto b = run_campaign("T3", p);
  CHECK(a.passed());
  CHECK(a.instances_checked == b.instances_checked);
  CHECK(a.instances_checked == 20);
  CHECK(a.violations.size() == b.violations.size());
}

TEST_CASE("structured campaigns pass") {
  CHECK(run_campaign("T7").passed());
  CHECK(run_campaign("T9").passed());
  CHECK(run_campaign("T10").passed());
}

TEST_CASE("unknown campaign") {
  CHECK_THROWS_AS(run_campaign("T99"), Error);
  CHECK(campaign_ids().size() == 10);
}

TEST_CASE("worker count does not change reports") {
  CampaignParams p;
  p.max_n = 5;
  setenv("BCT_THREADS", "1", 1);
  auto solo = run_campaign("T5", p);
  setenv("BCT_THREADS", "4", 1);
  auto pooled = run_campaign("T5", p);
  unsetenv("BCT_THREADS");
  CHECK(solo.instances_checked == pooled.instances_checked);
  CHECK(solo.violations.size() == pooled.violations.size());
  CHECK(solo.passed());
  CHECK(pooled.passed());
}

TEST_CASE("reports carry the schema and corpus fields") {
  auto r = run_campaign("T2", with_max(3));
  CHECK(r.schema == 1);
  CHECK(r.campaign_id == "T2");
  CHECK(!r.corpus_description.empty());
  CHECK(!r.capacity_note.empty());
  CHECK(r.instances_checked == 8);
  CHECK(r.runtime_seconds >= 0.0);
}
