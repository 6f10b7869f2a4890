#ifndef BCT_CAMPAIGNS_HPP
#define BCT_CAMPAIGNS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bct/graph.hpp"

namespace bct {

struct Violation {
  std::string graph_text;  // replayable text-format graph
  std::string computed;
  std::string expected;
};

struct CampaignReport {
  int schema = 1;
  std::string campaign_id;
  std::string corpus_description;
  std::string capacity_note;
  long instances_checked = 0;
  std::vector<Violation> violations;
  double runtime_seconds = 0.0;

  bool passed() const { return violations.empty(); }
};

struct CampaignParams {
  int max_n = -1;           // corpus size override where meaningful
  std::uint64_t seed = 1;   // randomized corpora
  int count = -1;           // instance count override
};

// Campaign ids: T1..T10. Unknown ids throw Error; capacity violations
// throw CapacityError.
CampaignReport run_campaign(const std::string& campaign_id,
                            const CampaignParams& params = {});

std::vector<std::string> campaign_ids();

}  // namespace bct

#endif
