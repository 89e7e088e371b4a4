#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "fclab/ring.hpp"
#include "fclab/sequence.hpp"

namespace fclab {

/// One batch input: the ring, the two ideals, the sequence split, the windows
/// and the checks to run.  Parsing is round-trip stable (sorted keys).
struct Scenario {
  RingSpec ring;
  MonomialIdeal I1, I2;
  int k1 = 1, k2 = 1;
  BidegreeWindow window{4, 4};
  int fiber_nmax = 6;
  std::vector<std::string> checks;  // validated against the registry

  static Scenario from_json(const nlohmann::json& j);
  static Scenario load(const std::string& path);
  nlohmann::json to_json() const;

  /// Canonical serialized form; the basis of every cache key.
  std::string canonical() const;
};

nlohmann::json ideal_to_json(const MonomialIdeal& I);
MonomialIdeal ideal_from_json(const nlohmann::json& j, int d);

}  // namespace fclab
