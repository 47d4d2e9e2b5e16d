#pragma once

#include <json.hpp>

#include "hurwitz/braid.hpp"
#include "hurwitz/cyclic.hpp"
#include "hurwitz/degen.hpp"
#include "hurwitz/invariants.hpp"
#include "hurwitz/qdiff.hpp"

namespace hurwitz::cli {

// Rationals and unbounded counts are strings ("p/q", "n"); sizes, degrees
// and genera are JSON integers.
using Json = nlohmann::ordered_json;

Json to_json(const MonodromyTuple& r);
Json to_json(const Orbit& orbit);
Json to_json(const SlopeReport& report);
Json to_json(const DegenerationReport& report);
Json to_json(const CyclicCoverSpec& spec, const CyclicCrossCheck& check);
Json to_json(const StratumScanRow& row, const OddPartition& nu);

}  // namespace hurwitz::cli
