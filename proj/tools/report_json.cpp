#include "report_json.hpp"

#include "hurwitz/notation.hpp"

namespace hurwitz::cli {

namespace {

const char* side_name(Side side) { return side == Side::A ? "A" : "B"; }

Json warnings_of(const DegenerationReport& report) {
  Json warnings = Json::array();
  if (report.low_genus) warnings.push_back("genus below 2");
  if (report.bridge_chain) warnings.push_back("chain of contracted rational bridges");
  return warnings;
}

}  // namespace

Json to_json(const MonodromyTuple& r) { return format_tuple(r); }

Json to_json(const Orbit& orbit) {
  Json members = Json::array();
  for (const auto& m : orbit.members) members.push_back(to_json(m));
  return Json{{"size", orbit.size()}, {"members", std::move(members)}};
}

Json to_json(const SlopeReport& report) {
  return Json{
      {"degree", report.profile.degree()},
      {"profile", format_profile(report.profile)},
      {"orbit_size", report.orbit_size},
      {"orbit_count", report.orbit_count},
      {"delta", to_string(report.delta)},
      {"delta_prime", to_string(report.delta_prime)},
      {"ramification_defect", to_string(report.ramification_defect)},
      {"deg_lambda", to_string(report.deg_lambda)},
      {"deg_delta", to_string(report.deg_delta)},
      {"slope", to_string(report.slope)},
      {"dropped_nodes", report.dropped_nodes},
      {"warnings", report.warnings},
  };
}

Json to_json(const DegenerationReport& report) {
  Json nodes = Json::array();
  for (const auto& node : report.nodes) {
    nodes.push_back({{"cycle", node.cycle_support},
                     {"multiplicity", node.multiplicity},
                     {"survives", node.survives},
                     {"weight", to_string(node.weight)},
                     {"component_a", node.component_a},
                     {"component_b", node.component_b}});
  }
  Json components = Json::array();
  for (const auto& c : report.components) {
    components.push_back({{"side", side_name(c.side)},
                          {"letters", c.letters},
                          {"genus", c.genus},
                          {"node_count", c.node_count}});
  }
  return Json{
      {"tuple", to_json(report.tuple)},
      {"direction", static_cast<int>(report.direction)},
      {"node_permutation", format_permutation(report.node_permutation)},
      {"nodes", std::move(nodes)},
      {"components", std::move(components)},
      {"delta", to_string(report.delta)},
      {"delta_prime", to_string(report.delta_prime)},
      {"arithmetic_genus", report.arithmetic_genus},
      {"stable_components", report.stable_components},
      {"stable_nodes", report.stable_nodes},
      {"rational_tails", report.rational_tail_count()},
      {"dual_graph_connected", dual_graph_connected(report)},
      {"warnings", warnings_of(report)},
  };
}

Json to_json(const CyclicCoverSpec& spec, const CyclicCrossCheck& check) {
  const int genus = cyclic_genus(spec);
  const auto bound = degree_bound_check(genus, spec.degree());
  Json cross{
      {"passed", check.passed},
      {"orbit_size", check.orbit_size},
      {"delta", {to_string(check.delta[0]), to_string(check.delta[1]), to_string(check.delta[2])}},
      {"delta_prime",
       {to_string(check.delta_prime[0]), to_string(check.delta_prime[1]),
        to_string(check.delta_prime[2])}},
      {"expected_delta",
       {to_string(check.expected[0]), to_string(check.expected[1]), to_string(check.expected[2])}},
      {"rational_tails", check.rational_tails},
      {"pipeline_slope", to_string(check.pipeline_slope)},
      {"pipeline_deg_lambda", to_string(check.pipeline_deg_lambda)},
      {"failures", check.failures},
  };
  Json warnings = Json::array();
  if (genus < 2) warnings.push_back("genus below 2");
  return Json{
      {"d", spec.degree()},
      {"exponents", spec.exponents()},
      {"tuple", to_json(cyclic_tuple(spec))},
      {"genus", genus},
      {"s12", spec.s(1, 2)},
      {"s13", spec.s(1, 3)},
      {"s23", spec.s(2, 3)},
      {"slope", to_string(check.closed_form_slope)},
      {"lyapunov_sum", to_string(check.lyapunov_sum)},
      {"degree_bound", bound ? Json(*bound) : Json(nullptr)},
      {"cross_check", std::move(cross)},
      {"warnings", std::move(warnings)},
  };
}

Json to_json(const StratumScanRow& row, const OddPartition& nu) {
  Json out{{"d", row.d}};
  if (!row.computed()) {
    out["N"] = to_string(row.N);
    out["skipped_reason"] = *row.skipped_reason;
    return out;
  }
  const SvLyapunovReport sv = sv_lyapunov_relation(nu, row);
  Json orbits = Json::array();
  for (const auto& o : row.orbits) {
    orbits.push_back({{"size", o.size},
                      {"delta", to_string(o.delta)},
                      {"delta_prime", to_string(o.delta_prime)},
                      {"slope", to_string(o.slope)},
                      {"identity_holds", o.identity_holds}});
  }
  out["N"] = to_string(row.N);
  out["delta"] = to_string(row.delta);
  out["delta_prime"] = to_string(row.delta_prime);
  out["slope"] = to_string(row.slope);
  out["sv_estimate"] = to_string(row.sv_estimate);
  out["sv_difference"] = row.sv_difference ? Json(to_string(*row.sv_difference)) : Json(nullptr);
  out["L_estimate"] = to_string(sv.L);
  out["orbit_count"] = row.orbit_count;
  out["rational_tails"] = row.rational_tails;
  out["no_tails"] = row.no_tails;
  out["identity_holds"] = row.identity_holds;
  out["sv_identity_holds"] = sv.identity_holds;
  out["orbits"] = std::move(orbits);
  out["skipped_reason"] = nullptr;
  return out;
}

}  // namespace hurwitz::cli
