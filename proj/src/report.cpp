#include <json.hpp>

#include "bolforge/properties.hpp"

namespace bolforge {

namespace {

nlohmann::ordered_json witness_json(const Witness& w) {
  nlohmann::ordered_json tuple = nlohmann::ordered_json::array();
  for (Element x : w.elements) tuple.push_back(x.index());
  if (w.relation.empty()) return tuple;
  return {{"relation", w.relation}, {"tuple", tuple}};
}

std::vector<Element> members_of(const ElementSubset& s) {
  return {s.members().begin(), s.members().end()};
}

}  // namespace

const Verdict* PropertyReport::find(std::string_view property) const {
  for (const auto& [name, verdict] : verdicts)
    if (name == property) return &verdict;
  return nullptr;
}

PropertyReport build_property_report(const LoopTable& loop, std::string loop_id) {
  PropertyReport r;
  r.loop_id = std::move(loop_id);
  r.order = loop.order();
  r.identity = loop.identity().index();

  const ElementSubset comm = commutant(loop);
  const ElementSubset cent = center(loop);
  const ElementSubset bol = bol_elements(loop);

  auto add = [&](std::string name, Verdict v) { r.verdicts.emplace_back(std::move(name), std::move(v)); };
  add("two-sided-inverses", has_two_sided_inverses(loop));
  add("left-bol", is_left_bol(loop));
  add("right-bol", is_right_bol(loop));
  add("moufang", is_moufang(loop));
  add("associative", is_associative(loop));
  add("commutative", is_commutative(loop));
  add("lip", has_lip(loop));
  add("lap", has_lap(loop));
  add("power-associative", is_power_associative(loop));
  add("uniquely-2-divisible", is_uniquely_2_divisible(loop));

  Verdict comm_sub = is_subloop(comm);
  const bool comm_closed = comm_sub.holds;
  add("commutant-subloop", std::move(comm_sub));
  if (comm_closed) add("commutant-normal", is_normal(comm));
  add("commutant-twisted-closed", is_twisted_closed(comm, Bracketing::RightNested));
  add("commutant-twisted-closed-left-nested", is_twisted_closed(comm, Bracketing::LeftNested));
  add("center-subloop", is_subloop(cent));
  if (r.verdicts.back().second.holds) add("center-normal", is_normal(cent));
  add("bol-elements-subloop", is_subloop(bol));

  r.sets.emplace_back("commutant", members_of(comm));
  r.sets.emplace_back("center", members_of(cent));
  r.sets.emplace_back("bol-elements", members_of(bol));
  return r;
}

std::string to_json(const PropertyReport& report) {
  nlohmann::ordered_json j;
  j["loop"] = report.loop_id;
  j["order"] = report.order;
  j["identity"] = report.identity;
  nlohmann::ordered_json props = nlohmann::ordered_json::object();
  for (const auto& [name, v] : report.verdicts) {
    if (v.holds) {
      props[name] = "holds";
    } else {
      nlohmann::ordered_json ws = nlohmann::ordered_json::array();
      for (const auto& w : v.witnesses) ws.push_back(witness_json(w));
      props[name] = {{"fails", ws}};
    }
  }
  j["properties"] = std::move(props);
  nlohmann::ordered_json sets = nlohmann::ordered_json::object();
  for (const auto& [name, members] : report.sets) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (Element x : members) arr.push_back(x.index());
    sets[name] = std::move(arr);
  }
  j["sets"] = std::move(sets);
  return j.dump(2) + "\n";
}

}  // namespace bolforge
