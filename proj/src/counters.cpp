#include "nwsp/counters.hpp"

#include <json.hpp>

namespace nwsp {

std::string counters_to_json(const RunCounters& c, int indent) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["n_input"] = c.n_input;
  j["n0"] = c.n0;
  j["eta"] = c.eta;
  j["L"] = c.L;
  j["gamma"] = c.gamma;
  j["seed"] = c.seed;
  j["base_case"] = c.base_case;
  j["vertices_final"] = c.vertices_final;
  j["edges_final"] = c.edges_final;
  j["relaxations_total"] = c.relaxations_total;
  ordered_json its = ordered_json::array();
  for (const auto& it : c.iterations) {
    ordered_json x;
    x["t"] = it.t;
    x["n_before"] = it.n_before;
    x["n_after"] = it.n_after;
    x["m_before"] = it.m_before;
    x["m_after"] = it.m_after;
    x["eta"] = it.eta;
    x["b"] = it.b;
    x["lambda"] = it.lambda;
    x["h"] = it.h;
    x["sum_u"] = it.sum_u;
    x["sum_u_sq"] = it.sum_u_sq;
    x["new_heavy"] = it.new_heavy;
    x["in_steiner"] = it.in_steiner;
    x["out_steiner"] = it.out_steiner;
    x["n_steiner"] = it.n_steiner;
    x["simple_merges"] = it.simple_merges;
    x["addedge_top_calls"] = it.addedge_top_calls;
    x["addedge_calls"] = it.addedge_calls;
    x["addedge_max_depth"] = it.addedge_max_depth;
    x["addedge_max_work"] = it.addedge_max_work;
    x["deferred_in"] = it.deferred_in;
    x["deferred_out"] = it.deferred_out;
    x["replayed"] = it.replayed;
    x["relaxations"] = it.relaxations;
    x["clamped_deltas"] = it.clamped_deltas;
    x["delta_cases"] = {it.delta_cases[1], it.delta_cases[2], it.delta_cases[3], it.delta_cases[4]};
    its.push_back(std::move(x));
  }
  j["iterations"] = std::move(its);
  return j.dump(indent);
}

}  // namespace nwsp
