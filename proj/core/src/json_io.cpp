#include "rgl/json_io.hpp"

#include <charconv>
#include <limits>

#include <nlohmann/json.hpp>

#include "rgl/error.hpp"
#include "rgl/graph_io.hpp"
#include "rgl/pattern_expr.hpp"

namespace rgl {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
}

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing JSON field '") + key + "'", 0);
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw ParseError(std::string("JSON field '") + key + "' has the wrong type", 0);
  }
}

// Integers that fit in 64 bits stay numbers; larger ones become log10.
void put_big(Json& j, const std::string& key, const BigInt& v) {
  if (v <= BigInt(std::numeric_limits<long long>::max()) && v >= BigInt(std::numeric_limits<long long>::min())) {
    j[key] = static_cast<long long>(v);
  } else {
    j[key + "_log10"] = static_cast<double>(log10_big(v));
  }
}

Json parameters_json(const std::vector<std::pair<std::string, long long>>& params) {
  Json out = Json::object();
  for (const auto& [k, v] : params) out[k] = v;
  return out;
}

Json partition_json(const VertexPartition& p) {
  Json j;
  j["parts"] = p.parts;
  j["internal_edges"] = p.internal_edges;
  j["internal_degree_max"] = p.internal_degree_max;
  return j;
}

}  // namespace

std::string embedding_to_json(const Embedding& e) {
  Json j;
  j["pattern"] = format_pattern(e.pattern);
  j["roles"] = e.roles;
  return dump(j);
}

Embedding embedding_from_json(std::string_view text) {
  const Json j = parse(text);
  return Embedding{parse_pattern(field<std::string>(j, "pattern")),
                   field<std::vector<std::vector<int>>>(j, "roles")};
}

std::string format_blue_target(const BlueTarget& blue) {
  if (const auto* p = std::get_if<Pattern>(&blue)) return format_pattern(*p);
  if (const auto* c = std::get_if<AnyConnected>(&blue)) return "connected(" + std::to_string(c->order) + ")";
  return "K1+any(" + std::to_string(std::get<AnyJoinOne>(blue).f_order) + ")";
}

BlueTarget parse_blue_target(std::string_view text) {
  auto symbolic = [&](std::string_view head) -> std::optional<int> {
    if (text.substr(0, head.size()) != head || text.back() != ')') return std::nullopt;
    const std::string_view digits = text.substr(head.size(), text.size() - head.size() - 1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || v < 1) {
      throw ParseError("bad order in '" + std::string(text) + "'", head.size());
    }
    return v;
  };
  if (text.empty()) throw ParseError("empty blue target", 0);
  if (auto h = symbolic("connected(")) return AnyConnected{*h};
  if (auto f = symbolic("K1+any(")) return AnyJoinOne{*f};
  return parse_pattern(text);
}

std::string certificate_to_json(const Certificate& c) {
  Json j;
  j["witness_graph6"] = to_graph6(c.witness);
  j["red_pattern"] = format_pattern(c.red_avoided);
  j["blue_pattern"] = format_blue_target(c.blue_avoided);
  j["claimed_bound"] = c.claimed_bound;
  j["construction_tag"] = c.construction_tag;
  j["parameters"] = parameters_json(c.parameters);
  j["construction_parts"] = c.construction_parts;
  Json steps = Json::array();
  for (const auto& s : c.transcript) {
    steps.push_back(Json{{"step", s.name}, {"outcome", to_string(s.outcome)}, {"detail", s.detail}});
  }
  j["transcript"] = steps;
  j["pass"] = c.pass;
  return dump(j);
}

Certificate certificate_from_json(std::string_view text) {
  const Json j = parse(text);
  Certificate c;
  c.witness = from_graph6(field<std::string>(j, "witness_graph6"));
  c.red_avoided = parse_pattern(field<std::string>(j, "red_pattern"));
  c.blue_avoided = parse_blue_target(field<std::string>(j, "blue_pattern"));
  c.claimed_bound = field<long long>(j, "claimed_bound");
  c.construction_tag = field<std::string>(j, "construction_tag");
  if (j.contains("parameters")) {
    for (const auto& [k, v] : j.at("parameters").items()) c.parameters.emplace_back(k, v.get<long long>());
  }
  if (j.contains("construction_parts")) c.construction_parts = field<std::vector<std::vector<int>>>(j, "construction_parts");
  if (j.contains("transcript")) {
    for (const auto& s : j.at("transcript")) {
      TranscriptStep step;
      step.name = field<std::string>(s, "step");
      const auto outcome = field<std::string>(s, "outcome");
      step.outcome = outcome == "pass" ? StepOutcome::kPass
                     : outcome == "fail" ? StepOutcome::kFail
                                         : StepOutcome::kInconclusive;
      step.detail = field<std::string>(s, "detail");
      c.transcript.push_back(std::move(step));
    }
  }
  c.pass = j.contains("pass") && j.at("pass").is_boolean() && j.at("pass").get<bool>();
  return c;
}

std::string bound_to_json(const BoundResult& r) {
  Json j;
  j["kind"] = to_string(r.kind);
  put_big(j, "value", r.value);
  Json prov;
  prov["rule"] = r.provenance.rule;
  prov["parameters"] = parameters_json(r.provenance.parameters);
  if (!r.provenance.lower_source.empty()) prov["lower_source"] = r.provenance.lower_source;
  if (!r.provenance.upper_source.empty()) prov["upper_source"] = r.provenance.upper_source;
  if (!r.provenance.note.empty()) prov["note"] = r.provenance.note;
  j["provenance"] = prov;
  j["hypothesis_met"] = to_string(r.hypothesis);
  if (r.closed_form) put_big(j, "closed_form", *r.closed_form);
  return dump(j);
}

std::string thresholds_to_json(const ThresholdParams& t) {
  Json j;
  j["a_sum"] = t.a_sum;
  put_big(j, "a_prod", t.a_prod);
  j["b"] = t.b;
  j["c_const"] = static_cast<double>(t.c_const);
  j["big_c_const"] = static_cast<double>(t.big_c_const);
  j["term1_log10"] = static_cast<double>(t.term1_log10);
  j["term2_log10"] = static_cast<double>(t.term2_log10);
  j["delta_log10"] = static_cast<double>(t.delta_log10);
  j["eta_log10"] = static_cast<double>(t.eta_log10);
  j["n_min_log10"] = static_cast<double>(t.n_min_log10);
  if (t.n_min) j["n_min"] = t.n_min->str();
  if (t.delta_denominator) j["delta_denominator"] = t.delta_denominator->str();
  return dump(j);
}

std::string partition_to_json(const VertexPartition& p) { return dump(partition_json(p)); }

std::string stability_to_json(const StabilityReport& r) {
  Json j;
  j["epsilon"] = r.epsilon;
  j["p"] = r.p;
  j["order"] = r.order;
  j["gamma"] = r.gamma;
  j["eta_log10"] = r.eta_log10;
  j["min_degree"] = r.min_degree;
  j["min_degree_required"] = r.min_degree_required;
  j["min_degree_hypothesis"] = r.min_degree_hypothesis;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"value", c.value}, {"bound", c.bound}});
  }
  j["checks"] = checks;
  j["pass"] = r.all_pass();
  return dump(j);
}

std::string audit_to_json(const ProofAudit& a) {
  Json j;
  j["order"] = a.order;
  j["p"] = a.p;
  j["h"] = a.h;
  j["n"] = a.n;
  j["ell"] = a.ell;
  j["two_m"] = a.two_m;
  j["m"] = a.m;
  j["z"] = a.z;
  j["s_threshold"] = a.s_threshold;
  j["t_threshold"] = a.t_threshold;
  j["size_deviation"] = a.size_deviation;
  j["size_deviation_bound"] = a.size_deviation_bound;
  Json checks = Json::array();
  for (const auto& c : a.checks) checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = checks;
  j["hypotheses"] = Json{{"kp_free", a.kp_free},
                         {"locally_optimal", a.locally_optimal},
                         {"parts_within_degree_bound", a.parts_within_degree_bound}};
  j["pass"] = a.all_pass();
  return dump(j);
}

std::string search_to_json(const SearchOutcome& s) {
  Json j;
  switch (s.status) {
    case SearchOutcome::Status::kExact:
      j["status"] = "exact";
      break;
    case SearchOutcome::Status::kLowerBound:
      j["status"] = "lower_bound";
      break;
    case SearchOutcome::Status::kInconclusive:
      j["status"] = "inconclusive";
      break;
  }
  j["value"] = s.value;
  j["checked_orders"] = s.checked_orders;
  Json ce = Json::array();
  for (const auto& [order, g] : s.counterexamples) ce.push_back(Json{{"order", order}, {"graph6", to_graph6(g)}});
  j["counterexamples"] = ce;
  if (!s.note.empty()) j["note"] = s.note;
  return dump(j);
}

}  // namespace rgl
