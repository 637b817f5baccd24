#include "factor/json_report.hpp"

namespace factor {

using nlohmann::json;

void to_json(json& j, const VertexSet& s) {
  j = json{{"universe", s.universe()}, {"members", s.to_vector()}};
}

void from_json(const json& j, VertexSet& s) {
  s = VertexSet(j.at("universe").get<int>());
  for (int v : j.at("members").get<std::vector<int>>()) s.add(v);
}

void to_json(json& j, const DeficiencyReport& r) {
  j = json{{"k", r.k},
           {"value", r.value},
           {"isolated", r.isolated},
           {"best_set", r.best_set}};
}

void from_json(const json& j, DeficiencyReport& r) {
  j.at("k").get_to(r.k);
  j.at("value").get_to(r.value);
  j.at("isolated").get_to(r.isolated);
  j.at("best_set").get_to(r.best_set);
}

namespace {

json witness_to_json(const Witness& w) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return json{{"type", "none"}};
        } else if constexpr (std::is_same_v<T, ViolatingSetWitness>) {
          return json{{"type", "violating_set"},
                      {"set", x.set},
                      {"isolated", x.isolated},
                      {"value", x.value}};
        } else if constexpr (std::is_same_v<T, EigenvalueWitness>) {
          return json{{"type", "eigenvalues"},
                      {"mu1", x.mu1},
                      {"mu_second_smallest", x.mu_second_smallest}};
        } else if constexpr (std::is_same_v<T, EdgeCountWitness>) {
          return json{{"type", "edge_count"},
                      {"edges", x.edges},
                      {"threshold", x.threshold},
                      {"t", x.t}};
        } else if constexpr (std::is_same_v<T, IndependentSetWitness>) {
          return json{{"type", "independent_set"},
                      {"set", x.set},
                      {"degrees", x.degrees}};
        } else {
          return json{{"type", "degree_alpha"},
                      {"min_degree", x.min_degree},
                      {"alpha", x.alpha}};
        }
      },
      w);
}

Witness witness_from_json(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "none") return std::monostate{};
  if (type == "violating_set") {
    ViolatingSetWitness w;
    j.at("set").get_to(w.set);
    j.at("isolated").get_to(w.isolated);
    j.at("value").get_to(w.value);
    return w;
  }
  if (type == "eigenvalues") {
    EigenvalueWitness w;
    j.at("mu1").get_to(w.mu1);
    j.at("mu_second_smallest").get_to(w.mu_second_smallest);
    return w;
  }
  if (type == "edge_count") {
    EdgeCountWitness w;
    j.at("edges").get_to(w.edges);
    j.at("threshold").get_to(w.threshold);
    j.at("t").get_to(w.t);
    return w;
  }
  if (type == "independent_set") {
    IndependentSetWitness w;
    j.at("set").get_to(w.set);
    j.at("degrees").get_to(w.degrees);
    return w;
  }
  if (type == "degree_alpha") {
    DegreeAlphaWitness w;
    j.at("min_degree").get_to(w.min_degree);
    j.at("alpha").get_to(w.alpha);
    return w;
  }
  throw Error(ErrorKind::FormatError, "unknown witness type: " + type);
}

}  // namespace

void to_json(json& j, const ConditionVerdict& v) {
  j = json{{"condition", condition_number(v.condition)},
           {"applicable", v.applicable},
           {"reason", v.reason},
           {"holds", v.holds.has_value() ? json(*v.holds) : json(nullptr)},
           {"witness", witness_to_json(v.witness)}};
}

void from_json(const json& j, ConditionVerdict& v) {
  v.condition = condition_from_number(j.at("condition").get<int>());
  j.at("applicable").get_to(v.applicable);
  j.at("reason").get_to(v.reason);
  v.holds = j.at("holds").is_null() ? std::nullopt
                                    : std::optional<bool>(j.at("holds").get<bool>());
  v.witness = witness_from_json(j.at("witness"));
}

void to_json(json& j, const FactorBlock& b) {
  j = json{{"kind", b.kind == FactorBlock::Kind::Star ? "star" : "family"},
           {"vertices", b.vertices},
           {"edges", b.edges}};
  if (b.kind == FactorBlock::Kind::Star)
    j["leaves"] = b.star_leaves;
  else
    j["code"] = b.family_code;
}

void from_json(const json& j, FactorBlock& b) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "star") {
    b.kind = FactorBlock::Kind::Star;
    j.at("leaves").get_to(b.star_leaves);
    b.family_code.clear();
  } else if (kind == "family") {
    b.kind = FactorBlock::Kind::FamilyMember;
    j.at("code").get_to(b.family_code);
    b.star_leaves = 0;
  } else {
    throw Error(ErrorKind::FormatError, "unknown block kind: " + kind);
  }
  j.at("vertices").get_to(b.vertices);
  j.at("edges").get_to(b.edges);
}

void to_json(json& j, const FactorCertificate& c) {
  j = json{{"blocks", c.blocks}};
}

void from_json(const json& j, FactorCertificate& c) {
  j.at("blocks").get_to(c.blocks);
}

void to_json(json& j, const Spectrum& s) {
  j = json{{"values", s.values}, {"tol", s.tol}};
}

void to_json(json& j, const SweepRow& r) {
  j = json{{"graph6", r.graph6},
           {"error", r.error},
           {"n", r.n},
           {"m", r.m},
           {"deficiency", r.deficiency_value},
           {"factor_exists", r.factor_exists},
           {"builder_found", r.builder_found.has_value()
                                 ? json(*r.builder_found)
                                 : json(nullptr)},
           {"builder_verified", r.builder_verified},
           {"t12", r.t12},
           {"t13", r.t13},
           {"t14", r.t14},
           {"t15", r.t15},
           {"counterexample", r.counterexample()}};
}

void from_json(const json& j, SweepRow& r) {
  j.at("graph6").get_to(r.graph6);
  j.at("error").get_to(r.error);
  j.at("n").get_to(r.n);
  j.at("m").get_to(r.m);
  j.at("deficiency").get_to(r.deficiency_value);
  j.at("factor_exists").get_to(r.factor_exists);
  r.builder_found = j.at("builder_found").is_null()
                        ? std::nullopt
                        : std::optional<bool>(j.at("builder_found").get<bool>());
  j.at("builder_verified").get_to(r.builder_verified);
  j.at("t12").get_to(r.t12);
  j.at("t13").get_to(r.t13);
  j.at("t14").get_to(r.t14);
  j.at("t15").get_to(r.t15);
}

void to_json(json& j, const SweepReport& r) {
  j = json{{"rows", r.rows},
           {"aggregates",
            {{"rows", r.rows.size()},
             {"parse_errors", r.parse_errors},
             {"factors", r.factor_count},
             {"holds12", r.holds12},
             {"holds13", r.holds13},
             {"holds14", r.holds14},
             {"holds15", r.holds15},
             {"counterexamples", r.counterexamples},
             {"builder_mismatches", r.builder_mismatches}}}};
}

void from_json(const json& j, SweepReport& r) {
  j.at("rows").get_to(r.rows);
  const json& agg = j.at("aggregates");
  agg.at("parse_errors").get_to(r.parse_errors);
  agg.at("factors").get_to(r.factor_count);
  agg.at("holds12").get_to(r.holds12);
  agg.at("holds13").get_to(r.holds13);
  agg.at("holds14").get_to(r.holds14);
  agg.at("holds15").get_to(r.holds15);
  agg.at("counterexamples").get_to(r.counterexamples);
  agg.at("builder_mismatches").get_to(r.builder_mismatches);
}

}  // namespace factor
