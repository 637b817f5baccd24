#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "factor/vertex_set.hpp"

namespace factor {

// Identifiers for the five checkable conditions; 11 is the exact
// characterization, 12-15 the one-sided sufficient conditions.
enum class Condition { T11, T12, T13, T14, T15 };

const char* to_string(Condition c);
Condition condition_from_number(int number);  // 11..15
int condition_number(Condition c);

struct ViolatingSetWitness {
  VertexSet set;       // removing it isolates too many vertices
  int isolated = 0;    // isolated vertices left behind
  long long value = 0; // 2*isolated - (2k+1)*|set|
  bool operator==(const ViolatingSetWitness&) const = default;
};

struct EigenvalueWitness {
  double mu1 = 0.0;         // largest Laplacian eigenvalue
  double mu_second_smallest = 0.0;
  bool operator==(const EigenvalueWitness&) const = default;
};

struct EdgeCountWitness {
  long long edges = 0;
  long long threshold = 0;
  int t = 0;
  bool operator==(const EdgeCountWitness&) const = default;
};

struct IndependentSetWitness {
  VertexSet set;             // independent set of size floor((k+1/2)delta)+1
  std::vector<int> degrees;  // degrees of its members, ascending vertex order
  bool operator==(const IndependentSetWitness&) const = default;
};

struct DegreeAlphaWitness {
  int min_degree = 0;
  int alpha = 0;
  bool operator==(const DegreeAlphaWitness&) const = default;
};

using Witness = std::variant<std::monostate, ViolatingSetWitness,
                             EigenvalueWitness, EdgeCountWitness,
                             IndependentSetWitness, DegreeAlphaWitness>;

struct ConditionVerdict {
  Condition condition = Condition::T11;
  bool applicable = false;
  std::string reason;                // why the check does not apply
  std::optional<bool> holds;         // present iff applicable
  Witness witness;

  bool applicable_and_holds() const {
    return applicable && holds.has_value() && *holds;
  }
  bool operator==(const ConditionVerdict&) const = default;
};

ConditionVerdict not_applicable(Condition c, std::string reason);

}  // namespace factor
