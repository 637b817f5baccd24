#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "factor/graph.hpp"
#include "factor/tree_family.hpp"

namespace factor {

inline constexpr int kFactorSearchCap = 12;

// One component of a factor: either a star K_{1,j} with 1 <= j <= k, or a
// catalog tree identified by its canonical code. Edges are listed in the
// host graph's labels.
struct FactorBlock {
  enum class Kind { Star, FamilyMember };
  Kind kind = Kind::Star;
  int star_leaves = 0;       // j, for stars
  std::string family_code;   // canonical code, for family members
  VertexSet vertices;
  std::vector<std::pair<int, int>> edges;

  bool operator==(const FactorBlock&) const = default;
};

struct FactorCertificate {
  std::vector<FactorBlock> blocks;

  bool operator==(const FactorCertificate&) const = default;
};

struct VerifyResult {
  bool ok = false;
  std::string reason;  // first failure

  explicit operator bool() const { return ok; }
};

// Backtracking search for a spanning partition into allowed components.
// Deterministic: always extends the lowest unassigned vertex, trying
// candidate blocks in increasing size and lexicographic order; stars are
// preferred over family members (their sizes never overlap). Returns
// nothing when no factor exists.
std::optional<FactorCertificate> find_factor(const Graph& g, int k,
                                             const TreeCatalog& catalog,
                                             int cap = kFactorSearchCap);

// Re-derives every certificate invariant against the graph and catalog,
// independently of the search: partition, edge membership, star shape,
// spanning-tree shape and canonical-code identity for family blocks.
VerifyResult verify_certificate(const Graph& g, int k,
                                const FactorCertificate& cert,
                                const TreeCatalog& catalog);

// Calls fn with each spanning tree (as an edge list) exactly once;
// fn returns false to stop early. NotConnected on disconnected input.
void for_each_spanning_tree(
    const Graph& g,
    const std::function<bool(const std::vector<std::pair<int, int>>&)>& fn,
    int cap = kFactorSearchCap);

std::vector<std::vector<std::pair<int, int>>> spanning_trees(
    const Graph& g, int cap = kFactorSearchCap);

}  // namespace factor
