#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "factor/graph.hpp"

namespace factor {

// A base tree R accepted for the family construction at a given k:
// trimming the leaves off R leaves a nonempty tree whose degrees are all
// odd and at most 2k+1, and each trimmed vertex x carries at most
// (2k+1 - trimmed degree)/2 leaves of R.
struct BaseTreeWitness {
  Graph base;                    // R
  VertexSet leaf_set;            // leaves of R
  Graph trimmed;                 // R minus its leaves
  std::vector<int> trimmed_to_base;  // trimmed vertex -> vertex of R
  std::vector<int> leaf_count;       // leaves of R adjacent to each trimmed vertex
  int k = 0;
};

struct BaseValidation {
  std::optional<BaseTreeWitness> witness;
  std::string rejection;  // names the first violated requirement

  explicit operator bool() const { return witness.has_value(); }
};

bool is_tree(const Graph& g);

BaseValidation validate_base(const Graph& base, int k);

// Derived tree: every trimmed edge gains a degree-2 vertex, and every
// trimmed vertex of trimmed degree 2r+1 < 2k+1 is topped up with pendant
// edges until it carries exactly k-r leaves. Vertices of the base keep
// their labels; subdivision vertices follow in trimmed-edge order, then
// the added leaves in trimmed-vertex order.
Graph construct_tr(const BaseTreeWitness& witness, int k);

// Isomorphism-invariant code of a tree: the parenthesized subtree encoding
// rooted at the tree center, taking the lexicographically smaller of the
// two codes when the tree has two centers. NotATree on other inputs.
std::string canonical_code(const Graph& tree);

class TreeCatalog {
 public:
  TreeCatalog() = default;
  TreeCatalog(int k, int max_order) : k_(k), max_order_(max_order) {}

  int k() const { return k_; }
  int max_order() const { return max_order_; }

  bool contains(int order, const std::string& code) const;
  const std::set<std::string>& codes_at(int order) const;
  bool has_order(int order) const { return members_.count(order) > 0; }
  const std::map<int, std::set<std::string>>& members() const { return members_; }
  const BaseTreeWitness& witness_for(const std::string& code) const;
  int member_count() const;

  void insert(int order, const std::string& code, BaseTreeWitness witness);

 private:
  int k_ = 0;
  int max_order_ = 0;
  std::map<int, std::set<std::string>> members_;
  std::map<std::string, BaseTreeWitness> witnesses_;
};

// Every derived tree of order <= max_order, over all valid base trees.
// A derived tree with trimmed order q has exactly q(2k+3)/2 vertices with
// q even, which bounds the base trees worth enumerating.
TreeCatalog enumerate_catalog(int k, int max_order);

// Membership by canonical code at the tree's order. CatalogTooSmall when
// the tree is larger than the catalog covers.
bool is_member(const Graph& tree, int k, const TreeCatalog& catalog);

// Labeled tree on n >= 2 vertices from a length n-2 sequence over 0..n-1
// (n = 1 gives the one-vertex tree; the sequence must then be empty).
Graph tree_from_pruefer(const std::vector<int>& seq, int n);

}  // namespace factor
