#pragma once

#include <functional>
#include <vector>

#include "factor/graph.hpp"
#include "factor/verdict.hpp"

namespace factor {

// Default search caps; callers may raise them explicitly.
inline constexpr int kDeficiencyCap = 24;
inline constexpr int kAlphaCap = 20;

// Exact maximum of 2*i(G-S) - (2k+1)*|S| over all S, with one maximizer.
// All arithmetic is integral by construction.
struct DeficiencyReport {
  int k = 0;
  VertexSet best_set;   // a maximizer; numerically smallest among them
  int isolated = 0;     // i(G - best_set)
  long long value = 0;  // 2*isolated - (2k+1)*|best_set|; always >= 0

  bool operator==(const DeficiencyReport&) const = default;
};
static_assert(std::is_integral_v<decltype(DeficiencyReport::value)>);
static_assert(std::is_integral_v<decltype(DeficiencyReport::isolated)>);

// Exhaustive search over the sets S = N(I) for independent I: in any
// maximizer every vertex of S has a neighbor isolated by S (dropping one
// that has none raises the objective by 2k+1), so every maximizer is the
// neighborhood of its own isolated set and the restriction loses nothing.
DeficiencyReport deficiency(const Graph& g, int k, int cap = kDeficiencyCap);

// The factor exists exactly when the deficiency maximum is zero.
bool has_factor_thm11(const Graph& g, int k, int cap = kDeficiencyCap);

ConditionVerdict check_thm11(const Graph& g, int k, int cap = kDeficiencyCap);

int independence_number(const Graph& g, int cap = kAlphaCap);

// Calls fn on every independent set of exactly the requested size, in
// ascending lexicographic order; fn returns false to stop early.
void for_each_independent_set_of_size(
    const Graph& g, int size, const std::function<bool(const VertexSet&)>& fn,
    int cap = kAlphaCap);

std::vector<VertexSet> independent_sets_of_size(const Graph& g, int size,
                                                int cap = kAlphaCap);

// No vertex set of size < t disconnects the graph, and n >= t+1.
// Exhaustive separator enumeration.
bool is_t_connected(const Graph& g, int t, int cap = kAlphaCap);

// binom(n - floor((k+1/2)t) - 1, 2) + t*(floor((k+1/2)t) + 1), the edge
// count of the densest graph a removal-set of size t can leave short of
// a factor. Exact integers throughout.
long long extremal_edge_threshold(long long n, int k, int t);

// Condition 13: t-connected, order at least (2k^2+5k+1)t + k^2+5k+2 over
// 2k, and strictly more edges than the threshold above.
ConditionVerdict check_thm13(const Graph& g, int k, int t, int cap = kAlphaCap);

// Condition 14: minimum degree delta >= 1, and every independent set of
// floor((k+1/2)delta)+1 vertices contains one of degree >= 2n/(2k+3).
ConditionVerdict check_thm14(const Graph& g, int k, int cap = kAlphaCap);

// Condition 15: (2k+1)*delta >= 2*alpha.
ConditionVerdict check_thm15(const Graph& g, int k, int cap = kAlphaCap);

}  // namespace factor
