#pragma once

#include "factor/graph.hpp"

namespace factor {

// Tight families showing the sufficient conditions cannot be weakened.
// Clique vertices always come first in the labeling, then the inner
// clique (where present), then the independent part.

// K_t v (K_{n - floor((k+3/2)t) - 1} u (floor((k+1/2)t)+1) K_1),
// for 1 <= t <= k-1. Its size meets the condition-13 edge bound exactly.
Graph extremal_remark31(int n, int k, int t);

// K_delta v (floor((k+1/2)delta)+1) K_1 for odd delta >= 1; sits exactly
// on the condition-14 degree boundary (2k+3)*delta = 2n - 1.
Graph extremal_remark41(int k, int delta);

// K_{2+2t} v ((1+t)(2k+1)+1) K_1 for t >= 0; sits exactly on the
// condition-15 boundary (2k+1)*delta = 2*alpha - 2.
Graph extremal_remark51(int k, int t);

// K_s v (K_{n1} u (floor((k+1/2)s)+1) K_1) with n1 = n - floor((k+3/2)s) - 1,
// the densest graph with a set of s vertices whose removal isolates
// floor((k+1/2)s)+1 vertices.
Graph extremal_g1(int n, int k, int s);

}  // namespace factor
