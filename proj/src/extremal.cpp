#include "factor/extremal.hpp"

#include <string>

namespace factor {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvalidParameters, what);
}

// floor((k + 1/2) * t) in exact integers.
long long half_floor(long long k, long long t) { return (2 * k + 1) * t / 2; }

Graph clique_join_independents(int clique, int inner_clique, int independents) {
  Graph rest = inner_clique > 0
                   ? disjoint_union(complete_graph(inner_clique),
                                    empty_graph(independents))
                   : empty_graph(independents);
  return join(complete_graph(clique), rest);
}

}  // namespace

Graph extremal_remark31(int n, int k, int t) {
  require(k >= 2, "k must be at least 2");
  require(1 <= t && t <= k - 1, "t must satisfy 1 <= t <= k-1");
  const long long iso = half_floor(k, t) + 1;           // floor((k+1/2)t)+1
  const long long n1 = n - (half_floor(k, t) + t) - 1;  // n - floor((k+3/2)t) - 1
  require(n1 >= 0, "n too small for the given k, t");
  return clique_join_independents(t, static_cast<int>(n1), static_cast<int>(iso));
}

Graph extremal_remark41(int k, int delta) {
  require(k >= 2, "k must be at least 2");
  require(delta >= 1, "delta must be at least 1");
  require(delta % 2 == 1, "delta must be odd");
  const long long iso = half_floor(k, delta) + 1;
  return clique_join_independents(delta, 0, static_cast<int>(iso));
}

Graph extremal_remark51(int k, int t) {
  require(k >= 2, "k must be at least 2");
  require(t >= 0, "t must be nonnegative");
  const long long iso = static_cast<long long>(1 + t) * (2 * k + 1) + 1;
  return clique_join_independents(2 + 2 * t, 0, static_cast<int>(iso));
}

Graph extremal_g1(int n, int k, int s) {
  require(k >= 2, "k must be at least 2");
  require(s >= 1, "s must be at least 1");
  const long long iso = half_floor(k, s) + 1;
  const long long n1 = n - (half_floor(k, s) + s) - 1;
  require(n1 >= 0, "n too small for the given k, s");
  return clique_join_independents(s, static_cast<int>(n1), static_cast<int>(iso));
}

}  // namespace factor
