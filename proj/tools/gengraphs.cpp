// Exhaustive generation of small graphs up to isomorphism, written as
// graph6 lines. Used once to produce the bundled corpus under data/.
//
// Level-by-level vertex extension: every graph on n vertices arises from
// some graph on n-1 vertices plus a neighborhood mask for the new vertex.
// Candidates are deduplicated by a canonical form (the minimum
// upper-triangle bit pattern over all permutations that sort the degree
// sequence, which prunes the n! blowup to the degree classes).

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "factor/graph.hpp"
#include "factor/graph6.hpp"

namespace {

constexpr int kMaxN = 10;

// Adjacency as one bitmask row per vertex.
using Rows = std::array<std::uint16_t, kMaxN>;

std::uint64_t upper_triangle_code(const Rows& rows, int n,
                                  const std::vector<int>& pos) {
  // pos[original vertex] = position under the candidate ordering.
  std::uint64_t code = 0;
  int bit = 0;
  std::vector<int> at(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) at[static_cast<std::size_t>(pos[v])] = v;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (rows[static_cast<std::size_t>(at[i])] >> at[j] & 1)
        code |= std::uint64_t{1} << bit;
  return code;
}

// Minimum code over all degree-sorted orderings.
std::uint64_t canonical_code(const Rows& rows, int n) {
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = std::popcount(rows[static_cast<std::size_t>(v)]);

  // Group vertices into classes of equal degree, descending.
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (deg[static_cast<std::size_t>(a)] != deg[static_cast<std::size_t>(b)])
      return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)];
    return a < b;
  });
  std::vector<std::pair<std::size_t, std::size_t>> classes;  // [begin, end)
  std::size_t begin = 0;
  for (std::size_t i = 1; i <= order.size(); ++i) {
    if (i == order.size() ||
        deg[static_cast<std::size_t>(order[i])] !=
            deg[static_cast<std::size_t>(order[begin])]) {
      classes.emplace_back(begin, i);
      begin = i;
    }
  }

  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> pos(static_cast<std::size_t>(n));
  // Cartesian product of within-class permutations.
  auto rec = [&](auto&& self, std::size_t cls) -> void {
    if (cls == classes.size()) {
      for (int v = 0; v < n; ++v)
        pos[static_cast<std::size_t>(order[static_cast<std::size_t>(v)])] = v;
      best = std::min(best, upper_triangle_code(rows, n, pos));
      return;
    }
    auto [b, e] = classes[cls];
    std::sort(order.begin() + static_cast<std::ptrdiff_t>(b),
              order.begin() + static_cast<std::ptrdiff_t>(e));
    do {
      self(self, cls + 1);
    } while (std::next_permutation(order.begin() + static_cast<std::ptrdiff_t>(b),
                                   order.begin() + static_cast<std::ptrdiff_t>(e)));
  };
  rec(rec, 0);
  return best;
}

Rows rows_from_code(std::uint64_t code, int n) {
  Rows rows{};
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (code >> bit & 1) {
        rows[static_cast<std::size_t>(i)] |= std::uint16_t(1) << j;
        rows[static_cast<std::size_t>(j)] |= std::uint16_t(1) << i;
      }
  return rows;
}

bool rows_connected(const Rows& rows, int n) {
  if (n == 0) return false;
  std::uint16_t seen = 1;
  std::uint16_t frontier = 1;
  while (frontier) {
    std::uint16_t next = 0;
    for (int v = 0; v < n; ++v)
      if (frontier >> v & 1) next |= rows[static_cast<std::size_t>(v)];
    frontier = next & static_cast<std::uint16_t>(~seen);
    seen |= next;
  }
  return std::popcount(seen) == n;
}

factor::Graph rows_to_graph(const Rows& rows, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rows[static_cast<std::size_t>(u)] >> v & 1) edges.emplace_back(u, v);
  return factor::Graph(n, edges);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exhaustive small-graph corpus generator"};
  int max_n = 8;
  bool connected_only = true;
  std::string output = "-";
  app.add_option("--max-n", max_n, "largest order to generate")
      ->check(CLI::Range(1, kMaxN));
  app.add_flag("--connected,!--all", connected_only,
               "keep only connected graphs (default) or all");
  app.add_option("-o,--output", output, "output path, - for stdout");
  CLI11_PARSE(app, argc, argv);

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (output != "-") {
    file.open(output);
    if (!file) {
      std::cerr << "cannot open " << output << "\n";
      return 1;
    }
    out = &file;
  }

  std::vector<std::uint64_t> level = {0};  // the single graph on 1 vertex
  auto emit = [&](const std::vector<std::uint64_t>& codes, int n) {
    std::size_t kept = 0;
    for (std::uint64_t code : codes) {
      Rows rows = rows_from_code(code, n);
      if (connected_only && !rows_connected(rows, n)) continue;
      *out << factor::write_graph6(rows_to_graph(rows, n)) << "\n";
      ++kept;
    }
    std::cerr << "n=" << n << ": " << codes.size() << " graphs, " << kept
              << " written\n";
  };

  emit(level, 1);
  for (int n = 2; n <= max_n; ++n) {
    std::set<std::uint64_t> next;
    for (std::uint64_t code : level) {
      Rows rows = rows_from_code(code, n - 1);
      for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        Rows extended = rows;
        extended[static_cast<std::size_t>(n - 1)] =
            static_cast<std::uint16_t>(mask);
        for (int v = 0; v < n - 1; ++v)
          if (mask >> v & 1)
            extended[static_cast<std::size_t>(v)] |= std::uint16_t(1) << (n - 1);
        next.insert(canonical_code(extended, n));
      }
    }
    level.assign(next.begin(), next.end());
    emit(level, n);
  }
  return 0;
}
