#pragma once

#include <optional>
#include <vector>

#include "factor/graph.hpp"
#include "factor/verdict.hpp"

namespace factor {

class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(int order)
      : n_(order), a_(static_cast<std::size_t>(order) * order, 0.0) {}

  int order() const { return n_; }

  double get(int i, int j) const { return a_[idx(i, j)]; }

  void set(int i, int j, double value) {
    a_[idx(i, j)] = value;
    a_[idx(j, i)] = value;
  }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * n_ + j;
  }

  int n_;
  std::vector<double> a_;
};

struct Spectrum {
  std::vector<double> values;  // descending
  double tol = 0.0;            // absolute accuracy the values were computed to
};

// L = D - A; row sums are zero. EmptyGraph on order 0.
SymmetricMatrix laplacian(const Graph& g);

// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations with a
// per-sweep threshold; stops when the off-diagonal Frobenius norm drops
// below tol/10, capped at 100 sweeps (ConvergenceError beyond that).
// Deterministic for fixed input.
Spectrum eigenvalues_sym(const SymmetricMatrix& m, double tol);

// Laplacian spectrum of g, sorted descending.
Spectrum laplacian_spectrum(const Graph& g, double tol);

inline constexpr double kDefaultTolerance = 1e-9;

// Condition 12: mu_1 <= (k + 1/2) * mu_{n-1} (additive tol on the right).
// Needs n >= 2 and at least one edge; otherwise NotApplicable, since an
// edgeless graph satisfies the inequality trivially yet has no factor.
ConditionVerdict check_thm12(const Graph& g, int k,
                             double tol = kDefaultTolerance);

struct Lemma21Result {
  bool size_bound_holds = false;  // |X| <= n (mu1 - mu_{n-1}) / (2 mu1)
  // |S| >= 2 mu_{n-1} |X| / (mu1 - mu_{n-1}); absent when mu1 = mu_{n-1}.
  std::optional<bool> separator_bound_holds;
};

// Checks the two separator inequalities for a split (S, X, Y) of V with
// no X-Y edges, X u Y = V - S, |X| <= |Y|, and G - S disconnected.
// InvalidPartition when the split does not satisfy those constraints.
Lemma21Result check_lemma21(const Graph& g, const VertexSet& s,
                            const VertexSet& x, const VertexSet& y,
                            double tol = kDefaultTolerance);

}  // namespace factor
