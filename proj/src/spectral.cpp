#include "factor/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace factor {

SymmetricMatrix laplacian(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw Error(ErrorKind::EmptyGraph, "Laplacian of an order-0 graph");
  SymmetricMatrix l(n);
  for (int v = 0; v < n; ++v) l.set(v, v, static_cast<double>(g.degree(v)));
  for (auto [u, v] : g.edges()) l.set(u, v, -1.0);
  return l;
}

namespace {

double off_diagonal_frobenius(const std::vector<double>& a, int n) {
  double sum = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double x = a[static_cast<std::size_t>(i) * n + j];
      sum += 2.0 * x * x;
    }
  return std::sqrt(sum);
}

}  // namespace

Spectrum eigenvalues_sym(const SymmetricMatrix& m, double tol) {
  if (!(tol > 0.0))
    throw Error(ErrorKind::InvalidParameters, "tolerance must be positive");
  const int n = m.order();
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double x = m.get(i, j);
      if (!std::isfinite(x))
        throw Error(ErrorKind::NumericError, "non-finite matrix entry");
      a[static_cast<std::size_t>(i) * n + j] = x;
    }

  auto at = [&](int i, int j) -> double& {
    return a[static_cast<std::size_t>(i) * n + j];
  };

  const double stop = tol / 10.0;
  bool converged = (n <= 1);
  for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
    const double off = off_diagonal_frobenius(a, n);
    if (off < stop) {
      converged = true;
      break;
    }
    // Rotating only entries above this threshold still guarantees progress:
    // if every off-diagonal entry were below off/n^2 the norm could not
    // reach off.
    const double threshold = off / (static_cast<double>(n) * n);
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (std::abs(apq) <= threshold) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0)
                             ? 1.0 / (theta + std::sqrt(theta * theta + 1.0))
                             : 1.0 / (theta - std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = at(r, p);
          const double arq = at(r, q);
          at(r, p) = at(p, r) = c * arp - s * arq;
          at(r, q) = at(q, r) = s * arp + c * arq;
        }
        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = at(q, p) = 0.0;
      }
    }
  }
  if (!converged && off_diagonal_frobenius(a, n) >= stop)
    throw Error(ErrorKind::ConvergenceError,
                "Jacobi iteration did not converge in 100 sweeps");

  Spectrum out;
  out.tol = tol;
  out.values.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.values.push_back(at(i, i));
  std::sort(out.values.begin(), out.values.end(), std::greater<double>());
  return out;
}

Spectrum laplacian_spectrum(const Graph& g, double tol) {
  return eigenvalues_sym(laplacian(g), tol);
}

ConditionVerdict check_thm12(const Graph& g, int k, double tol) {
  if (k < 2) throw Error(ErrorKind::InvalidParameters, "k must be at least 2");
  if (g.order() < 2)
    return not_applicable(Condition::T12,
                          "needs at least 2 vertices (second-largest "
                          "eigenvalue undefined below that)");
  if (g.edge_count() < 1)
    return not_applicable(Condition::T12, "needs at least one edge");
  const Spectrum eig = laplacian_spectrum(g, tol);
  const double mu1 = eig.values.front();
  const double mu_snd = eig.values[static_cast<std::size_t>(g.order()) - 2];
  ConditionVerdict v;
  v.condition = Condition::T12;
  v.applicable = true;
  v.holds = mu1 <= (k + 0.5) * mu_snd + tol;
  v.witness = EigenvalueWitness{mu1, mu_snd};
  return v;
}

Lemma21Result check_lemma21(const Graph& g, const VertexSet& s,
                            const VertexSet& x, const VertexSet& y,
                            double tol) {
  const int n = g.order();
  if (s.universe() != n || x.universe() != n || y.universe() != n)
    throw Error(ErrorKind::InvalidPartition,
                "set universes must match the graph order");
  if (g.edge_count() < 1)
    throw Error(ErrorKind::InvalidPartition, "graph must have at least one edge");
  if (x.intersects(y) || x.intersects(s) || y.intersects(s))
    throw Error(ErrorKind::InvalidPartition, "S, X, Y must be disjoint");
  if ((s | x | y) != VertexSet::full(n))
    throw Error(ErrorKind::InvalidPartition, "X and Y must cover V - S");
  bool cross_edge = false;
  x.for_each([&](int u) {
    if (g.neighbors(u).intersects(y)) cross_edge = true;
  });
  if (cross_edge)
    throw Error(ErrorKind::InvalidPartition, "edge between X and Y");
  if (x.size() > y.size())
    throw Error(ErrorKind::InvalidPartition, "|X| must not exceed |Y|");
  if (components(delete_vertices(g, s).graph).size() < 2)
    throw Error(ErrorKind::InvalidPartition, "G - S must be disconnected");

  const Spectrum eig = laplacian_spectrum(g, kDefaultTolerance);
  const double mu1 = eig.values.front();
  const double mu_snd = eig.values[static_cast<std::size_t>(n) - 2];

  Lemma21Result result;
  result.size_bound_holds =
      x.size() <= (mu1 - mu_snd) / (2.0 * mu1) * n + tol;
  if (mu1 - mu_snd > kDefaultTolerance) {
    result.separator_bound_holds =
        s.size() >= 2.0 * mu_snd / (mu1 - mu_snd) * x.size() - tol;
  }
  return result;
}

}  // namespace factor
