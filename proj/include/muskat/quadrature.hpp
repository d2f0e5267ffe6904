#pragma once

#include <vector>

namespace muskat {

/// One-sided quadrature node; every node is mirrored to -alpha by the
/// consumers, with a fixed |alpha|-ascending, + before - summation order.
struct QuadNode {
  double alpha;
  double weight;
};

/// Graded quadrature for the nonlocal alpha-integrals: dyadic panels
/// [2^m d0, 2^{m+1} d0] up to the truncation A, Gauss-Legendre per panel,
/// plus a Taylor cell on |alpha| <= d0 evaluated from the alpha -> 0 limit.
struct QuadratureSpec {
  double delta0 = 0.0;   // Taylor cell half-width
  double trunc_A = 0.0;  // truncation; must satisfy A <= L/2 on use
  int gauss_order = 8;
  bool strict_pairing = true;
  std::vector<QuadNode> half_nodes;  // positive alphas, ascending

  std::size_t total_nodes() const { return 2 * half_nodes.size(); }

  static QuadratureSpec dyadic(double delta0, double trunc_A,
                               int gauss_order = 8);

  /// Uniform panels on [lo, hi] (used for the small-alpha remainder).
  static QuadratureSpec uniform(double lo, double hi, int panels,
                                int gauss_order = 8);
};

/// Gauss-Legendre rule on [-1, 1].
void gauss_legendre(int order, std::vector<double>& nodes,
                    std::vector<double>& weights);

}  // namespace muskat
