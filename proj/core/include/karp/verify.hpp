#pragma once

// The identity suite for realizing matrices.

#include <functional>
#include <string>
#include <vector>

#include "karp/arcs.hpp"
#include "karp/matrices.hpp"

namespace karp {

struct CheckReport {
  std::string check;
  int n = 0;
  std::string arc;
  double max_abs_residual = 0.0;
  bool pass = false;
};

/// Called on every evaluated matrix before it is checked; tests use it to
/// inject corruption.
using MatrixHook = std::function<void(const ArcDescriptor&, double alpha, Matrix&)>;

/// For every arc of order n, four reports:
///   charpoly    chi(M(alpha)) against the reduced Ito polynomial, 21 alpha, <= 1e-9
///   stochastic  symbolic row bookkeeping, nonnegativity and row sums, <= 1e-15
///   primitive   irreducible and primitive at alpha in {0.1, 0.5, 0.9}
///   trace       exactly 0 for Types I-III, n (1 - alpha) within 1e-15 for Type 0
/// Throws InvalidOrderError for n < 2.
std::vector<CheckReport> verify_order(int n, const MatrixHook& hook = {});

/// 21 evenly spaced points of [0, 1].
std::vector<double> alpha_grid21();

}  // namespace karp
