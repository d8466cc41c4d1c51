#pragma once

// Parametric realizing matrices, characteristic polynomials and the digraph
// tests for irreducibility and primitivity.
//
// Indices in this API are 0-based. External formats (JSON, CLI) use 1-based
// indices, matching e_k notation.

#include <complex>
#include <optional>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "karp/arcs.hpp"
#include "karp/polynomial.hpp"

namespace karp {

using Matrix = Eigen::MatrixXd;

enum class Weight { One, Alpha, Beta };

/// "ONE", "ALPHA" or "BETA".
std::string_view to_string(Weight w) noexcept;

struct MatrixEntry {
  int row = 0;
  int col = 0;
  Weight weight = Weight::One;

  friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

/// Sparse symbolic matrix M(alpha) with entries 1, alpha or beta = 1 - alpha.
class ParametricStochasticMatrix {
 public:
  /// Throws DomainError for out-of-range or duplicate positions.
  ParametricStochasticMatrix(int order, std::vector<MatrixEntry> entries,
                             std::optional<ArcDescriptor> provenance = std::nullopt);

  int order() const noexcept { return order_; }

  /// Entries in row-major order.
  const std::vector<MatrixEntry>& entries() const noexcept { return entries_; }

  std::optional<Weight> weight_at(int row, int col) const;

  const std::optional<ArcDescriptor>& provenance() const noexcept { return provenance_; }

  /// True when every row holds either a single ONE or exactly one ALPHA and
  /// one BETA, so that it sums to 1 for every alpha.
  bool rows_symbolically_stochastic() const;

  /// Throws ParameterError unless 0 <= alpha <= 1.
  Matrix evaluate(double alpha) const;

 private:
  int order_;
  std::vector<MatrixEntry> entries_;
  std::optional<ArcDescriptor> provenance_;
};

/// The realizing matrix of the arc: its characteristic polynomial is the
/// reduced Ito polynomial of the arc at every alpha.
///
///   Type 0:   alpha C_n + beta I
///   Type I:   companion matrix of t^s - beta t^{s-q} - alpha
///   Type II:  alpha X + beta (C_q + ... + C_q), X the companion matrix of
///             t^{qm} - t^{qm-s}
///   Type III: alpha C_s + beta Y, Y = (J_d(0) + C_q + ... + C_q) + e_d e_{d+1}^T,
///             d = s - qm
ParametricStochasticMatrix realizing_matrix(const ArcDescriptor& desc);

/// Companion matrix of t^s - beta t^{s-q} - alpha for any 0 < q < s
/// (rows 1..s-1 shift; last row alpha in column 1, beta in column s-q+1).
ParametricStochasticMatrix type_one_matrix(int s, int q);

Matrix evaluate(const ParametricStochasticMatrix& m, double alpha);

/// det(tI - A) by Householder reduction to upper Hessenberg form followed by
/// the Hessenberg determinant recurrence. Throws DomainError unless A is
/// square with order <= 64.
RealPolynomial characteristic_polynomial(const Matrix& a);

/// det(A + alpha e_k e_l^T) = det(A) + (-1)^{k+l} alpha det(A_kl), where A_kl
/// removes row k and column l. Throws DomainError for bad indices.
double rank_one_update_det(const Matrix& a, int k, int l, double alpha);

/// Complex eigenvalues. Throws Error if the QR iteration fails.
std::vector<std::complex<double>> spectrum(const Matrix& a);

/// A^d by repeated squaring. Throws DomainError for d < 1 or non-square A.
Matrix matrix_power(const Matrix& a, int d);

/// Sum of the diagonal accumulated in extended precision.
double trace(const Matrix& a);

/// max_i |sum_j a_ij - 1|
double max_row_sum_error(const Matrix& a);

bool is_nonnegative(const Matrix& a);

class Digraph {
 public:
  /// Throws DomainError for vertex_count < 1.
  explicit Digraph(int vertex_count);

  /// Throws DomainError for a vertex outside [0, vertex_count).
  void add_arc(int from, int to);

  int vertex_count() const noexcept { return vertex_count_; }
  const std::set<std::pair<int, int>>& arcs() const noexcept { return arcs_; }
  bool has_arc(int from, int to) const { return arcs_.contains({from, to}); }

  std::vector<std::vector<int>> successors() const;

 private:
  int vertex_count_;
  std::set<std::pair<int, int>> arcs_;
};

/// Arc (i, j) iff |a_ij| > zero_tol.
Digraph digraph_of(const Matrix& a, double zero_tol = 1e-14);

/// Structure of M(alpha) for alpha in (0, 1): every stored entry is an arc.
Digraph digraph_of(const ParametricStochasticMatrix& m);

/// Strong connectivity; a single vertex counts as strongly connected.
bool is_irreducible(const Digraph& g);

/// gcd of all cycle lengths is 1, computed as the gcd of
/// level(u) + 1 - level(v) over arcs u -> v for BFS levels from vertex 0.
/// Throws PreconditionError if g is not strongly connected.
bool is_primitive(const Digraph& g);

}  // namespace karp
