#include "karp/matrices.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <string>

#include <Eigen/Eigenvalues>

#include "karp/error.hpp"

namespace karp {

std::string_view to_string(Weight w) noexcept {
  switch (w) {
    case Weight::One: return "ONE";
    case Weight::Alpha: return "ALPHA";
    case Weight::Beta: return "BETA";
  }
  return "?";
}

ParametricStochasticMatrix::ParametricStochasticMatrix(int order, std::vector<MatrixEntry> entries,
                                                       std::optional<ArcDescriptor> provenance)
    : order_(order), entries_(std::move(entries)), provenance_(std::move(provenance)) {
  if (order_ < 1) throw DomainError("matrix order must be positive");
  for (const auto& e : entries_) {
    if (e.row < 0 || e.row >= order_ || e.col < 0 || e.col >= order_) {
      throw DomainError("entry (" + std::to_string(e.row) + ", " + std::to_string(e.col) +
                        ") outside a matrix of order " + std::to_string(order_));
    }
  }
  std::sort(entries_.begin(), entries_.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
    return std::pair(a.row, a.col) < std::pair(b.row, b.col);
  });
  const auto dup = std::adjacent_find(entries_.begin(), entries_.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
    return a.row == b.row && a.col == b.col;
  });
  if (dup != entries_.end()) {
    throw DomainError("duplicate entry at (" + std::to_string(dup->row) + ", " + std::to_string(dup->col) + ")");
  }
}

std::optional<Weight> ParametricStochasticMatrix::weight_at(int row, int col) const {
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair(row, col),
                                   [](const MatrixEntry& e, const std::pair<int, int>& key) {
                                     return std::pair(e.row, e.col) < key;
                                   });
  if (it != entries_.end() && it->row == row && it->col == col) return it->weight;
  return std::nullopt;
}

bool ParametricStochasticMatrix::rows_symbolically_stochastic() const {
  std::vector<int> ones(static_cast<std::size_t>(order_)), alphas(ones), betas(ones);
  for (const auto& e : entries_) {
    const auto r = static_cast<std::size_t>(e.row);
    switch (e.weight) {
      case Weight::One: ++ones[r]; break;
      case Weight::Alpha: ++alphas[r]; break;
      case Weight::Beta: ++betas[r]; break;
    }
  }
  for (std::size_t r = 0; r < ones.size(); ++r) {
    const bool single_one = ones[r] == 1 && alphas[r] == 0 && betas[r] == 0;
    const bool split = ones[r] == 0 && alphas[r] == 1 && betas[r] == 1;
    if (!single_one && !split) return false;
  }
  return true;
}

Matrix ParametricStochasticMatrix::evaluate(double alpha) const {
  check_alpha(alpha);
  const double beta = 1.0 - alpha;
  Matrix out = Matrix::Zero(order_, order_);
  for (const auto& e : entries_) {
    switch (e.weight) {
      case Weight::One: out(e.row, e.col) = 1.0; break;
      case Weight::Alpha: out(e.row, e.col) = alpha; break;
      case Weight::Beta: out(e.row, e.col) = beta; break;
    }
  }
  return out;
}

Matrix evaluate(const ParametricStochasticMatrix& m, double alpha) { return m.evaluate(alpha); }

ParametricStochasticMatrix type_one_matrix(int s, int q) {
  if (q <= 0 || q >= s) throw DomainError("type I matrix needs 0 < q < s");
  std::vector<MatrixEntry> e;
  for (int i = 0; i + 1 < s; ++i) e.push_back({i, i + 1, Weight::One});
  e.push_back({s - 1, 0, Weight::Alpha});
  e.push_back({s - 1, s - q, Weight::Beta});
  return ParametricStochasticMatrix(s, std::move(e));
}

namespace {

// Rows that close a q-cycle block carry alpha forward and beta back to the
// block start; other rows shift by one. `offset` skips the leading rows that
// are not part of any block.
void add_block_rows(std::vector<MatrixEntry>& e, int order, int offset, int q) {
  for (int i = 0; i + 1 < order; ++i) {
    if (i < offset || (i + 1 - offset) % q != 0) {
      e.push_back({i, i + 1, Weight::One});
    } else {
      e.push_back({i, i + 1, Weight::Alpha});
      e.push_back({i, i + 1 - q, Weight::Beta});
    }
  }
}

}  // namespace

ParametricStochasticMatrix realizing_matrix(const ArcDescriptor& desc) {
  const int n = desc.n, q = desc.q(), s = desc.s(), m = desc.floor_nq;
  std::vector<MatrixEntry> e;
  switch (desc.type) {
    case ArcType::Type0:
      for (int i = 0; i < n; ++i) {
        e.push_back({i, i, Weight::Beta});
        e.push_back({i, (i + 1) % n, Weight::Alpha});
      }
      return ParametricStochasticMatrix(n, std::move(e), desc);
    case ArcType::TypeI: {
      auto base = type_one_matrix(s, q);
      return ParametricStochasticMatrix(s, base.entries(), desc);
    }
    case ArcType::TypeII: {
      const int order = q * m;
      add_block_rows(e, order, 0, q);
      e.push_back({order - 1, order - s, Weight::Alpha});
      e.push_back({order - 1, order - q, Weight::Beta});
      return ParametricStochasticMatrix(order, std::move(e), desc);
    }
    case ArcType::TypeIII: {
      const int d = s - q * m;
      add_block_rows(e, s, d, q);
      e.push_back({s - 1, 0, Weight::Alpha});
      e.push_back({s - 1, s - q, Weight::Beta});
      return ParametricStochasticMatrix(s, std::move(e), desc);
    }
  }
  throw DomainError("unknown arc type");
}

RealPolynomial characteristic_polynomial(const Matrix& a) {
  if (a.rows() != a.cols()) throw DomainError("characteristic polynomial of a non-square matrix");
  const Eigen::Index n = a.rows();
  if (n > 64) throw DomainError("characteristic polynomial is limited to order 64");
  if (n == 0) return RealPolynomial({1.0});

  const Matrix h = n > 2 ? Matrix(Eigen::HessenbergDecomposition<Matrix>(a).matrixH()) : a;

  // p[k] = det(tI - H[0:k, 0:k])
  std::vector<std::vector<double>> p(static_cast<std::size_t>(n) + 1);
  p[0] = {1.0};
  for (Eigen::Index k = 1; k <= n; ++k) {
    std::vector<double> next(static_cast<std::size_t>(k) + 1, 0.0);
    const auto& prev = p[static_cast<std::size_t>(k - 1)];
    const double diag = h(k - 1, k - 1);
    for (std::size_t j = 0; j < prev.size(); ++j) {
      next[j + 1] += prev[j];
      next[j] -= diag * prev[j];
    }
    double sub = 1.0;
    for (Eigen::Index i = k - 1; i >= 1; --i) {
      sub *= h(i, i - 1);
      const double w = h(i - 1, k - 1) * sub;
      if (w == 0.0) continue;
      const auto& earlier = p[static_cast<std::size_t>(i - 1)];
      for (std::size_t j = 0; j < earlier.size(); ++j) next[j] -= w * earlier[j];
    }
    p[static_cast<std::size_t>(k)] = std::move(next);
  }
  return RealPolynomial(p[static_cast<std::size_t>(n)]);
}

namespace {

double det(const Matrix& a) { return a.size() == 0 ? 1.0 : a.partialPivLu().determinant(); }

Matrix minor_of(const Matrix& a, int k, int l) {
  const Eigen::Index n = a.rows();
  Matrix out(n - 1, n - 1);
  for (Eigen::Index i = 0, oi = 0; i < n; ++i) {
    if (i == k) continue;
    for (Eigen::Index j = 0, oj = 0; j < n; ++j) {
      if (j == l) continue;
      out(oi, oj++) = a(i, j);
    }
    ++oi;
  }
  return out;
}

}  // namespace

double rank_one_update_det(const Matrix& a, int k, int l, double alpha) {
  if (a.rows() != a.cols()) throw DomainError("determinant of a non-square matrix");
  if (k < 0 || l < 0 || k >= a.rows() || l >= a.cols()) {
    throw DomainError("update position (" + std::to_string(k) + ", " + std::to_string(l) + ") out of range");
  }
  const double sign = ((k + l) % 2 == 0) ? 1.0 : -1.0;
  return det(a) + sign * alpha * det(minor_of(a, k, l));
}

std::vector<std::complex<double>> spectrum(const Matrix& a) {
  if (a.rows() != a.cols()) throw DomainError("spectrum of a non-square matrix");
  Eigen::EigenSolver<Matrix> solver(a, false);
  if (solver.info() == Eigen::Success) {
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
  }
  // the real double-shift QR stalls on a few highly structured matrices;
  // the complex single-shift iteration uses different shifts
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> fallback(a.cast<std::complex<double>>(), false);
  if (fallback.info() != Eigen::Success) throw Error("eigenvalue iteration did not converge");
  const auto& ev = fallback.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

Matrix matrix_power(const Matrix& a, int d) {
  if (a.rows() != a.cols()) throw DomainError("power of a non-square matrix");
  if (d < 1) throw DomainError("matrix power needs d >= 1");
  Matrix result = Matrix::Identity(a.rows(), a.cols());
  Matrix base = a;
  bool first = true;
  while (d > 0) {
    if (d & 1) {
      result = first ? base : Matrix(result * base);
      first = false;
    }
    d >>= 1;
    if (d > 0) base = base * base;
  }
  return result;
}

double trace(const Matrix& a) {
  long double acc = 0.0L;
  for (Eigen::Index i = 0; i < std::min(a.rows(), a.cols()); ++i) acc += a(i, i);
  return static_cast<double>(acc);
}

double max_row_sum_error(const Matrix& a) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) worst = std::max(worst, std::abs(a.row(i).sum() - 1.0));
  return worst;
}

bool is_nonnegative(const Matrix& a) { return (a.array() >= 0.0).all(); }

Digraph::Digraph(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 1) throw DomainError("a digraph needs at least one vertex");
}

void Digraph::add_arc(int from, int to) {
  if (from < 0 || to < 0 || from >= vertex_count_ || to >= vertex_count_) {
    throw DomainError("arc (" + std::to_string(from) + ", " + std::to_string(to) + ") references a missing vertex");
  }
  arcs_.emplace(from, to);
}

std::vector<std::vector<int>> Digraph::successors() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(vertex_count_));
  for (const auto& [u, v] : arcs_) out[static_cast<std::size_t>(u)].push_back(v);
  return out;
}

Digraph digraph_of(const Matrix& a, double zero_tol) {
  if (a.rows() != a.cols()) throw DomainError("digraph of a non-square matrix");
  Digraph g(static_cast<int>(a.rows()));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (std::abs(a(i, j)) > zero_tol) g.add_arc(static_cast<int>(i), static_cast<int>(j));
  return g;
}

Digraph digraph_of(const ParametricStochasticMatrix& m) {
  Digraph g(m.order());
  for (const auto& e : m.entries()) g.add_arc(e.row, e.col);
  return g;
}

namespace {

// BFS distances from vertex 0; -1 for unreachable vertices.
std::vector<int> bfs_levels(const std::vector<std::vector<int>>& adj) {
  std::vector<int> level(adj.size(), -1);
  std::queue<int> frontier;
  level[0] = 0;
  frontier.push(0);
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (int v : adj[static_cast<std::size_t>(u)]) {
      if (level[static_cast<std::size_t>(v)] < 0) {
        level[static_cast<std::size_t>(v)] = level[static_cast<std::size_t>(u)] + 1;
        frontier.push(v);
      }
    }
  }
  return level;
}

bool all_reached(const std::vector<int>& level) {
  return std::none_of(level.begin(), level.end(), [](int l) { return l < 0; });
}

}  // namespace

bool is_irreducible(const Digraph& g) {
  const auto forward = g.successors();
  std::vector<std::vector<int>> backward(forward.size());
  for (const auto& [u, v] : g.arcs()) backward[static_cast<std::size_t>(v)].push_back(u);
  return all_reached(bfs_levels(forward)) && all_reached(bfs_levels(backward));
}

bool is_primitive(const Digraph& g) {
  if (!is_irreducible(g)) throw PreconditionError("primitivity is defined for strongly connected digraphs");
  const auto level = bfs_levels(g.successors());
  int period = 0;
  for (const auto& [u, v] : g.arcs()) {
    period = std::gcd(period, std::abs(level[static_cast<std::size_t>(u)] + 1 - level[static_cast<std::size_t>(v)]));
  }
  return period == 1;
}

}  // namespace karp
