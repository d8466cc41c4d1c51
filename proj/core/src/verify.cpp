#include "karp/verify.hpp"

#include <algorithm>
#include <cmath>

namespace karp {

std::vector<double> alpha_grid21() {
  std::vector<double> g;
  for (int i = 0; i <= 20; ++i) g.push_back(i / 20.0);
  return g;
}

std::vector<CheckReport> verify_order(int n, const MatrixHook& hook) {
  std::vector<CheckReport> out;
  const auto grid = alpha_grid21();
  for (const auto& desc : enumerate_arcs(n)) {
    const auto sym = realizing_matrix(desc);
    const auto eval = [&](double alpha) {
      Matrix a = sym.evaluate(alpha);
      if (hook) hook(desc, alpha, a);
      return a;
    };
    const std::string name = desc.name();

    CheckReport charpoly{"charpoly", n, name, 0.0, false};
    CheckReport stochastic{"stochastic", n, name, 0.0, false};
    CheckReport trace_check{"trace", n, name, 0.0, false};
    bool nonneg = sym.rows_symbolically_stochastic();
    bool trace_exact = true;
    for (const double alpha : grid) {
      const Matrix a = eval(alpha);
      charpoly.max_abs_residual = std::max(
          charpoly.max_abs_residual, max_coeff_diff(characteristic_polynomial(a), reduced_ito_polynomial(desc, alpha)));
      stochastic.max_abs_residual = std::max(stochastic.max_abs_residual, max_row_sum_error(a));
      nonneg = nonneg && is_nonnegative(a);

      const double tr = trace(a);
      if (desc.type == ArcType::Type0) {
        trace_check.max_abs_residual = std::max(trace_check.max_abs_residual, std::abs(tr - n * (1.0 - alpha)));
      } else {
        trace_check.max_abs_residual = std::max(trace_check.max_abs_residual, std::abs(tr));
        trace_exact = trace_exact && tr == 0.0;
      }
    }
    charpoly.pass = charpoly.max_abs_residual <= 1e-9;
    stochastic.pass = nonneg && stochastic.max_abs_residual <= 1e-15;
    trace_check.pass = desc.type == ArcType::Type0 ? trace_check.max_abs_residual <= 1e-15 : trace_exact;

    CheckReport primitive{"primitive", n, name, 0.0, true};
    for (const double alpha : {0.1, 0.5, 0.9}) {
      const Digraph g = digraph_of(eval(alpha));
      const bool ok = is_irreducible(g) && is_primitive(g);
      if (!ok) {
        primitive.pass = false;
        primitive.max_abs_residual = 1.0;
      }
    }

    out.push_back(std::move(charpoly));
    out.push_back(std::move(stochastic));
    out.push_back(std::move(primitive));
    out.push_back(std::move(trace_check));
  }
  return out;
}

}  // namespace karp
