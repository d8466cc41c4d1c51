#include <gtest/gtest.h>

#include <random>

#include "karp/error.hpp"
#include "karp/matrices.hpp"
#include "oracles.hpp"

using karp::Matrix;
using karp::Weight;

namespace {

karp::ArcDescriptor arc(int n, const char* text) { return karp::parse_arc(n, text); }

// '.' zero, '1' ONE, 'a' ALPHA, 'b' BETA
std::vector<karp::MatrixEntry> pattern(const std::vector<std::string>& rows) {
  std::vector<karp::MatrixEntry> out;
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
    for (int j = 0; j < static_cast<int>(rows[static_cast<std::size_t>(i)].size()); ++j) {
      switch (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
        case '1': out.push_back({i, j, Weight::One}); break;
        case 'a': out.push_back({i, j, Weight::Alpha}); break;
        case 'b': out.push_back({i, j, Weight::Beta}); break;
        default: break;
      }
    }
  }
  return out;
}

Matrix circulant(int n) {
  Matrix c = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) c(i, (i + 1) % n) = 1.0;
  return c;
}

std::vector<double> grid21() {
  std::vector<double> g;
  for (int i = 0; i <= 20; ++i) g.push_back(i / 20.0);
  return g;
}

}  // namespace

TEST(RealizingMatrix, OrderNineTypeI) {
  const auto m = karp::realizing_matrix(arc(9, "1/9:1/8"));
  EXPECT_EQ(m.order(), 9);
  EXPECT_EQ(m.entries(), pattern({".1.......",
                                  "..1......",
                                  "...1.....",
                                  "....1....",
                                  ".....1...",
                                  "......1..",
                                  ".......1.",
                                  "........1",
                                  "ab......."}));
}

TEST(RealizingMatrix, OrderNineTypeII) {
  const auto m = karp::realizing_matrix(arc(9, "2/7:1/3"));
  EXPECT_EQ(m.entries(), pattern({".1.......",
                                  "..1......",
                                  "b..a.....",
                                  "....1....",
                                  ".....1...",
                                  "...b..a..",
                                  ".......1.",
                                  "........1",
                                  "..a...b.."}));
}

TEST(RealizingMatrix, OrderNineTypeIII) {
  const auto m = karp::realizing_matrix(arc(9, "2/9:1/4"));
  EXPECT_EQ(m.entries(), pattern({".1.......",
                                  "..1......",
                                  "...1.....",
                                  "....1....",
                                  ".b...a...",
                                  "......1..",
                                  ".......1.",
                                  "........1",
                                  "a....b..."}));
}

TEST(RealizingMatrix, TypeZeroIsShiftedCirculant) {
  const auto m = karp::realizing_matrix(arc(5, "0/1:1/5"));
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(m.weight_at(i, i), Weight::Beta);
    EXPECT_EQ(m.weight_at(i, (i + 1) % 5), Weight::Alpha);
  }
  EXPECT_EQ(m.entries().size(), 10u);
  EXPECT_TRUE(m.evaluate(0.0).isApprox(Matrix::Identity(5, 5)));
  EXPECT_EQ(m.evaluate(1.0), circulant(5));
}

TEST(RealizingMatrix, RowsAreStochasticEverywhere) {
  for (int n = 2; n <= 12; ++n) {
    for (const auto& d : karp::enumerate_arcs(n)) {
      const auto m = karp::realizing_matrix(d);
      EXPECT_TRUE(m.rows_symbolically_stochastic()) << d.name();
      EXPECT_EQ(m.order(), d.matrix_order());
      for (double alpha : grid21()) {
        const Matrix a = m.evaluate(alpha);
        EXPECT_TRUE(karp::is_nonnegative(a));
        EXPECT_LE(karp::max_row_sum_error(a), 1e-15);
      }
    }
  }
}

TEST(RealizingMatrix, CharacteristicPolynomialIsReducedIto) {
  for (int n = 2; n <= 12; ++n) {
    for (const auto& d : karp::enumerate_arcs(n)) {
      const auto m = karp::realizing_matrix(d);
      for (double alpha : grid21()) {
        const auto chi = karp::characteristic_polynomial(m.evaluate(alpha));
        EXPECT_LE(karp::max_coeff_diff(chi, karp::reduced_ito_polynomial(d, alpha)), 1e-9)
            << d.name() << " n=" << n << " alpha=" << alpha;
      }
    }
  }
}

TEST(RealizingMatrix, PrimitiveInsideUnitInterval) {
  for (int n = 2; n <= 12; ++n) {
    for (const auto& d : karp::enumerate_arcs(n)) {
      const auto m = karp::realizing_matrix(d);
      for (double alpha : {0.1, 0.5, 0.9}) {
        const auto g = karp::digraph_of(m.evaluate(alpha));
        ASSERT_TRUE(karp::is_irreducible(g)) << d.name();
        EXPECT_TRUE(karp::is_primitive(g)) << d.name();
      }
      const auto sym = karp::digraph_of(m);
      EXPECT_EQ(sym.arcs(), karp::digraph_of(m.evaluate(0.5)).arcs());
    }
  }
}

TEST(RealizingMatrix, TraceZeroExceptTypeZero) {
  for (int n = 2; n <= 12; ++n) {
    for (const auto& d : karp::enumerate_arcs(n)) {
      const auto m = karp::realizing_matrix(d);
      for (double alpha : grid21()) {
        const double tr = karp::trace(m.evaluate(alpha));
        if (d.type == karp::ArcType::Type0) {
          EXPECT_NEAR(tr, n * (1.0 - alpha), 1e-15);
        } else {
          EXPECT_EQ(tr, 0.0);
        }
      }
    }
  }
}

TEST(ParametricStochasticMatrix, Validation) {
  EXPECT_THROW(karp::ParametricStochasticMatrix(2, {{0, 2, Weight::One}}), karp::DomainError);
  EXPECT_THROW(karp::ParametricStochasticMatrix(2, {{0, 1, Weight::One}, {0, 1, Weight::Alpha}}), karp::DomainError);
  const karp::ParametricStochasticMatrix m(2, {{0, 1, Weight::One}, {1, 0, Weight::Alpha}});
  EXPECT_FALSE(m.rows_symbolically_stochastic());
  EXPECT_THROW(m.evaluate(1.1), karp::ParameterError);
  EXPECT_EQ(karp::to_string(Weight::Beta), "BETA");
}

TEST(Evaluate, TypeOneAtOneIsCirculant) {
  EXPECT_EQ(karp::realizing_matrix(arc(9, "1/9:1/8")).evaluate(1.0), circulant(9));
}

TEST(CharacteristicPolynomial, Examples) {
  EXPECT_EQ(karp::characteristic_polynomial(circulant(3)).trimmed(), karp::RealPolynomial({-1.0, 0.0, 0.0, 1.0}));
  EXPECT_LE(karp::max_coeff_diff(karp::characteristic_polynomial(Matrix::Identity(3, 3)),
                                 karp::RealPolynomial({-1.0, 3.0, -3.0, 1.0})),
            1e-14);
  const auto chi = karp::characteristic_polynomial(karp::realizing_matrix(arc(9, "1/9:1/8")).evaluate(0.3));
  std::vector<double> e(10, 0.0);
  e[9] = 1.0;
  e[1] = -0.7;
  e[0] = -0.3;
  EXPECT_LE(karp::max_coeff_diff(chi, karp::RealPolynomial(e)), 1e-14);
}

TEST(CharacteristicPolynomial, MatchesLeverrierOnRandomMatrices) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int n = 1; n <= 10; ++n) {
    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = u(rng);
    const auto chi = karp::characteristic_polynomial(a);
    const auto ref = oracle::charpoly_leverrier(a);
    for (std::size_t k = 0; k < ref.size(); ++k) EXPECT_NEAR(chi[k], static_cast<double>(ref[k]), 1e-10);
  }
}

TEST(CharacteristicPolynomial, Errors) {
  EXPECT_THROW(karp::characteristic_polynomial(Matrix::Zero(2, 3)), karp::DomainError);
  EXPECT_THROW(karp::characteristic_polynomial(Matrix::Identity(65, 65)), karp::DomainError);
}

TEST(RankOneUpdate, Examples) {
  EXPECT_DOUBLE_EQ(karp::rank_one_update_det(Matrix::Identity(2, 2), 0, 1, 5.0), 1.0);
  EXPECT_DOUBLE_EQ(karp::rank_one_update_det(Matrix::Identity(2, 2), 0, 0, 5.0), 6.0);
  EXPECT_THROW(karp::rank_one_update_det(Matrix::Identity(2, 2), 2, 0, 1.0), karp::DomainError);
  EXPECT_THROW(karp::rank_one_update_det(Matrix::Identity(2, 2), 0, -1, 1.0), karp::DomainError);
}

TEST(RankOneUpdate, MatchesDirectDeterminant) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> size(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = size(rng);
    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = u(rng);
    const int k = std::uniform_int_distribution<int>(0, n - 1)(rng);
    const int l = std::uniform_int_distribution<int>(0, n - 1)(rng);
    const double alpha = trial == 0 ? 0.7 : 3.0 * u(rng);
    Matrix updated = a;
    updated(k, l) += alpha;
    const double direct = static_cast<double>(oracle::det_gauss(updated));
    EXPECT_NEAR(karp::rank_one_update_det(a, k, l, alpha), direct, 1e-9 * std::max(1.0, std::abs(direct)));
  }
}

TEST(Digraph, Examples) {
  const auto c4 = karp::digraph_of(circulant(4));
  EXPECT_EQ(c4.arcs().size(), 4u);
  EXPECT_TRUE(c4.has_arc(3, 0));
  EXPECT_TRUE(karp::is_irreducible(c4));
  EXPECT_FALSE(karp::is_primitive(c4));

  const auto id = karp::digraph_of(Matrix::Identity(2, 2));
  EXPECT_EQ(id.arcs(), (std::set<std::pair<int, int>>{{0, 0}, {1, 1}}));
  EXPECT_FALSE(karp::is_irreducible(id));
  EXPECT_THROW(karp::is_primitive(id), karp::PreconditionError);

  const auto t0 = karp::digraph_of(karp::realizing_matrix(arc(5, "0/1:1/5")).evaluate(0.5));
  EXPECT_EQ(t0.arcs().size(), 10u);
  EXPECT_TRUE(karp::is_primitive(t0));

  EXPECT_TRUE(karp::is_irreducible(karp::digraph_of(Matrix::Identity(1, 1))));
  EXPECT_TRUE(karp::is_irreducible(karp::digraph_of(karp::realizing_matrix(arc(9, "2/7:1/3")).evaluate(0.5))));
  EXPECT_TRUE(karp::is_primitive(karp::digraph_of(karp::realizing_matrix(arc(9, "1/9:1/8")).evaluate(0.5))));
  for (int n = 2; n <= 9; ++n) EXPECT_FALSE(karp::is_primitive(karp::digraph_of(circulant(n))));
}

TEST(Digraph, ZeroToleranceAndErrors) {
  Matrix a = Matrix::Identity(2, 2);
  a(0, 1) = 1e-15;
  EXPECT_FALSE(karp::digraph_of(a).has_arc(0, 1));
  EXPECT_TRUE(karp::digraph_of(a, 0.0).has_arc(0, 1));
  karp::Digraph g(2);
  EXPECT_THROW(g.add_arc(0, 2), karp::DomainError);
  EXPECT_THROW(karp::Digraph(0), karp::DomainError);
}

TEST(MatrixPower, Examples) {
  const Matrix c9 = circulant(9);
  Matrix shift2 = Matrix::Zero(9, 9);
  for (int i = 0; i < 9; ++i) shift2(i, (i + 2) % 9) = 1.0;
  EXPECT_EQ(karp::matrix_power(c9, 2), shift2);
  EXPECT_EQ(karp::matrix_power(c9, 1), c9);
  EXPECT_EQ(karp::matrix_power(c9, 9), Matrix::Identity(9, 9));
  EXPECT_THROW(karp::matrix_power(c9, 0), karp::DomainError);
}

TEST(MatrixPower, PreservesStochasticity) {
  const auto m = karp::realizing_matrix(arc(9, "2/7:1/3"));
  for (int d = 1; d <= 7; ++d) EXPECT_LE(karp::max_row_sum_error(karp::matrix_power(m.evaluate(0.37), d)), 1e-12);
}

TEST(MatrixPower, SquareOfTypeOneMatchesTarget) {
  // the square of the t^9 - 0.6 t - 0.4 matrix has characteristic polynomial t (t^4 - 0.6)^2 - 0.16
  const Matrix sq = karp::matrix_power(karp::type_one_matrix(9, 8).evaluate(0.4), 2);
  const auto expected = oracle::sub(oracle::mul(oracle::monomial(1.0L, 1),
                                                oracle::power(oracle::sub(oracle::monomial(1.0L, 4), {0.6L}), 2)),
                                    {0.16L});
  const auto chi = karp::characteristic_polynomial(sq);
  for (std::size_t k = 0; k < expected.size(); ++k) EXPECT_NEAR(chi[k], static_cast<double>(expected[k]), 1e-12);
}

TEST(Spectrum, CirculantRootsOfUnity) {
  for (const auto& z : karp::spectrum(circulant(7))) EXPECT_NEAR(std::abs(std::pow(z, 7) - 1.0), 0.0, 1e-12);
}
