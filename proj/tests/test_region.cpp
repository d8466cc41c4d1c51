#include <gtest/gtest.h>

#include <numbers>

#include "karp/error.hpp"
#include "karp/matrices.hpp"
#include "karp/region.hpp"
#include "karp/verify.hpp"

using cplx = std::complex<double>;
using karp::Membership;

namespace {

karp::ArcDescriptor arc(int n, const char* text) { return karp::parse_arc(n, text); }

double distance_to_segment(cplx z, cplx a, cplx b) {
  const cplx d = b - a;
  const double t = std::clamp(((z - a) * std::conj(d)).real() / std::norm(d), 0.0, 1.0);
  return std::abs(z - (a + t * d));
}

// Deterministic 500-point probe grid over [-1.05, 1.05] x [0, 1.05].
std::vector<cplx> probe_grid() {
  std::vector<cplx> pts;
  for (int i = 0; i < 25; ++i)
    for (int j = 0; j < 20; ++j) pts.emplace_back(-1.05 + 2.1 * i / 24.0, 1.05 * j / 19.0);
  return pts;
}

}  // namespace

TEST(TraceArc, TypeZeroIsExactSegment) {
  const auto d = arc(5, "0/1:1/5");
  const cplx omega = std::polar(1.0, 2.0 * std::numbers::pi / 5.0);
  for (int steps : {8, 64}) {
    const auto tr = karp::trace_arc(d, steps);
    for (const auto& s : tr.samples) EXPECT_LE(std::abs(s.lambda - ((1.0 - s.alpha) + s.alpha * omega)), 1e-12);
  }
}

TEST(TraceArc, EndpointsOfHalfTurnArc) {
  const auto tr = karp::trace_arc(arc(3, "1/3:1/2"), 64);
  EXPECT_LE(std::abs(tr.samples.front().lambda - cplx(-1.0, 0.0)), 1e-8);
  EXPECT_LE(std::abs(tr.samples.back().lambda - std::polar(1.0, 2.0 * std::numbers::pi / 3.0)), 1e-8);
  // the root runs along the real axis until it meets its partner
  EXPECT_FALSE(tr.collision_events.empty());
}

TEST(TraceArc, ModulusBoundsOnTypeOneArc) {
  const auto tr = karp::trace_arc(arc(9, "1/9:1/8"), 128);
  for (const auto& s : tr.samples) {
    EXPECT_LE(std::abs(s.lambda), 1.0 + 1e-12);
    EXPECT_GE(std::abs(s.lambda), 0.5);
  }
}

TEST(TraceArc, InvariantsUpToOrderTwelve) {
  for (int n = 2; n <= 12; ++n) {
    for (const auto& d : karp::enumerate_arcs(n)) {
      const auto tr = karp::trace_arc(d, 64);
      const auto [start, end] = karp::arc_endpoints(d);
      EXPECT_LE(std::abs(tr.samples.front().lambda - start), 1e-8) << d.name();
      EXPECT_LE(std::abs(tr.samples.back().lambda - end), 1e-8) << d.name();
      EXPECT_EQ(tr.samples.size(), static_cast<std::size_t>(tr.steps) + 1 + tr.refinement_events.size());
      EXPECT_EQ(tr.samples.back().alpha, 1.0);

      const auto family = karp::reduced_ito_family(d);
      const auto m = karp::realizing_matrix(d);
      for (std::size_t i = 0; i < tr.samples.size(); ++i) {
        const auto& s = tr.samples[i];
        if (i > 0) ASSERT_GT(s.alpha, tr.samples[i - 1].alpha);
        EXPECT_LE(std::abs(family.at(s.alpha)(s.lambda)), 1e-8) << d.name() << " alpha=" << s.alpha;
        if (i % 8 == 0) {
          double gap = 1e300;
          for (const cplx z : karp::spectrum(m.evaluate(s.alpha))) gap = std::min(gap, std::abs(z - s.lambda));
          EXPECT_LE(gap, 1e-7);
        }
      }
    }
  }
}

TEST(TraceArc, ConjugateArcsMirrorTheUpperOnes) {
  const auto lower = karp::trace_arc(arc(7, "4/7:3/5"), 32);
  const auto upper = karp::trace_arc(arc(7, "2/5:3/7"), 32);
  ASSERT_EQ(lower.samples.size(), upper.samples.size());
  for (std::size_t i = 0; i < lower.samples.size(); ++i)
    EXPECT_EQ(lower.samples[i].lambda, std::conj(upper.samples[i].lambda));
}

TEST(TraceArc, RejectsTooFewSteps) { EXPECT_THROW(karp::trace_arc(arc(3, "0/1:1/3"), 7), karp::DomainError); }

TEST(Boundary, OrderTwoIsRealSegment) {
  const auto model = karp::boundary(2, 32);
  ASSERT_EQ(model.traces.size(), 1u);
  for (const cplx z : model.outline) EXPECT_EQ(z.imag(), 0.0);
  EXPECT_EQ(karp::membership(0.5, 2, model), Membership::Inside);
  EXPECT_EQ(karp::membership(cplx(0.0, 0.2), 2, model), Membership::Outside);
  EXPECT_EQ(karp::membership(-1.0, 2, model), Membership::Boundary);
}

TEST(Boundary, OrderThreeShape) {
  const auto model = karp::boundary(3, 256);
  ASSERT_EQ(model.traces.size(), 2u);
  const cplx w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  for (const auto& s : model.traces[0].samples) EXPECT_LE(distance_to_segment(s.lambda, 1.0, w), 1e-8);
  EXPECT_EQ(model.outline.front(), cplx(1.0, 0.0));
  EXPECT_LE(std::abs(model.outline.back() - cplx(-1.0, 0.0)), 1e-12);

  ASSERT_FALSE(model.radial_table.empty());
  EXPECT_EQ(model.radial_table.front().theta, 0.0);
  EXPECT_NEAR(model.radial_table.back().theta, std::numbers::pi, 1e-12);
  EXPECT_NEAR(model.radial_table.back().r, 1.0, 1e-12);
  for (std::size_t i = 0; i < model.radial_table.size(); ++i) {
    EXPECT_GT(model.radial_table[i].r, 0.0);
    EXPECT_LE(model.radial_table[i].r, 1.0);
    if (i > 0) EXPECT_GT(model.radial_table[i].theta, model.radial_table[i - 1].theta);
  }
  EXPECT_NEAR(model.radius_at(0.0), 1.0, 1e-12);
  EXPECT_NEAR(model.ray_radius(std::numbers::pi), 1.0, 1e-12);
}

TEST(Boundary, OrderFourHasStraightEdgesToI) {
  const auto model = karp::boundary(4, 256);
  ASSERT_EQ(karp::enumerate_arcs(4).size(), 6u);
  const auto& first = model.traces.front();
  EXPECT_EQ(first.desc.name(), "0/1:1/4");
  for (const auto& s : first.samples) EXPECT_LE(distance_to_segment(s.lambda, 1.0, cplx(0.0, 1.0)), 1e-8);
}

TEST(Membership, OrderThreeExamples) {
  const auto model = karp::boundary(3, 256);
  EXPECT_EQ(karp::membership(0.5, 3, model), Membership::Inside);
  EXPECT_EQ(karp::membership(std::polar(1.0, 2.0 * std::numbers::pi / 3.0), 3, model), Membership::Boundary);
  EXPECT_EQ(karp::membership(cplx(-0.5, 0.866), 3, model), Membership::Boundary);
  EXPECT_EQ(karp::membership(-0.9, 3, model), Membership::Inside);
  EXPECT_EQ(karp::membership(cplx(0.9, 0.9), 3, model), Membership::Outside);
  EXPECT_EQ(karp::membership(1.0, 3, model), Membership::Boundary);
  EXPECT_EQ(karp::membership(0.0, 3, model), Membership::Inside);
  EXPECT_EQ(karp::membership(cplx(0.0, -0.3), 3, model), Membership::Inside);
  // the triangle edge through e^{2 pi i/3} is the line Re z = -1/2
  EXPECT_EQ(karp::membership(cplx(-0.45, 0.6), 3, model), Membership::Inside);
  EXPECT_EQ(karp::membership(cplx(-0.55, 0.6), 3, model), Membership::Outside);
}

TEST(Membership, Errors) {
  const auto model = karp::boundary(3, 32);
  EXPECT_THROW(karp::membership(0.5, 4, model), karp::PreconditionError);
  EXPECT_THROW(karp::membership(0.5, 3, model, 0.0), karp::DomainError);
  EXPECT_THROW(karp::membership(0.5, 3, karp::BoundaryModel{}), karp::StateError);
  EXPECT_THROW(karp::BoundaryModel{}.radius_at(0.0), karp::StateError);
}

TEST(Membership, RegionsAreNested) {
  const auto probes = probe_grid();
  ASSERT_EQ(probes.size(), 500u);
  auto smaller = karp::boundary(2, 256);
  for (int n = 2; n <= 8; ++n) {
    auto larger = karp::boundary(n + 1, 256);
    for (const cplx z : probes) {
      if (karp::membership(z, n, smaller) == Membership::Inside)
        EXPECT_NE(karp::membership(z, n + 1, larger), Membership::Outside) << "n=" << n << " z=" << z;
    }
    smaller = std::move(larger);
  }
}

TEST(PowerArcCheck, OrderNineExamples) {
  const std::vector<std::pair<int, std::string>> cases{{2, "2/9:1/4"}, {3, "1/3:3/8"}, {4, "4/9:1/2"}};
  for (const auto& [d, target] : cases) {
    const auto rep = karp::power_arc_check(9, 9, d, karp::alpha_grid21(), 128);
    EXPECT_EQ(rep.target.name(), target);
    EXPECT_EQ(rep.source.name(), "1/9:1/8");
    EXPECT_TRUE(rep.pass);
    EXPECT_LE(rep.max_coeff_error, 1e-8);
    EXPECT_LE(rep.max_spectrum_error, 1e-7);
    EXPECT_LE(rep.hausdorff_probe, 1e-3);
  }
  EXPECT_TRUE(karp::power_arc_check(9, 9, 3, {0.5}, 64).divides_m);
  EXPECT_FALSE(karp::power_arc_check(9, 9, 2, {0.5}, 64).divides_m);
}

TEST(PowerArcCheck, HypothesisViolations) {
  EXPECT_THROW(karp::power_arc_check(9, 9, 5, {0.5}), karp::PreconditionError);
  EXPECT_THROW(karp::power_arc_check(9, 9, 1, {0.5}), karp::PreconditionError);
  EXPECT_THROW(karp::power_arc_check(9, 10, 2, {0.5}), karp::PreconditionError);
  // 1/4 and 1/3 are not neighbors at order 9
  EXPECT_THROW(karp::power_arc_check(9, 4, 2, {0.5}), karp::PreconditionError);
}

TEST(ConvexityReport, TypeZeroIsConvex) {
  const auto rep = karp::convexity_report(arc(7, "0/1:1/7"), 64);
  EXPECT_TRUE(rep.convex_within_tolerance);
  EXPECT_EQ(rep.violations, 0);
  EXPECT_THROW(karp::convexity_report(arc(7, "0/1:1/7"), 16), karp::DomainError);
}

TEST(ConvexityReport, OrderNineProbes) {
  for (const char* name : {"1/9:1/8", "2/7:1/3"}) {
    const auto rep = karp::convexity_report(arc(9, name), 128);
    EXPECT_TRUE(rep.convex_within_tolerance) << name << " min second difference " << rep.min_second_difference;
  }
}

TEST(ConvexityReport, FlagsKinkOnHalfTurnArc) {
  // on 1/3:1/2 the modulus decreases along the real axis, then increases
  const auto rep = karp::convexity_report(arc(3, "1/3:1/2"), 64);
  EXPECT_FALSE(rep.strictly_convex);
}

TEST(DifferentiabilityScan, KnownSmoothFamiliesAreClean) {
  for (int n : {4, 5, 6}) {
    const auto rep = karp::differentiability_scan(n, 128);
    EXPECT_EQ(rep.known_smooth_encounters, 0) << n;
    int families = 0;
    for (const auto& a : rep.arcs) families += a.known_smooth;
    EXPECT_GT(families, 0);
  }
  EXPECT_THROW(karp::differentiability_scan(3, 64), karp::InvalidOrderError);
}

TEST(DifferentiabilityScan, KnownSmoothFamilyMembership) {
  EXPECT_TRUE(karp::in_known_smooth_family(arc(6, "1/6:1/5")));
  EXPECT_TRUE(karp::in_known_smooth_family(arc(6, "1/4:1/3")));
  EXPECT_FALSE(karp::in_known_smooth_family(arc(5, "2/5:1/2")));
  EXPECT_TRUE(karp::in_known_smooth_family(arc(5, "1/5:1/4")));
  EXPECT_FALSE(karp::in_known_smooth_family(arc(6, "2/5:1/2")));
}
