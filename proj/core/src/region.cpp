#include "karp/region.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <string>

#include "karp/error.hpp"
#include "karp/farey.hpp"
#include "karp/matrices.hpp"
#include "karp/polyroots.hpp"

namespace karp {

namespace {

using cplx = std::complex<double>;

constexpr int kMaxHalvings = 20;
constexpr double kMinStep = 1e-12;
constexpr double kStartAlpha = 1e-3;
constexpr double kEndpointTol = 1e-8;
constexpr double kEncounterTol = 1e-7;

std::size_t nearest(const std::vector<cplx>& pts, cplx z) {
  std::size_t best = 0;
  for (std::size_t j = 1; j < pts.size(); ++j)
    if (std::abs(pts[j] - z) < std::abs(pts[best] - z)) best = j;
  return best;
}

double gap_to_others(const std::vector<cplx>& pts, std::size_t idx) {
  double g = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < pts.size(); ++j)
    if (j != idx) g = std::min(g, std::abs(pts[j] - pts[idx]));
  return g;
}

cplx upper(cplx z) { return {z.real(), std::abs(z.imag())}; }

// Continues one branch through (0, seed), (a1, start) up to alpha = 1.
ArcTrace follow(const ArcDescriptor& desc, const ParametricStochasticMatrix& m, int steps, cplx seed, double a1,
                cplx start) {
  ArcTrace tr;
  tr.desc = desc;
  tr.steps = steps;
  const double h = 1.0 / steps;
  tr.samples.push_back({0.0, seed, true});
  tr.samples.push_back({a1, start, a1 == h});
  if (a1 != h) tr.refinement_events.push_back(a1);

  double st = a1;
  for (int i = 1; i <= steps; ++i) {
    const double target = i == steps ? 1.0 : static_cast<double>(i) / steps;
    while (tr.samples.back().alpha < target) {
      const ArcSample last = tr.samples.back();
      const ArcSample prev = tr.samples[tr.samples.size() - 2];
      const cplx slope = (last.lambda - prev.lambda) / (last.alpha - prev.alpha);

      double step = std::min(st, target - last.alpha);
      for (int halvings = 0;; ++halvings) {
        double a = last.alpha + step;
        if (target - a <= 1e-15) a = target;
        const auto rs = spectrum(m.evaluate(a));
        const cplx predicted = last.lambda + slope * (a - last.alpha);
        std::size_t idx = nearest(rs, predicted);
        const double move = std::abs(rs[idx] - last.lambda);
        const double gap = gap_to_others(rs, idx);

        bool accept = gap >= 2.0 * move;
        if (!accept && halvings < kMaxHalvings && step / 2.0 >= kMinStep) {
          step /= 2.0;
          continue;
        }
        if (!accept) {
          // unresolved: prefer the upper branch among the tied roots
          const cplx chosen = rs[idx];
          for (std::size_t j = 0; j < rs.size(); ++j) {
            if (std::abs(rs[j] - chosen) <= 2.0 * move && rs[j].imag() > rs[idx].imag()) idx = j;
          }
          tr.collision_events.push_back(a);
        }
        const bool on_grid = a == target;
        tr.samples.push_back({a, rs[idx], on_grid});
        if (!on_grid) tr.refinement_events.push_back(a);
        st = std::min(2.0 * step, h);
        break;
      }
    }
  }
  return tr;
}

void polish(ArcTrace& tr) {
  const auto family = reduced_ito_family(tr.desc);
  for (auto& s : tr.samples) {
    if (s.alpha == 0.0) continue;
    const RealPolynomial p = family.at(s.alpha);
    if (std::abs(p(s.lambda)) <= 1e-10) continue;
    const cplx z = polish_root(p, s.lambda);
    // never let Newton hop onto a neighboring root
    if (std::abs(z - s.lambda) <= 1e-6) s.lambda = z;
  }
}

}  // namespace

ArcTrace trace_arc(const ArcDescriptor& desc, int steps) {
  if (steps < 8) throw DomainError("tracing needs at least 8 steps, got " + std::to_string(steps));
  if (desc.conjugate) {
    ArcTrace tr = trace_arc(desc.mirror(), steps);
    tr.desc = desc;
    for (auto& s : tr.samples) s.lambda = std::conj(s.lambda);
    return tr;
  }

  const auto m = realizing_matrix(desc);
  const auto [seed, end] = arc_endpoints(desc);
  const double a1 = std::min(1.0 / steps, kStartAlpha);
  const double spacing =
      desc.q() == 1 ? std::numeric_limits<double>::infinity() : 2.0 * std::sin(std::numbers::pi / desc.q());
  const double radius = std::min(0.25, 0.4 * spacing);

  std::vector<cplx> starts;
  for (const cplx z : spectrum(m.evaluate(a1)))
    if (std::abs(z - seed) <= radius) starts.push_back(z);
  if (starts.empty()) throw TraceError("no root near the start of arc " + desc.name(), a1);

  const ArcTrace* best = nullptr;
  double best_err = 0.0;
  std::vector<ArcTrace> branches;
  branches.reserve(starts.size());
  for (const cplx z : starts) {
    branches.push_back(follow(desc, m, steps, seed, a1, z));
    polish(branches.back());
  }
  for (const auto& b : branches) {
    const double err = std::abs(b.samples.back().lambda - end);
    if (err > kEndpointTol) continue;
    if (best == nullptr || b.collision_events.size() < best->collision_events.size() ||
        (b.collision_events.size() == best->collision_events.size() && err < best_err)) {
      best = &b;
      best_err = err;
    }
  }
  if (best == nullptr) throw TraceError("no branch of arc " + desc.name() + " reaches its endpoint", 1.0);
  return *best;
}

double BoundaryModel::radius_at(double theta) const {
  if (radial_table.empty()) throw StateError("boundary model is empty");
  theta = std::clamp(theta, 0.0, std::numbers::pi);
  const auto it = std::lower_bound(radial_table.begin(), radial_table.end(), theta,
                                   [](const RadialPoint& p, double t) { return p.theta < t; });
  if (it == radial_table.begin()) return it->r;
  if (it == radial_table.end()) return radial_table.back().r;
  const auto lo = std::prev(it);
  const double w = (theta - lo->theta) / (it->theta - lo->theta);
  return lo->r + w * (it->r - lo->r);
}

double BoundaryModel::ray_radius(double theta) const {
  if (outline.empty()) throw StateError("boundary model is empty");
  const cplx u = std::polar(1.0, theta);
  const auto cross = [](cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); };
  const auto dot = [](cplx a, cplx b) { return a.real() * b.real() + a.imag() * b.imag(); };

  double best = 0.0;
  for (std::size_t i = 0; i + 1 < outline.size(); ++i) {
    const cplx p = outline[i], d = outline[i + 1] - outline[i];
    const double denom = cross(u, d);
    if (std::abs(denom) <= 1e-15 * std::abs(d)) {
      // parallel; only a segment lying on the ray counts
      if (std::abs(cross(u, p)) <= 1e-12) {
        best = std::max({best, dot(u, p), dot(u, p + d)});
      }
      continue;
    }
    const double t = -cross(u, p) / denom;
    if (t < -1e-12 || t > 1.0 + 1e-12) continue;
    best = std::max(best, dot(u, p + std::clamp(t, 0.0, 1.0) * d));
  }
  return best;
}

BoundaryModel boundary(int n, int steps) {
  const auto arcs = enumerate_arcs(n);
  std::vector<std::future<ArcTrace>> jobs;
  for (const auto& desc : arcs) {
    if (desc.conjugate) continue;
    jobs.push_back(std::async(std::launch::async, [desc, steps] {
      try {
        return trace_arc(desc, steps);
      } catch (const TraceError& e) {
        throw TraceError("arc " + desc.name() + ": " + e.what(), e.alpha());
      }
    }));
  }

  BoundaryModel model;
  model.n = n;
  for (auto& job : jobs) model.traces.push_back(job.get());

  for (const auto& tr : model.traces) {
    std::vector<cplx> pts;
    for (const auto& s : tr.samples) pts.push_back(upper(s.lambda));
    if (tr.desc.pq != tr.desc.lo) std::reverse(pts.begin(), pts.end());
    const std::size_t skip = !model.outline.empty() && std::abs(model.outline.back() - pts.front()) < 1e-12;
    model.outline.insert(model.outline.end(), pts.begin() + static_cast<std::ptrdiff_t>(skip), pts.end());

    for (const cplx z : pts) {
      const double r = std::abs(z);
      if (r < 1e-12) continue;
      model.radial_table.push_back({std::atan2(z.imag(), z.real()), std::min(r, 1.0)});
    }
  }
  std::sort(model.radial_table.begin(), model.radial_table.end(), [](const RadialPoint& a, const RadialPoint& b) {
    return a.theta < b.theta || (a.theta == b.theta && a.r > b.r);
  });
  model.radial_table.erase(
      std::unique(model.radial_table.begin(), model.radial_table.end(),
                  [](const RadialPoint& a, const RadialPoint& b) { return a.theta == b.theta; }),
      model.radial_table.end());
  return model;
}

std::string_view to_string(Membership m) noexcept {
  switch (m) {
    case Membership::Inside: return "inside";
    case Membership::Boundary: return "boundary";
    case Membership::Outside: return "outside";
  }
  return "?";
}

Membership membership(cplx z, int n, const BoundaryModel& model, double tol) {
  if (model.outline.empty()) throw StateError("boundary model is empty");
  if (model.n != n) {
    throw PreconditionError("model was built for n = " + std::to_string(model.n) + ", queried with n = " +
                            std::to_string(n));
  }
  if (!(tol > 0.0)) throw DomainError("membership tolerance must be positive");

  const cplx w = upper(z);
  const double r = std::abs(w);
  if (r > 1.0 + tol) return Membership::Outside;
  if (r == 0.0) return Membership::Inside;
  const double big_r = model.ray_radius(std::atan2(w.imag(), w.real()));
  if (std::abs(r - big_r) <= tol) return Membership::Boundary;
  return r < big_r ? Membership::Inside : Membership::Outside;
}

namespace {

double point_polyline_distance(cplx z, const std::vector<cplx>& line) {
  if (line.size() == 1) return std::abs(z - line.front());
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < line.size(); ++i) {
    const cplx a = line[i], d = line[i + 1] - line[i];
    const double len2 = std::norm(d);
    double t = len2 == 0.0 ? 0.0 : ((z - a) * std::conj(d)).real() / len2;
    t = std::clamp(t, 0.0, 1.0);
    best = std::min(best, std::abs(z - (a + t * d)));
  }
  return best;
}

double hausdorff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double h = 0.0;
  for (const cplx z : a) h = std::max(h, point_polyline_distance(z, b));
  for (const cplx z : b) h = std::max(h, point_polyline_distance(z, a));
  return h;
}

// Greedy nearest matching of two equally sized multisets.
double matching_distance(std::vector<cplx> a, std::vector<cplx> b) {
  double worst = 0.0;
  for (const cplx z : a) {
    const std::size_t j = nearest(b, z);
    worst = std::max(worst, std::abs(b[j] - z));
    b.erase(b.begin() + static_cast<std::ptrdiff_t>(j));
  }
  return worst;
}

}  // namespace

PowerCheckReport power_arc_check(int n, int m, int d, const std::vector<double>& alpha_grid, int probe_steps) {
  if (!(1 < d && d < m && m <= n)) {
    throw PreconditionError("power check needs 1 < d < m <= n, got d = " + std::to_string(d) +
                            ", m = " + std::to_string(m) + ", n = " + std::to_string(n));
  }
  const Fraction src_a(1, m), src_b(1, m - 1);
  if (!is_farey_pair(src_a, src_b, n)) {
    throw PreconditionError(src_a.str() + ", " + src_b.str() + " are not Farey neighbors of order " +
                            std::to_string(n));
  }

  PowerCheckReport rep;
  rep.n = n;
  rep.m = m;
  rep.d = d;
  rep.alpha_grid = alpha_grid;
  rep.source = make_arc(n, src_a, src_b);
  Fraction tgt_a, tgt_b;
  if (m % d == 0) {
    rep.divides_m = true;
    rep.k = m / d;
    tgt_a = Fraction(1, rep.k);
    tgt_b = Fraction(d, m - 1);
  } else if ((m - 1) % d == 0) {
    rep.k = (m - 1) / d;
    if (!(m > rep.k * (n / rep.k))) {
      throw PreconditionError("m = " + std::to_string(m) + " does not exceed k floor(n/k) = " +
                              std::to_string(rep.k * (n / rep.k)));
    }
    tgt_a = Fraction(d, m);
    tgt_b = Fraction(1, rep.k);
  } else {
    throw PreconditionError("d = " + std::to_string(d) + " divides neither m = " + std::to_string(m) +
                            " nor m - 1 = " + std::to_string(m - 1));
  }
  if (!is_farey_pair(std::min(tgt_a, tgt_b), std::max(tgt_a, tgt_b), n)) {
    throw PreconditionError(tgt_a.str() + ", " + tgt_b.str() + " are not Farey neighbors of order " +
                            std::to_string(n));
  }
  rep.target = make_arc(n, tgt_a, tgt_b);

  const auto base = type_one_matrix(m, m - 1);
  for (const double alpha : alpha_grid) {
    const Matrix mat = base.evaluate(rep.divides_m ? 1.0 - alpha : alpha);
    const Matrix powered = matrix_power(mat, d);
    rep.max_coeff_error = std::max(
        rep.max_coeff_error, max_coeff_diff(characteristic_polynomial(powered), reduced_ito_polynomial(rep.target, alpha)));

    std::vector<cplx> pointwise;
    for (const cplx z : spectrum(mat)) pointwise.push_back(std::pow(z, d));
    rep.max_spectrum_error = std::max(rep.max_spectrum_error, matching_distance(pointwise, spectrum(powered)));
  }

  std::vector<cplx> powered_arc, target_arc;
  for (const auto& s : trace_arc(rep.source, probe_steps).samples) powered_arc.push_back(upper(std::pow(s.lambda, d)));
  for (const auto& s : trace_arc(rep.target, probe_steps).samples) target_arc.push_back(upper(s.lambda));
  rep.hausdorff_probe = hausdorff(powered_arc, target_arc);

  rep.pass = rep.max_coeff_error <= 1e-8 && rep.max_spectrum_error <= 1e-7;
  return rep;
}

ConvexityReport convexity_report(const ArcDescriptor& desc, int steps) {
  if (steps < 32) throw DomainError("convexity probe needs at least 32 steps, got " + std::to_string(steps));
  const ArcTrace tr = trace_arc(desc, steps);
  std::vector<ArcSample> grid;
  for (const auto& s : tr.samples)
    if (s.on_grid) grid.push_back(s);

  ConvexityReport rep;
  rep.desc = desc;
  rep.steps = steps;
  rep.min_second_difference = std::numeric_limits<double>::infinity();
  rep.strictly_convex = true;
  rep.convex_within_tolerance = true;
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    const double dd = std::abs(grid[i - 1].lambda) - 2.0 * std::abs(grid[i].lambda) + std::abs(grid[i + 1].lambda);
    if (dd < rep.min_second_difference) {
      rep.min_second_difference = dd;
      rep.alpha_at_min = grid[i].alpha;
    }
    if (!(dd > 0.0)) rep.strictly_convex = false;
    if (dd < -1e-9) {
      rep.convex_within_tolerance = false;
      ++rep.violations;
    }
  }
  return rep;
}

bool in_known_smooth_family(const ArcDescriptor& desc) {
  if (desc.lo.p() != 1 || desc.hi.p() != 1 || desc.hi.q() != desc.lo.q() - 1) return false;
  const int n = desc.n, m = static_cast<int>(desc.lo.q());
  const int lowest = n % 2 == 0 ? n / 2 : n / 2 + 1;
  return lowest <= m && m <= n;
}

DifferentiabilityReport differentiability_scan(int n, int steps) {
  if (n < 4) throw InvalidOrderError("differentiability scan needs n >= 4, got " + std::to_string(n));
  DifferentiabilityReport rep;
  rep.n = n;
  rep.steps = steps;
  const auto model = boundary(n, steps);
  for (const auto& tr : model.traces) {
    ArcSmoothness arc;
    arc.desc = tr.desc;
    arc.known_smooth = in_known_smooth_family(tr.desc);
    arc.min_abs_ft = std::numeric_limits<double>::infinity();
    arc.min_separation = std::numeric_limits<double>::infinity();
    const auto family = reduced_ito_family(tr.desc);
    const auto mat = realizing_matrix(tr.desc);
    for (const auto& s : tr.samples) {
      if (s.alpha <= 0.0 || s.alpha >= 1.0) continue;
      arc.min_abs_ft = std::min(arc.min_abs_ft, std::abs(family.at(s.alpha).derivative()(s.lambda)));
      const auto rs = spectrum(mat.evaluate(s.alpha));
      const double sep = gap_to_others(rs, nearest(rs, s.lambda));
      arc.min_separation = std::min(arc.min_separation, sep);
      if (sep < kEncounterTol) arc.encounters.push_back(s.alpha);
    }
    rep.total_encounters += static_cast<int>(arc.encounters.size());
    if (arc.known_smooth) rep.known_smooth_encounters += static_cast<int>(arc.encounters.size());
    rep.arcs.push_back(std::move(arc));
  }
  return rep;
}

}  // namespace karp
