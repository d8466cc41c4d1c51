#pragma once

// Arc tracing by root continuation, the assembled boundary, membership
// queries, the matrix-power check and the empirical probes.

#include <complex>
#include <string_view>
#include <vector>

#include "karp/arcs.hpp"

namespace karp {

struct ArcSample {
  double alpha = 0.0;
  std::complex<double> lambda;
  /// alpha is one of the uniform grid points i / steps.
  bool on_grid = true;
};

struct ArcTrace {
  ArcDescriptor desc;
  int steps = 0;
  /// Ordered by alpha from 0 (the pq end) to 1 (the rs end).
  std::vector<ArcSample> samples;
  /// alpha of every off-grid sample; samples.size() == steps + 1 + refinement_events.size().
  std::vector<double> refinement_events;
  /// alpha where refinement could not separate the tracked root from a neighbor.
  std::vector<double> collision_events;
};

/// Follows the arc root from exp(2 pi i pq) at alpha = 0 to exp(2 pi i rs) at
/// alpha = 1 over a uniform grid of `steps` intervals.
///
/// The root set at each alpha is the spectrum of the realizing matrix. At
/// alpha = 0 the seed may be a multiple root, so every root near the seed at
/// the first sub-step is followed and the branch that reaches the far
/// endpoint is kept. A step is accepted when the nearest other root is at
/// least twice the move away; otherwise it is halved (up to 20 times). A step
/// that still fails is a collision: the root with the largest imaginary part
/// among the tied ones is taken. Conjugate arcs are traced on their mirror.
///
/// Throws DomainError for steps < 8 and TraceError if no branch reaches the
/// far endpoint.
ArcTrace trace_arc(const ArcDescriptor& desc, int steps);

struct RadialPoint {
  double theta = 0.0;
  double r = 0.0;
};

struct BoundaryModel {
  int n = 0;
  /// Traces of the upper-half arcs in increasing order of lo.
  std::vector<ArcTrace> traces;
  /// (arg, modulus) of every traced sample, sorted by strictly increasing
  /// angle in [0, pi]; repeated angles keep the largest modulus.
  std::vector<RadialPoint> radial_table;
  /// The upper boundary as one polyline from 1 to -1.
  std::vector<std::complex<double>> outline;

  /// Piecewise-linear interpolation of radial_table. Throws StateError when empty.
  double radius_at(double theta) const;

  /// Largest distance from 0 at which the ray of angle theta meets the
  /// outline. Throws StateError when empty.
  double ray_radius(double theta) const;
};

/// Traces every upper-half arc of order n (concurrently, merged in arc
/// order). Throws InvalidOrderError for n < 2; trace errors are rethrown with
/// the arc name prefixed.
BoundaryModel boundary(int n, int steps = 256);

enum class Membership { Inside, Boundary, Outside };

/// "inside", "boundary" or "outside".
std::string_view to_string(Membership m) noexcept;

/// Classifies z against the model: z is reflected into the upper half plane
/// and |z| is compared with the boundary radius along its ray. The radius is
/// found by casting the ray against the traced outline rather than by
/// interpolating radial_table, which misplaces segments lying on a ray.
/// Throws StateError for an empty model, PreconditionError if model.n != n
/// and DomainError for tol <= 0.
Membership membership(std::complex<double> z, int n, const BoundaryModel& model, double tol = 1e-6);

struct PowerCheckReport {
  int n = 0, m = 0, d = 0, k = 0;
  /// true for d | m, false for d | (m - 1)
  bool divides_m = false;
  ArcDescriptor source;
  ArcDescriptor target;
  std::vector<double> alpha_grid;
  /// max over the grid of the coefficient error of chi(M^d) against the
  /// target reduced Ito polynomial
  double max_coeff_error = 0.0;
  /// max over the grid of the matching distance between {lambda^d} and spectrum(M^d)
  double max_spectrum_error = 0.0;
  /// Hausdorff distance between the powered source trace and the target
  /// trace. A probe, not part of pass.
  double hausdorff_probe = 0.0;
  bool pass = false;
};

/// Checks that M(alpha)^d, M the Type I matrix of t^m - beta t - alpha,
/// realizes the arc K_n(1/k, d/(m-1)) when d | m (k = m/d, evaluated at
/// 1 - alpha so that the roles of alpha and beta are exchanged), or
/// K_n(d/m, 1/k) when d | (m - 1) (k = (m-1)/d). Throws PreconditionError
/// naming the failed hypothesis.
PowerCheckReport power_arc_check(int n, int m, int d, const std::vector<double>& alpha_grid, int probe_steps = 256);

struct ConvexityReport {
  ArcDescriptor desc;
  int steps = 0;
  /// min over interior grid samples of |l(a-h)| - 2|l(a)| + |l(a+h)|
  double min_second_difference = 0.0;
  double alpha_at_min = 0.0;
  /// every second difference > 0
  bool strictly_convex = false;
  /// every second difference >= -1e-9
  bool convex_within_tolerance = false;
  int violations = 0;
};

/// Probe of the strict convexity of alpha -> |lambda(alpha)| along the arc.
/// Throws DomainError for steps < 32.
ConvexityReport convexity_report(const ArcDescriptor& desc, int steps);

struct ArcSmoothness {
  ArcDescriptor desc;
  /// min |F_t| over the interior samples
  double min_abs_ft = 0.0;
  /// min distance from the tracked root to another root, interior samples
  double min_separation = 0.0;
  /// interior alpha where the tracked root was within 1e-7 of another root
  std::vector<double> encounters;
  /// K_n(1/m, 1/(m-1)) with m in the range where it is known to be smooth
  bool known_smooth = false;
};

struct DifferentiabilityReport {
  int n = 0;
  int steps = 0;
  std::vector<ArcSmoothness> arcs;
  int total_encounters = 0;
  int known_smooth_encounters = 0;
};

/// True when desc is K_n(1/m, 1/(m-1)) with floor(n/2) <= m <= n for even n,
/// or floor(n/2) + 1 <= m <= n for odd n.
bool in_known_smooth_family(const ArcDescriptor& desc);

/// Traces every upper-half arc and looks for points where the tracked root
/// meets another root. Throws InvalidOrderError for n < 4.
DifferentiabilityReport differentiability_scan(int n, int steps);

}  // namespace karp
