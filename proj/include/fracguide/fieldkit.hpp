#pragma once

// Sampling, alpha sweeps, field-line tracing and the numerical oracles used
// to check the closed-form fields (finite-difference Maxwell and Helmholtz
// residuals, wall residuals, plane-wave superposition, field-ratio impedance).

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "fracguide/guide.hpp"
#include "fracguide/impedance.hpp"
#include "fracguide/types.hpp"

namespace fracguide::fieldkit {

struct Range {
  double min = 0.0;
  double max = 1.0;
  std::size_t count = 2;

  /// Evenly spaced values including both ends. Throws DomainError unless
  /// count >= 2 and min < max.
  std::vector<double> values() const;
};

struct SampleGrid {
  Range y;
  Range z;
  double phase = 0.0;
};

/// (h y, beta z) in radians.
struct NormalizedPoint {
  double hy = 0.0;
  double bz = 0.0;
};

struct SweepRow {
  double alpha = 0.0;
  FieldSample sample;
};

/// Re/Im of E_x, E_y, E_z, etaH_x, etaH_y, etaH_z, interleaved.
std::array<double, 12> component_table(const FieldSample& s);

/// Evaluates db_fractional at the physical point for every alpha. Throws
/// DomainError if y = hy/h falls outside [0, b].
std::vector<SweepRow> alpha_sweep(const guide::GuideConfig& cfg, NormalizedPoint point,
                                  std::span<const double> alphas);

/// db_fractional over the grid, row-major in y then z.
std::vector<FieldSample> sample_grid(const guide::GuideConfig& cfg, double alpha,
                                     const SampleGrid& grid);

/// Largest |component| of (E, eta H) of the alpha = 0 DB field over the
/// cross-section. The magnitudes do not depend on z.
double max_field(const guide::GuideConfig& cfg);

enum class FieldComponent { E, H };

enum class LineEnd { Wall, ZBound, MaxPoints, Stagnation };

struct FieldLine {
  std::vector<Point> points;
  FieldComponent component = FieldComponent::E;
  Point seed;
  LineEnd end = LineEnd::MaxPoints;
};

struct TraceOptions {
  double phase = 0.0;      // snapshot phase: the traced field is Re[F e^{i phase}]
  double step = 1e-2;      // arc length per RK4 step, meters
  std::size_t max_points = 500;
  double z_min = 0.0;
  double z_max = 1.0;
  int direction = +1;      // -1 traces against the field
};

/// Fixed-step RK4 on the unit direction field of (F_y, F_z). A line stops
/// when a stage would leave the guide or the z bounds, when |F| drops below
/// 1e-12 * max_field, or at max_points.
std::vector<FieldLine> trace_fieldlines(const guide::GuideConfig& cfg, double alpha,
                                        FieldComponent component, std::span<const Point> seeds,
                                        const TraceOptions& options);

/// ny x nz cell-centred seeds over the full gap and one guided wavelength.
std::vector<Point> default_seeds(const guide::GuideConfig& cfg, std::size_t ny, std::size_t nz);

/// One guided wavelength, 2 pi / beta.
double guided_wavelength(const guide::GuideConfig& cfg);

struct MaxwellResidual {
  double r1 = 0.0;  // |curl E - i k eta H| / (k max_field)
  double r2 = 0.0;  // |curl eta H + i k E| / (k max_field)
};

/// Central-difference curls of db_fractional. The stencil must stay 2 fd_step
/// inside the plates, otherwise DomainError.
MaxwellResidual maxwell_residual(const guide::GuideConfig& cfg, double alpha, Point p,
                                 double fd_step);

/// |(d2/dy2 + d2/dz2 + k^2) E| / (k^2 max_field) by central differences.
double helmholtz_residual(const guide::GuideConfig& cfg, double alpha, Point p, double fd_step);

struct WallResidual {
  double e_normal = 0.0;  // max |E_y| at y in {0, b}, over max_field
  double h_normal = 0.0;  // max |eta H_y| at y in {0, b}, over max_field
};

WallResidual boundary_residual(const guide::GuideConfig& cfg, double alpha,
                               std::span<const double> z_samples);

/// DB field built from plane waves: each wave of the TE and TM
/// decompositions goes through emcore::fractional_curl and the results are
/// summed at p.
FieldSample planewave_path(const guide::GuideConfig& cfg, double alpha, Point p);

/// Impedances from field ratios of db_fractional at (y, z = 0):
/// xz = -E_x/H_z and zx = -E_z/H_x.
impedance::ImpedancePair field_ratio_impedance(const guide::GuideConfig& cfg, double alpha,
                                               double y);

}  // namespace fracguide::fieldkit
