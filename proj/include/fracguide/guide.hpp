#pragma once

// Parallel-plate guide with plates at y = 0 and y = b, propagation along +z,
// no x-dependence. Fields of order n carry h = n pi / b and
// beta = sqrt(k^2 - h^2).
//
// Fractional-dual fields use C_a = cos(a pi/2), S_a = sin(a pi/2),
// C_ya = cos(h y + a pi/2), S_ya = sin(h y + a pi/2) and the common factor
// (k/h) exp(i (beta z + a pi/2)).

#include <utility>

#include "fracguide/emcore.hpp"
#include "fracguide/types.hpp"

namespace fracguide::guide {

enum class ModeFamily { TE, TM };

struct ModeParams {
  double h = 0.0;
  double beta = 0.0;
};

/// Throws EvanescentMode when h = n pi / b >= k, DomainError for b <= 0 or n < 1.
ModeParams mode_params(double b, int n, double k);

class GuideConfig {
 public:
  /// Plate separation b and mode index n given directly.
  static GuideConfig create(double b, int n, emcore::Medium medium,
                            Complex amp_te = {1.0, 0.0}, Complex amp_tm = {1.0, 0.0});

  /// Mode travelling at `angle` to the axis: h = k sin(angle),
  /// beta = k cos(angle), b = n pi / h.
  static GuideConfig from_angle(double angle, int n, emcore::Medium medium,
                                Complex amp_te = {1.0, 0.0}, Complex amp_tm = {1.0, 0.0});

  double b() const noexcept { return b_; }
  int n() const noexcept { return n_; }
  const emcore::Medium& medium() const noexcept { return medium_; }
  double k() const noexcept { return medium_.k(); }
  double eta() const noexcept { return medium_.eta(); }
  /// C_n, amplitude of the TE (PEC) family.
  Complex amp_te() const noexcept { return amp_te_; }
  /// A_n, amplitude of the TM (PMC) family.
  Complex amp_tm() const noexcept { return amp_tm_; }
  double h() const noexcept { return params_.h; }
  double beta() const noexcept { return params_.beta; }

  GuideConfig with_amplitudes(Complex amp_te, Complex amp_tm) const;

 private:
  GuideConfig(double b, int n, emcore::Medium medium, Complex amp_te, Complex amp_tm);

  double b_;
  int n_;
  emcore::Medium medium_;
  Complex amp_te_;
  Complex amp_tm_;
  ModeParams params_;
};

ModeParams mode_params(const GuideConfig& cfg);

/// TE^z mode of a PEC guide (E_y = E_z = H_x = 0).
FieldSample te_pec_canonical(const GuideConfig& cfg, Point p);

/// TM^z mode of a PMC guide: the alpha = 0 limit of tm_pmc_fractional.
FieldSample tm_pmc_canonical(const GuideConfig& cfg, Point p);

/// The two plane waves, travelling with kvec = (0, -h, beta) and
/// (0, +h, beta), whose sum is the canonical field of `family`.
std::pair<emcore::PlaneWave, emcore::PlaneWave> planewave_decomposition(const GuideConfig& cfg,
                                                                         ModeFamily family);

/// Fractional dual of the TE-PEC mode, closed form.
FieldSample te_pec_fractional(const GuideConfig& cfg, double alpha, Point p);

/// Fractional dual of the TM-PMC mode, closed form.
FieldSample tm_pmc_fractional(const GuideConfig& cfg, double alpha, Point p);

/// Fractional dual field of the DB guide as te_pec_fractional + tm_pmc_fractional.
FieldSample db_fractional(const GuideConfig& cfg, double alpha, Point p);

/// The same field from the combined closed form, evaluated directly.
FieldSample db_fractional_closed_form(const GuideConfig& cfg, double alpha, Point p);

}  // namespace fracguide::guide
