#pragma once

// Transverse wave impedance of the fractional dual DB guide.
//
//   Z_xz = eta (k/h) (A S_a C_ya + i C C_a S_ya) / (C C_a C_ya + i A S_a S_ya)
//   Z_zx = eta (h/k) (A C_a C_ya - i C S_a S_ya) / (C S_a C_ya - i A C_a S_ya)
//
// with A = A_n (TM amplitude) and C = C_n (TE amplitude). Z_xz equals
// -E_x/H_z of the DB field; the Z_zx expression equals -E_z/H_x.
//
// At the wall (y = 0) with A_n = C_n the normalized factors are
//
//   z_xz = (S_a C_a + i C_a S_a) / (C_a C_a + i S_a S_a)
//   z_zx = (C_a C_a - i S_a S_a) / (S_a C_a - i C_a S_a)
//
// and the wall impedance dyad is (k/h) z_xz xz + (h/k) z_zx zx.

#include <optional>

#include "fracguide/guide.hpp"
#include "fracguide/types.hpp"

namespace fracguide::impedance {

/// A ratio whose normalized denominator at or below this is INFINITE.
inline constexpr double kInfiniteThreshold = 1e-14;

/// An impedance and its reciprocal. An empty optional is the INFINITE marker.
struct ImpedanceValue {
  std::optional<Complex> impedance;
  std::optional<Complex> admittance;

  bool infinite() const noexcept { return !impedance.has_value(); }
};

struct ImpedancePair {
  ImpedanceValue xz;
  ImpedanceValue zx;
};

/// scale * numerator / denominator. `reference` makes the threshold test
/// dimensionless: |denominator| / reference <= kInfiniteThreshold is INFINITE,
/// and likewise for the numerator and the admittance.
ImpedanceValue make_ratio(Complex scale, Complex numerator, Complex denominator,
                          double reference = 1.0);

/// Physical wave impedances (ohms) at height y for the config's amplitudes.
ImpedancePair wave_impedance(const guide::GuideConfig& cfg, double alpha, double y);

/// Normalized wall factors z_xz and z_zx at y = 0 with A_n = C_n.
ImpedancePair wall_impedance_matrix(double alpha);

}  // namespace fracguide::impedance
