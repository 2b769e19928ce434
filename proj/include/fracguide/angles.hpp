#pragma once

#include <cmath>
#include <utility>

#include "fracguide/types.hpp"

namespace fracguide {

struct SinCos {
  double sin = 0.0;
  double cos = 1.0;
};

/// sin and cos of alpha*pi/2. The nearest whole number of quarter turns is
/// taken out first, so integer alpha yields exact 0 and +-1.
inline SinCos quarter_turn_sincos(double alpha) {
  const double turns = std::nearbyint(alpha);
  const double rest = (alpha - turns) * (kPi / 2.0);
  const double s = std::sin(rest);
  const double c = std::cos(rest);
  long q = static_cast<long>(std::fmod(turns, 4.0));
  if (q < 0) q += 4;
  switch (q) {
    case 1: return {c, -s};
    case 2: return {-s, -c};
    case 3: return {-c, s};
    default: return {s, c};
  }
}

/// sin and cos of (theta + alpha*pi/2) by angle addition on top of the
/// exact quarter-turn values.
inline SinCos shifted_sincos(double theta, double alpha) {
  const SinCos a = quarter_turn_sincos(alpha);
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  return {s * a.cos + c * a.sin, c * a.cos - s * a.sin};
}

/// exp(i * alpha * pi / 2).
inline Complex quarter_turn_phase(double alpha) {
  const SinCos a = quarter_turn_sincos(alpha);
  return {a.cos, a.sin};
}

}  // namespace fracguide
