#pragma once

namespace tauberlab {

/// Euler–Mascheroni constant to 20 significant digits.
inline constexpr double kEulerGamma = 0.57721566490153286061;

/// H_m = 1 + 1/2 + ... + 1/m.
inline double harmonic_number(int m) {
  double h = 0.0;
  for (int k = 1; k <= m; ++k) h += 1.0 / k;
  return h;
}

}  // namespace tauberlab
