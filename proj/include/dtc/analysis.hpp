#pragma once
// Scaling extraction: log-log power-law fits, the affine power model
// y = s x^p + o, windowed time-scaling fits, and plateau-edge detection.

#include <vector>

namespace dtc {

struct FitResult {
  double exponent = 0.0;
  double prefactor = 0.0;
  double exponent_stderr = 0.0;
  double r_squared = 0.0;
  int n_points = 0;
  double window_min = 0.0;  // abscissa range actually used
  double window_max = 0.0;
};

// ordinary least squares on (ln x, ln y); requires xs, ys > 0 and >= 3 points
FitResult fit_power_law(const std::vector<double>& xs, const std::vector<double>& ys);

struct AffinePowerFit {
  double exponent = 0.0;
  double scale = 0.0;
  double offset = 0.0;
  double sse = 0.0;
  int n_points = 0;
};
// y = scale * x^p + offset, deterministic variable projection: dense grid over
// p with linear least squares for (scale, offset), then parabolic refinement.
// pin_offset forces offset = 0.  Throws if the optimum sits on the p-grid
// boundary (not converged).
AffinePowerFit fit_affine_power(const std::vector<double>& xs, const std::vector<double>& ys,
                                bool pin_offset = false);

struct TransitionEstimate {
  double omega_c = 0.0;
  double tau = 0.02;            // plateau tolerance used
  double grid_resolution = 0.0; // local grid spacing at omega_c
  bool first_point_violates = false;
};
// omega_c = largest grid omega such that every point in [omega_0, omega]
// satisfies |y - y(omega_0)| <= tau |y(omega_0)|; the series may start at 0 or
// at the smallest grid value
TransitionEstimate detect_omega_c(const std::vector<double>& omegas,
                                  const std::vector<double>& ys, double tau = 0.02);

// power-law fit restricted to n in [n_min, n_max]
FitResult fit_time_scaling(const std::vector<double>& ns, const std::vector<double>& ys,
                           double n_min, double n_max);

}  // namespace dtc
