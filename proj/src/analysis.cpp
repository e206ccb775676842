#include "dtc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace dtc {

FitResult fit_power_law(const std::vector<double>& xs, const std::vector<double>& ys) {
  const std::size_t n = xs.size();
  if (n != ys.size()) throw std::invalid_argument("fit: xs and ys length mismatch");
  if (n < 3) throw std::invalid_argument("fit: need at least 3 points");

  std::vector<double> lx(n), ly(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(xs[i] > 0.0) || !(ys[i] > 0.0))
      throw std::invalid_argument("fit: log-log fit needs strictly positive data");
    lx[i] = std::log(xs[i]);
    ly[i] = std::log(ys[i]);
  }

  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= double(n);
  my /= double(n);

  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit: all abscissae identical");

  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double ssr = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ly[i] - (intercept + slope * lx[i]);
    ssr += r * r;
  }

  FitResult fit;
  fit.exponent = slope;
  fit.prefactor = std::exp(intercept);
  fit.exponent_stderr = (n > 2) ? std::sqrt(std::max(0.0, ssr / double(n - 2) / sxx)) : 0.0;
  fit.r_squared = (syy > 0.0) ? 1.0 - ssr / syy : 1.0;
  fit.n_points = static_cast<int>(n);
  fit.window_min = *std::min_element(xs.begin(), xs.end());
  fit.window_max = *std::max_element(xs.begin(), xs.end());
  return fit;
}

namespace {

struct LinearSolve {
  double scale = 0.0;
  double offset = 0.0;
  double sse = 0.0;
  bool ok = false;
};

// least squares for y = s x^p (+ o) at fixed p
LinearSolve solve_at(const std::vector<double>& xs, const std::vector<double>& ys, double p,
                     bool pin_offset) {
  const std::size_t n = xs.size();
  double sff = 0.0, sf = 0.0, sfy = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = std::pow(xs[i], p);
    sff += f * f;
    sf += f;
    sfy += f * ys[i];
    sy += ys[i];
  }
  LinearSolve sol;
  if (pin_offset) {
    if (sff <= 0.0) return sol;
    sol.scale = sfy / sff;
  } else {
    const double det = sff * double(n) - sf * sf;
    if (std::abs(det) < 1e-12 * sff * double(n)) return sol;
    sol.scale = (sfy * double(n) - sf * sy) / det;
    sol.offset = (sff * sy - sf * sfy) / det;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ys[i] - (sol.scale * std::pow(xs[i], p) + sol.offset);
    sol.sse += r * r;
  }
  sol.ok = true;
  return sol;
}

}  // namespace

AffinePowerFit fit_affine_power(const std::vector<double>& xs, const std::vector<double>& ys,
                                bool pin_offset) {
  const std::size_t n = xs.size();
  if (n != ys.size()) throw std::invalid_argument("fit: xs and ys length mismatch");
  if (n < 4) throw std::invalid_argument("fit: affine power model needs at least 4 points");
  for (double x : xs)
    if (!(x > 0.0)) throw std::invalid_argument("fit: abscissae must be strictly positive");

  constexpr double p_lo = 0.05, p_hi = 4.0;
  constexpr int grid = 4000;
  std::vector<double> sse(grid, std::numeric_limits<double>::infinity());
  int best = -1;
  for (int k = 0; k < grid; ++k) {
    const double p = p_lo + (p_hi - p_lo) * double(k) / double(grid - 1);
    const LinearSolve sol = solve_at(xs, ys, p, pin_offset);
    if (!sol.ok) continue;
    sse[k] = sol.sse;
    if (best < 0 || sol.sse < sse[best]) best = k;
  }
  if (best < 0) throw std::runtime_error("affine power fit: linear subproblem singular everywhere");
  if (best == 0 || best == grid - 1)
    throw std::runtime_error("affine power fit did not converge: optimum at exponent grid boundary p = " +
                             std::to_string(p_lo + (p_hi - p_lo) * double(best) / double(grid - 1)));

  // parabolic refinement through the three bracketing grid values
  const double h = (p_hi - p_lo) / double(grid - 1);
  const double pm = p_lo + h * double(best);
  const double d1 = sse[best + 1] - sse[best - 1];
  const double d2 = sse[best + 1] - 2.0 * sse[best] + sse[best - 1];
  double p_star = pm;
  if (d2 > 0.0) p_star = pm - 0.5 * h * d1 / d2;
  p_star = std::clamp(p_star, pm - h, pm + h);

  LinearSolve sol = solve_at(xs, ys, p_star, pin_offset);
  if (!sol.ok) {
    p_star = pm;
    sol = solve_at(xs, ys, p_star, pin_offset);
  }

  AffinePowerFit fit;
  fit.exponent = p_star;
  fit.scale = sol.scale;
  fit.offset = sol.offset;
  fit.sse = sol.sse;
  fit.n_points = static_cast<int>(n);
  return fit;
}

TransitionEstimate detect_omega_c(const std::vector<double>& omegas,
                                  const std::vector<double>& ys, double tau) {
  const std::size_t n = omegas.size();
  if (n != ys.size()) throw std::invalid_argument("detect: grid and values length mismatch");
  if (n < 2) throw std::invalid_argument("detect: need at least 2 grid points");
  if (!(tau > 0.0)) throw std::invalid_argument("detect: tolerance must be positive");
  for (std::size_t i = 1; i < n; ++i)
    if (!(omegas[i] > omegas[i - 1]))
      throw std::invalid_argument("detect: grid must be strictly increasing");

  const double y0 = ys[0];
  const double threshold = tau * std::abs(y0);
  std::size_t last = 0;  // plateau extends through this index
  while (last + 1 < n && std::abs(ys[last + 1] - y0) <= threshold) ++last;

  TransitionEstimate est;
  est.tau = tau;
  est.omega_c = omegas[last];
  est.first_point_violates = (last == 0);
  est.grid_resolution = (last == 0) ? omegas[1] - omegas[0]
                        : (last + 1 < n) ? omegas[last + 1] - omegas[last]
                                         : omegas[last] - omegas[last - 1];
  return est;
}

FitResult fit_time_scaling(const std::vector<double>& ns, const std::vector<double>& ys,
                           double n_min, double n_max) {
  if (ns.size() != ys.size()) throw std::invalid_argument("fit: xs and ys length mismatch");
  if (!(n_min < n_max)) throw std::invalid_argument("fit: empty time window");
  std::vector<double> xs_w, ys_w;
  for (std::size_t i = 0; i < ns.size(); ++i)
    if (ns[i] >= n_min && ns[i] <= n_max) {
      xs_w.push_back(ns[i]);
      ys_w.push_back(ys[i]);
    }
  if (xs_w.size() < 3)
    throw std::invalid_argument("fit: time window keeps only " + std::to_string(xs_w.size()) +
                                " points, need at least 3");
  return fit_power_law(xs_w, ys_w);
}

}  // namespace dtc
