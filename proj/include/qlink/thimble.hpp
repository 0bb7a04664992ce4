#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qlink {

struct StepUnstable : std::runtime_error {
  explicit StepUnstable(const std::string& what) : std::runtime_error(what) {}
};

// f(x) = i*lambda*(x^3/3 - x) with lambda = a + b i, b != 0.  Critical points
// are x = +-1.
struct AiryParams {
  double a = 0.0;
  double b = 1.0;

  std::complex<double> lambda() const { return {a, b}; }
  std::complex<double> f(std::complex<double> x) const;
  std::complex<double> fprime(std::complex<double> x) const;
};

struct FlowTrajectory {
  std::vector<std::complex<double>> points;
  double dt = 0.0;
  double max_im_drift = 0.0;   // max |Im f(x_t) - Im f(x_0)|
  bool escaped = false;        // left the escape radius before max_time
};

// Fixed-step RK4 integration of the descent flow x' = -conj(f'(x)) of
// h = Re f, from `start` seeded in the descent direction `direction`.
// Throws StepUnstable if h ever increases between steps.
FlowTrajectory descend(const AiryParams& params, std::complex<double> start,
                       std::complex<double> direction, double max_time, double dt = 1e-3);

// The two descent directions (unit tangents of the descending manifold) at a
// critical point x0 = +-1.
std::pair<std::complex<double>, std::complex<double>> descent_directions(
    const AiryParams& params, std::complex<double> x0);

// Asymptotic sector of an escape point: thirds of the circle centered on the
// three steepest-descent rays theta_k = (pi - arg(i lambda))/3 + 2 pi k/3.
int sector_of(const AiryParams& params, std::complex<double> x);

struct ThimbleBranchReport {
  bool reached_other = false;  // passed within tol of the other critical point
  int sector = -1;             // sector of the escape endpoint, -1 if none
  double min_dist_other = 0.0;
  double max_im_drift = 0.0;
};

struct ScanEntry {
  double a = 0.0;
  bool connected = false;  // a gradient flow joins P+ and P-
  ThimbleBranchReport jplus[2];
  ThimbleBranchReport jminus[2];
  double max_im_drift = 0.0;
};

ScanEntry scan_one(double a, double b, double max_time = 14.0, double dt = 1e-3);
std::vector<ScanEntry> stokes_scan(const std::vector<double>& a_values, double b);

// Bisection on the sector flip of the J+ branch that faces P-; returns the
// located wall position (|result| small when the wall sits at a = 0).
double locate_wall(double b, double lo = -1.0, double hi = 1.0, double tol = 1e-4);

}  // namespace qlink
