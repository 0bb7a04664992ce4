#include "qlink/thimble.hpp"

#include <cmath>

namespace qlink {

namespace {

constexpr double kEscapeRadius = 6.0;
constexpr double kLaunchOffset = 1e-4;

std::complex<double> flow_rhs(const AiryParams& p, std::complex<double> x) {
  return -std::conj(p.fprime(x));
}

}  // namespace

std::complex<double> AiryParams::f(std::complex<double> x) const {
  return std::complex<double>(0, 1) * lambda() * (x * x * x / 3.0 - x);
}

std::complex<double> AiryParams::fprime(std::complex<double> x) const {
  return std::complex<double>(0, 1) * lambda() * (x * x - 1.0);
}

FlowTrajectory descend(const AiryParams& params, std::complex<double> start,
                       std::complex<double> direction, double max_time, double dt) {
  if (params.b == 0.0) throw std::invalid_argument("b must be nonzero");
  FlowTrajectory traj;
  traj.dt = dt;
  std::complex<double> x = start;
  const double im0 = params.f(x).imag();
  double h_prev = params.f(x).real();
  traj.points.push_back(x);
  (void)direction;  // seeding is the caller's job; kept for the record
  const long steps = static_cast<long>(max_time / dt);
  for (long s = 0; s < steps; ++s) {
    std::complex<double> k1 = flow_rhs(params, x);
    std::complex<double> k2 = flow_rhs(params, x + 0.5 * dt * k1);
    std::complex<double> k3 = flow_rhs(params, x + 0.5 * dt * k2);
    std::complex<double> k4 = flow_rhs(params, x + dt * k3);
    x += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    traj.points.push_back(x);
    double h = params.f(x).real();
    if (h > h_prev + 1e-12) throw StepUnstable("h increased along descent flow");
    h_prev = h;
    double drift = std::abs(params.f(x).imag() - im0);
    if (drift > traj.max_im_drift) traj.max_im_drift = drift;
    if (std::abs(x) > kEscapeRadius) {
      traj.escaped = true;
      break;
    }
  }
  return traj;
}

std::pair<std::complex<double>, std::complex<double>> descent_directions(
    const AiryParams& params, std::complex<double> x0) {
  // h(x0 + t v) ~ h(x0) + Re(f''(x0) v^2) t^2/2; steepest descent at
  // arg(v) = (pi - arg f'')/2
  std::complex<double> f2 = std::complex<double>(0, 1) * params.lambda() * 2.0 * x0;
  double phi = (M_PI - std::arg(f2)) / 2.0;
  std::complex<double> v = std::polar(1.0, phi);
  return {v, -v};
}

int sector_of(const AiryParams& params, std::complex<double> x) {
  // Thirds centered on the a=0 escape rays for this sign of b: 0, 2pi/3,
  // 4pi/3 when b > 0, rotated by pi/3 when b < 0.  Anchoring per b keeps the
  // labels comparable across an a-scan.
  double theta0 = params.b >= 0 ? 0.0 : M_PI / 3.0;
  double theta = std::arg(x) - theta0;
  double third = 2.0 * M_PI / 3.0;
  int k = static_cast<int>(std::floor((theta + third / 2.0) / third));
  return ((k % 3) + 3) % 3;
}

namespace {

ThimbleBranchReport run_branch(const AiryParams& params, std::complex<double> crit,
                               std::complex<double> dir, std::complex<double> other,
                               double max_time, double dt) {
  FlowTrajectory traj = descend(params, crit + kLaunchOffset * dir, dir, max_time, dt);
  ThimbleBranchReport rep;
  rep.max_im_drift = traj.max_im_drift;
  double best = 1e30;
  std::complex<double> best_x;
  for (const auto& x : traj.points) {
    double dd = std::abs(x - other);
    if (dd < best) {
      best = dd;
      best_x = x;
    }
  }
  rep.min_dist_other = best;
  // two independent signals: closest approach and Im f matching
  rep.reached_other =
      best < 1e-3 && std::abs(params.f(best_x).imag() - params.f(other).imag()) < 1e-6;
  rep.sector = traj.escaped ? sector_of(params, traj.points.back()) : -1;
  return rep;
}

}  // namespace

ScanEntry scan_one(double a, double b, double max_time, double dt) {
  AiryParams params{a, b};
  ScanEntry entry;
  entry.a = a;
  const std::complex<double> plus(1.0, 0.0), minus(-1.0, 0.0);
  auto [vp1, vp2] = descent_directions(params, plus);
  auto [vm1, vm2] = descent_directions(params, minus);
  entry.jplus[0] = run_branch(params, plus, vp1, minus, max_time, dt);
  entry.jplus[1] = run_branch(params, plus, vp2, minus, max_time, dt);
  entry.jminus[0] = run_branch(params, minus, vm1, plus, max_time, dt);
  entry.jminus[1] = run_branch(params, minus, vm2, plus, max_time, dt);
  for (const auto* rep : {&entry.jplus[0], &entry.jplus[1], &entry.jminus[0], &entry.jminus[1]}) {
    entry.connected = entry.connected || rep->reached_other;
    entry.max_im_drift = std::max(entry.max_im_drift, rep->max_im_drift);
  }
  return entry;
}

std::vector<ScanEntry> stokes_scan(const std::vector<double>& a_values, double b) {
  std::vector<ScanEntry> out;
  out.reserve(a_values.size());
  for (double a : a_values) out.push_back(scan_one(a, b));
  return out;
}

namespace {

// Sector reached by the thimble branch that faces the other critical point.
// The connecting flow runs downhill, so it launches from the higher saddle:
// h(P+-) = +-2b/3, giving P+ for b > 0 and P- for b < 0.
int facing_sector(double a, double b) {
  AiryParams params{a, b};
  const std::complex<double> src(b > 0 ? 1.0 : -1.0, 0.0);
  const std::complex<double> other = -src;
  auto [v1, v2] = descent_directions(params, src);
  std::complex<double> dir = (v1.real() * src.real() < 0) ? v1 : v2;
  return run_branch(params, src, dir, other, 20.0, 1e-3).sector;
}

}  // namespace

double locate_wall(double b, double lo, double hi, double tol) {
  int slo = facing_sector(lo, b);
  int shi = facing_sector(hi, b);
  if (slo == shi) throw std::invalid_argument("no sector flip in bracket");
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    int smid = facing_sector(mid, b);
    if (smid == slo)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace qlink
