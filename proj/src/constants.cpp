#include "hartree/constants.hpp"

#include "hartree/special.hpp"

#include <cmath>
#include <stdexcept>

namespace hartree {

using special::beta_fn;
using special::gamma_fn;
using special::gauss8;
using special::sphere_area;

namespace {
constexpr double pi_v = 3.14159265358979323846264338327950288;
} // namespace

SystemParams::SystemParams(int N_, double a1, double a2, double b)
    : N(N_), alpha1(a1), alpha2(a2), beta(b) {
  if (N < 5)
    throw std::domain_error("SystemParams: dimension N >= 5 required");
  if (!(alpha1 > 0.0) || !(alpha2 > 0.0))
    throw std::domain_error("SystemParams: alpha1, alpha2 > 0 required");
  if (!(beta > std::max(alpha1, alpha2)))
    throw std::domain_error("SystemParams: beta > max(alpha1, alpha2) required");
}

double hls_constant(int N, double mu) {
  if (!(mu > 0.0) || !(mu < (double)N))
    throw std::domain_error("hls_constant: mu in (0, N) required");
  return std::pow(pi_v, 0.5 * mu) * gamma_fn(0.5 * N - 0.5 * mu) /
         gamma_fn(N - 0.5 * mu) *
         std::pow(gamma_fn(0.5 * N) / gamma_fn((double)N), -1.0 + mu / N);
}

double riesz_identity_constant(int N, double s) {
  if (!(s > 0.0) || !(s < 0.5 * N))
    throw std::domain_error("riesz_identity_constant: s in (0, N/2) required");
  return std::pow(pi_v, 0.5 * N) * gamma_fn(0.5 * (N - 2.0 * s)) /
         gamma_fn(N - s);
}

double greens_constant(int N) {
  if (N < 5)
    throw std::domain_error("greens_constant: N >= 5 required");
  return 0.25 * std::pow(pi_v, -0.5 * N) * gamma_fn(0.5 * (N - 2));
}

//==============================================================================
// S by quadrature. Both integrals are over [0, inf); split at r = 1 and map
// the outer part back to [0, 1] via r -> 1/r. The integrands of the profile
// U = (1+r^2)^{-(N-2)/2} are then smooth on [0, 1].
namespace {

template <typename F>
double gl01(F &&f, int panels) {
  const auto g = gauss8();
  double s = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double a = (double)p / panels, b = (double)(p + 1) / panels;
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    for (int k = 0; k < g.n; ++k)
      s += h * g.w[k] * f(c + h * g.x[k]);
  }
  return s;
}

} // namespace

SobolevConstants sobolev_constants(int N, int panels) {
  const double m = 0.5 * (N - 2); // U = (1+r^2)^{-m}, U' = -2 m r (1+r^2)^{-m-1}
  auto grad2 = [&](double r) {
    const double w = 1.0 + r * r;
    const double up = -2.0 * m * r * std::pow(w, -m - 1.0);
    return up * up * std::pow(r, N - 1.0);
  };
  const double pstar = 2.0 * N / (N - 2.0);
  auto upow = [&](double r) {
    const double w = 1.0 + r * r;
    return std::pow(w, -m * pstar) * std::pow(r, N - 1.0);
  };
  auto full = [&](auto &&f) {
    return gl01(f, panels) +
           gl01([&](double t) { return f(1.0 / t) / (t * t); }, panels);
  };
  const double sig = sphere_area(N);
  const double dir = sig * full(grad2);
  const double lp = std::pow(sig * full(upow), 2.0 / pstar);
  if (!(dir > 0.0) || !(lp > 0.0) || !std::isfinite(dir) || !std::isfinite(lp))
    throw std::runtime_error("sobolev_constants: quadrature failed");
  const double S = dir / lp;
  return {S, S / std::sqrt(hls_constant(N, 4.0))};
}

//==============================================================================
CouplingMinimum coupling(const SystemParams &p) {
  const double a1 = p.alpha1, a2 = p.alpha2, b = p.beta;
  const double det = b * b - a1 * a2;
  const double k0 = (b - a2) / det;
  const double l0 = (b - a1) / det;
  auto f = [&](double t) {
    return (t + 1.0) * (t + 1.0) / (a1 * t * t + 2.0 * b * t + a2);
  };
  // golden-section on [0, 10 max(1, b/a1)]; f is unimodal on [0, inf) here
  double lo = 0.0, hi = 10.0 * std::max(1.0, b / a1);
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = hi - phi * (hi - lo), d = lo + phi * (hi - lo);
  double fc = f(c), fd = f(d);
  while (hi - lo > 1e-10) {
    if (fc < fd) {
      hi = d; d = c; fd = fc;
      c = hi - phi * (hi - lo); fc = f(c);
    } else {
      lo = c; c = d; fc = fd;
      d = lo + phi * (hi - lo); fd = f(d);
    }
  }
  return {k0, l0, k0 + l0, 0.5 * (lo + hi)};
}

EnergyLevels energy_levels(const SystemParams &p) {
  const auto cp = coupling(p);
  const double shl2 = [&] {
    const auto sc = sobolev_constants(p.N);
    return sc.S_HL * sc.S_HL;
  }();
  EnergyLevels e;
  e.c_infty = 0.25 * cp.fmin * shl2;
  e.c1_infty = 0.25 * shl2 / p.alpha1;
  e.c2_infty = 0.25 * shl2 / p.alpha2;
  e.window_lo = e.c_infty;
  e.window_hi = std::min({e.c1_infty, e.c2_infty, 2.0 * e.c_infty});
  return e;
}

Admissibility admissibility(const SystemParams &p, double v1norm, double v2norm) {
  if (v1norm < 0.0 || v2norm < 0.0)
    throw std::domain_error("admissibility: potential norms must be >= 0");
  const double a1 = p.alpha1, a2 = p.alpha2, b = p.beta;
  const double den = 2.0 * b - a1 - a2;
  const double C = hls_constant(p.N, 4.0);
  const double lhs = ((b - a2) * v1norm + (b - a1) * v2norm) / (den * std::sqrt(C));
  const double det = b * b - a1 * a2;
  const double m = std::min({std::sqrt(det / (a1 * den)),
                             std::sqrt(det / (a2 * den)), std::sqrt(2.0)});
  const double shl = sobolev_constants(p.N).S_HL;
  const double rhs = (m - 1.0) * shl;
  return {lhs > 0.0 && lhs < rhs, lhs, rhs};
}

double bubble_amplitude(int N) {
  const double S = sobolev_constants(N).S;
  return std::pow(S, -0.25 * (N - 4)) / std::sqrt(hls_constant(N, 4.0)) *
         std::pow((double)(N * (N - 2)), 0.25 * (N - 2));
}

ConstantsReport constants_report(const SystemParams &p) {
  ConstantsReport r{p, 0, 0, 0, 0, {0, 0}, {0, 0, 0, 0}, 0, 0, 0, {0, 0, 0, 0, 0}};
  r.C_Nmu = hls_constant(p.N, p.mu);
  r.I2 = riesz_identity_constant(p.N, 2.0);
  r.I_half = riesz_identity_constant(p.N, 0.5 * (p.N - 2));
  r.R_N = greens_constant(p.N);
  r.sob = sobolev_constants(p.N);
  r.coupling = coupling(p);
  r.C_N_amp = std::pow(r.sob.S, -0.25 * (p.N - 4)) / std::sqrt(r.C_Nmu) *
              std::pow((double)(p.N * (p.N - 2)), 0.25 * (p.N - 2));
  const double denom = std::sqrt(r.R_N * r.I2 * r.I_half);
  r.C1 = std::sqrt(r.coupling.k0) / denom;
  r.C2 = std::sqrt(r.coupling.l0) / denom;
  r.levels = energy_levels(p);
  return r;
}

} // namespace hartree
