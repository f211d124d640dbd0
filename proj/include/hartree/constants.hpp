#pragma once

#include <string>

// Closed-form constants of the coupled critical Hartree system
//   -Delta u = a1 (|x|^-4 * u^2) u + b (|x|^-4 * v^2) u   (and symmetric in v)
// on R^N, N >= 5, in the coupling regime b > max{a1, a2} > 0.

namespace hartree {

struct SystemParams {
  int N;         // dimension, >= 5
  double alpha1; // self-coupling of u
  double alpha2; // self-coupling of v
  double beta;   // cross coupling, > max(alpha1, alpha2)
  double mu = 4.0;

  SystemParams(int N_, double a1, double a2, double b); // validates
};

struct CouplingMinimum {
  double k0;    // (b - a2) / (b^2 - a1 a2)
  double l0;    // (b - a1) / (b^2 - a1 a2)
  double fmin;  // k0 + l0 = min_{t>=0} (t+1)^2/(a1 t^2 + 2 b t + a2)
  double tstar; // argmin, located by golden-section scan
};

struct EnergyLevels {
  double c_infty;   // (k0 + l0) S_HL^2 / 4
  double c1_infty;  // S_HL^2 / (4 a1)
  double c2_infty;  // S_HL^2 / (4 a2)
  double window_lo; // c_infty
  double window_hi; // min{c1_infty, c2_infty, 2 c_infty}
};

struct Admissibility {
  bool admissible; // 0 < lhs < rhs
  double lhs;
  double rhs;
};

struct SobolevConstants {
  double S;    // Rayleigh quotient of (1+r^2)^{-(N-2)/2}, by quadrature
  double S_HL; // S / sqrt(C(N,4))
};

struct ConstantsReport {
  SystemParams params;
  double C_Nmu;      // sharp constant of the convolution inequality, mu = 4
  double I2;         // I(2)
  double I_half;     // I((N-2)/2)
  double R_N;        // Green-function normalization
  SobolevConstants sob;
  CouplingMinimum coupling;
  double C_N_amp; // bubble amplitude
  double C1, C2;  // component amplitudes of the classified pair
  EnergyLevels levels;
};

// C(N, mu) = pi^{mu/2} Gamma(N/2-mu/2)/Gamma(N-mu/2) (Gamma(N/2)/Gamma(N))^{-1+mu/N}
double hls_constant(int N, double mu);

// I(s) = pi^{N/2} Gamma((N-2s)/2) / Gamma(N-s),  0 < s < N/2
double riesz_identity_constant(int N, double s);

// R_N = (1/4) pi^{-N/2} Gamma((N-2)/2) = 1 / ((N-2) sigma_{N-1})
double greens_constant(int N);

// S as the Rayleigh quotient ||grad U||^2 / |U|^2_{2N/(N-2)} of
// U = (1+r^2)^{-(N-2)/2}, evaluated by composite Gauss quadrature;
// panels_per_unit controls accuracy (default reaches ~1e-13 relative).
SobolevConstants sobolev_constants(int N, int panels = 120);

CouplingMinimum coupling(const SystemParams &p);

EnergyLevels energy_levels(const SystemParams &p);

// Smallness condition on the potentials, via their L^{N/2} norms:
//   lhs = [(b-a2) v1 + (b-a1) v2] / [(2b-a1-a2) sqrt(C(N,4))]
//   rhs = (min{sqrt((b^2-a1a2)/(a1(2b-a1-a2))),
//              sqrt((b^2-a1a2)/(a2(2b-a1-a2))), sqrt(2)} - 1) S_HL
Admissibility admissibility(const SystemParams &p, double v1norm, double v2norm);

// bubble amplitude: S^{-(N-4)/4} C(N,4)^{-1/2} [N(N-2)]^{(N-2)/4}
double bubble_amplitude(int N);

ConstantsReport constants_report(const SystemParams &p);

} // namespace hartree
