#pragma once

// Gamma/Beta and unit-sphere areas. Gamma is a Lanczos approximation
// (g = 607/128, 15 coefficients), relative accuracy ~1e-14 on the positive
// axis; validated against exact integer and half-integer values in tests.

namespace hartree::special {

double log_gamma(double x); // x > 0
double gamma_fn(double x);  // x > 0, with reflection for completeness
double beta_fn(double a, double b);

// area of the unit sphere S^{n-1} subset R^n:  2 pi^{n/2} / Gamma(n/2)
double sphere_area(int n);

// Gauss--Legendre nodes/weights on [-1, 1]
struct GaussRule {
  int n;
  const double *x;
  const double *w;
};
GaussRule gauss8();
GaussRule gauss16();

} // namespace hartree::special
