#include "hartree/special.hpp"

#include <cmath>
#include <stdexcept>

namespace hartree::special {

namespace {

// Lanczos coefficients, g = 607/128, from Boost/GSL lineage.
constexpr double lanczos_g = 607.0 / 128.0;
constexpr double lanczos_c[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

constexpr double pi_v = 3.14159265358979323846264338327950288;

double lanczos_series(double z) {
  double s = lanczos_c[0];
  for (int k = 1; k < 15; ++k)
    s += lanczos_c[k] / (z - 1.0 + k);
  return s;
}

} // namespace

double log_gamma(double x) {
  if (!(x > 0.0))
    throw std::domain_error("log_gamma: requires x > 0");
  // ln Gamma(x) = ln(sqrt(2 pi)) + (x-1/2) ln(t) - t + ln A(x), t = x+g-1/2
  const double t = x + lanczos_g - 0.5;
  return 0.91893853320467274178 /* ln sqrt(2 pi) */
         + (x - 0.5) * std::log(t) - t + std::log(lanczos_series(x));
}

double gamma_fn(double x) {
  if (x > 0.0)
    return std::exp(log_gamma(x));
  // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
  if (x == std::floor(x))
    throw std::domain_error("gamma_fn: pole at nonpositive integer");
  return pi_v / (std::sin(pi_v * x) * gamma_fn(1.0 - x));
}

double beta_fn(double a, double b) {
  return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

double sphere_area(int n) {
  if (n < 1)
    throw std::domain_error("sphere_area: n >= 1");
  return 2.0 * std::pow(pi_v, 0.5 * n) / gamma_fn(0.5 * n);
}

namespace {
constexpr double gx8[8] = {
    -0.96028985649753618, -0.79666647741362673, -0.52553240991632899,
    -0.18343464249564978, 0.18343464249564978,  0.52553240991632899,
    0.79666647741362673,  0.96028985649753618};
constexpr double gw8[8] = {
    0.10122853629037669, 0.22238103445337434, 0.31370664587788705,
    0.36268378337836177, 0.36268378337836177, 0.31370664587788705,
    0.22238103445337434, 0.10122853629037669};
constexpr double gx16[16] = {
    -0.98940093499164994,  -0.9445750230732326,  -0.86563120238783176,
    -0.755404408355003,    -0.61787624440264377, -0.45801677765722737,
    -0.28160355077925892,  -0.095012509837637454, 0.095012509837637454,
    0.28160355077925892,   0.45801677765722737,  0.61787624440264377,
    0.755404408355003,     0.86563120238783176,  0.9445750230732326,
    0.98940093499164994};
constexpr double gw16[16] = {
    0.027152459411754037, 0.062253523938647706, 0.095158511682492591,
    0.12462897125553403,  0.14959598881657676,  0.16915651939500262,
    0.18260341504492361,  0.18945061045506859,  0.18945061045506859,
    0.18260341504492361,  0.16915651939500262,  0.14959598881657676,
    0.12462897125553403,  0.095158511682492591, 0.062253523938647706,
    0.027152459411754037};
} // namespace

GaussRule gauss8() { return {8, gx8, gw8}; }
GaussRule gauss16() { return {16, gx16, gw16}; }

} // namespace hartree::special
