#include "special_math.hpp"

#include <cmath>
#include <limits>

#include "error.hpp"

namespace haptex {

double log_beta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

double beta_pdf(double x, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    fail(ErrorCode::invalid_arg, "beta_pdf: shape parameters must be positive");
  }
  if (x < 0.0 || x > 1.0) return 0.0;
  if (x == 0.0) {
    if (a > 1.0) return 0.0;
    if (a == 1.0) return std::exp(-log_beta(a, b)) * std::pow(1.0 - x, b - 1.0);
    return std::numeric_limits<double>::infinity();
  }
  if (x == 1.0) {
    if (b > 1.0) return 0.0;
    if (b == 1.0) return std::exp(-log_beta(a, b)) * std::pow(x, a - 1.0);
    return std::numeric_limits<double>::infinity();
  }
  return std::exp((a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x) - log_beta(a, b));
}

namespace {

// Lentz's method for the continued fraction of I_x(a, b).
double beta_cf(double a, double b, double x) {
  constexpr double tiny = 1e-300;
  constexpr double eps = 1e-15;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 400; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < eps) return h;
  }
  fail(ErrorCode::numeric, "incomplete_beta: continued fraction did not converge");
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) {
    fail(ErrorCode::invalid_arg, "incomplete_beta: shape parameters must be positive");
  }
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double front =
      std::exp(a * std::log(x) + b * std::log1p(-x) - log_beta(a, b));
  // The continued fraction converges fast below the distribution mean.
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_cf(a, b, x) / a;
  }
  return 1.0 - std::exp(b * std::log1p(-x) + a * std::log(x) - log_beta(b, a)) *
                   beta_cf(b, a, 1.0 - x) / b;
}

double f_survival(double f, double d1, double d2) {
  if (f <= 0.0) return 1.0;
  // P(F > f) = I_{d2/(d2 + d1 f)}(d2/2, d1/2)
  const double x = d2 / (d2 + d1 * f);
  return incomplete_beta(d2 / 2.0, d1 / 2.0, x);
}

}  // namespace haptex
