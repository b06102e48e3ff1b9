#pragma once

namespace haptex {

// Beta density f(x; a, b) = x^(a-1) (1-x)^(b-1) / B(a, b) on (0, 1).
// Evaluated in log space; returns 0 (or +inf at a degenerate edge) outside.
double beta_pdf(double x, double a, double b);

double log_beta(double a, double b);

// Regularized incomplete beta I_x(a, b) via the Lentz continued fraction.
double incomplete_beta(double a, double b, double x);

// Upper tail of the F distribution: P(F_{d1,d2} > f).
double f_survival(double f, double d1, double d2);

}  // namespace haptex
