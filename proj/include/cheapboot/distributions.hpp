#pragma once

#include <string>

namespace cheapboot::dist {

// Quantiles are computed by inverting the regularized incomplete beta/gamma
// functions with bracketed root-finding (root tolerance 1e-12), so no external
// tables are involved. Probabilities at exactly 0 or 1 are rejected; callers
// that want the open-interval endpoints must clamp first.

double log_gamma(double x);

double normal_cdf(double x);
double normal_quantile(double p);

double t_cdf(double x, int df);
double t_quantile(int df, double p);

double chi2_cdf(double x, int df);
double chi2_quantile(int df, double p);

double f_cdf(double x, int d1, int d2);
double f_quantile(int d1, int d2, double p);

// (1-alpha)-quantile of Hotelling's T^2 with dimension d and B resamples,
// via the F reduction T^2 = d*B/(B-d+1) * F(d, B-d+1). Requires B >= d.
double hotelling_t2_quantile(int d, int B, double p);

// Regularized incomplete functions, exposed for reuse and testing.
double gamma_p(double a, double x);                    // P(a, x)
double beta_inc(double a, double b, double x);         // I_x(a, b)

enum class Family { Normal, StudentT, ChiSquare, F, HotellingT2 };

struct QuantileRequest {
    Family family = Family::Normal;
    int degrees1 = 1;   // df, or d for Hotelling
    int degrees2 = 1;   // second df (F), or B (Hotelling)
    double p = 0.5;
};

double quantile(const QuantileRequest& req);

}  // namespace cheapboot::dist
