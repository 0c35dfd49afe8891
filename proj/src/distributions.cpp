#include "cheapboot/distributions.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "cheapboot/errors.hpp"

namespace cheapboot::dist {

namespace {

constexpr double kRootTol = 1e-12;

void require_probability(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError("probability must lie strictly inside (0,1), got " + std::to_string(p));
    }
}

void require_df(int df, const char* name) {
    if (df < 1) {
        throw DomainError(std::string(name) + " must be a positive integer, got " + std::to_string(df));
    }
}

// Brent's method on a bracketing interval. f(lo) and f(hi) must have
// opposite signs; converges to |interval| <= kRootTol.
double brent(const std::function<double(double)>& f, double lo, double hi) {
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) throw InternalError("brent: root not bracketed");
    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < 200; ++iter) {
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol = 2.0 * std::numeric_limits<double>::epsilon() * std::fabs(b) + 0.5 * kRootTol;
        const double m = 0.5 * (c - b);
        if (std::fabs(m) <= tol || fb == 0.0) return b;
        if (std::fabs(e) < tol || std::fabs(fa) <= std::fabs(fb)) {
            d = m; e = m;  // bisection
        } else {
            double p, q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc, r = fb / fc;
                p = s * (2.0 * m * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::fabs(p);
            if (2.0 * p < std::min(3.0 * m * q - std::fabs(tol * q), std::fabs(e * q))) {
                e = d; d = p / q;  // accept interpolation
            } else {
                d = m; e = m;
            }
        }
        a = b; fa = fb;
        b += (std::fabs(d) > tol) ? d : (m > 0.0 ? tol : -tol);
        fb = f(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a; fc = fa;
            d = b - a; e = d;
        }
    }
    return b;
}

// Inverts a CDF that is 0 at `lo` in the limit, expanding the upper bracket
// by doubling from `hi0`.
double invert_on_positive_axis(const std::function<double(double)>& cdf, double p, double hi0) {
    double hi = hi0;
    while (cdf(hi) < p) {
        hi *= 2.0;
        if (hi > 1e300) throw InternalError("quantile bracket expansion failed");
    }
    return brent([&](double x) { return cdf(x) - p; }, 0.0, hi);
}

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) {
        throw DomainError("log_gamma requires x > 0, got " + std::to_string(x));
    }
    // Lanczos approximation, g = 7, 9 terms; |error| < 1e-13 on (0, inf).
    static const double coef[9] = {
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    };
    if (x < 0.5) {
        // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
        const double pi = 3.141592653589793238462643383279502884;
        return std::log(pi / std::sin(pi * x)) - log_gamma(1.0 - x);
    }
    const double z = x - 1.0;
    double sum = coef[0];
    for (int i = 1; i < 9; ++i) sum += coef[i] / (z + i);
    const double t = z + 7.5;
    return 0.5 * std::log(2.0 * 3.141592653589793238462643383279502884)
         + (z + 0.5) * std::log(t) - t + std::log(sum);
}

double gamma_p(double a, double x) {
    if (a <= 0.0 || x < 0.0) throw DomainError("gamma_p requires a > 0, x >= 0");
    if (x == 0.0) return 0.0;
    const double eps = std::numeric_limits<double>::epsilon();
    const double fpmin = std::numeric_limits<double>::min() / eps;
    const double lg = log_gamma(a);
    const double prefix = std::exp(-x + a * std::log(x) - lg);
    if (x < a + 1.0) {
        // series representation
        double ap = a;
        double del = 1.0 / a;
        double sum = del;
        for (int i = 0; i < 1000; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::fabs(del) < std::fabs(sum) * eps) break;
        }
        return sum * prefix;
    }
    // continued fraction for Q(a,x), modified Lentz
    double b = x + 1.0 - a;
    double c = 1.0 / fpmin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 1000; ++i) {
        const double an = -static_cast<double>(i) * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = b + an / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < eps) break;
    }
    return 1.0 - prefix * h;
}

namespace {

double betacf(double a, double b, double x) {
    const double eps = std::numeric_limits<double>::epsilon();
    const double fpmin = std::numeric_limits<double>::min() / eps;
    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < fpmin) d = fpmin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 1000; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < eps) break;
    }
    return h;
}

}  // namespace

double beta_inc(double a, double b, double x) {
    if (a <= 0.0 || b <= 0.0) throw DomainError("beta_inc requires a, b > 0");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double bt = std::exp(log_gamma(a + b) - log_gamma(a) - log_gamma(b)
                               + a * std::log(x) + b * std::log1p(-x));
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return bt * betacf(a, b, x) / a;
    }
    return 1.0 - bt * betacf(b, a, 1.0 - x) / b;
}

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x * 0.7071067811865475244008443621048490393);
}

double normal_quantile(double p) {
    require_probability(p);
    // Acklam's rational approximation, then two Halley refinements against
    // the erfc-based CDF; the result is accurate to full double precision.
    static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                -2.759285104469687e+02, 1.383577518672690e+02,
                                -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                -1.556989798598866e+02, 6.680131188771972e+01,
                                -1.328068155288572e+01};
    static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                -2.400758277161838e+00, -2.549732539343734e+00,
                                4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425, phigh = 1.0 - plow;
    double x;
    if (p < plow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= phigh) {
        const double q = p - 0.5, r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log1p(-p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double sqrt2pi = 2.506628274631000502415765284811045253;
    for (int i = 0; i < 2; ++i) {
        const double e = normal_cdf(x) - p;
        const double u = e * sqrt2pi * std::exp(0.5 * x * x);
        x -= u / (1.0 + 0.5 * x * u);
    }
    return x;
}

double t_cdf(double x, int df) {
    require_df(df, "df");
    if (x == 0.0) return 0.5;
    const double w = df / (df + x * x);
    const double tail = 0.5 * beta_inc(0.5 * df, 0.5, w);
    return x > 0.0 ? 1.0 - tail : tail;
}

double t_quantile(int df, double p) {
    require_df(df, "df");
    require_probability(p);
    if (p == 0.5) return 0.0;
    if (p < 0.5) return -t_quantile(df, 1.0 - p);
    const double hi0 = std::max(1.0, normal_quantile(p) * 2.0 + 1.0);
    double hi = hi0;
    while (t_cdf(hi, df) < p) {
        hi *= 2.0;
        if (hi > 1e300) throw InternalError("t_quantile bracket expansion failed");
    }
    return brent([&](double x) { return t_cdf(x, df) - p; }, 0.0, hi);
}

double chi2_cdf(double x, int df) {
    require_df(df, "df");
    if (x <= 0.0) return 0.0;
    return gamma_p(0.5 * df, 0.5 * x);
}

double chi2_quantile(int df, double p) {
    require_df(df, "df");
    require_probability(p);
    const double hi0 = df + 10.0 * std::sqrt(2.0 * df) + 10.0;
    return invert_on_positive_axis([&](double x) { return chi2_cdf(x, df); }, p, hi0);
}

double f_cdf(double x, int d1, int d2) {
    require_df(d1, "d1");
    require_df(d2, "d2");
    if (x <= 0.0) return 0.0;
    const double w = d1 * x / (d1 * x + d2);
    return beta_inc(0.5 * d1, 0.5 * d2, w);
}

double f_quantile(int d1, int d2, double p) {
    require_df(d1, "d1");
    require_df(d2, "d2");
    require_probability(p);
    return invert_on_positive_axis([&](double x) { return f_cdf(x, d1, d2); }, p, 100.0);
}

double hotelling_t2_quantile(int d, int B, double p) {
    require_df(d, "d");
    require_probability(p);
    if (B < d) {
        throw InsufficientResamples("Hotelling T^2 requires B >= d (B=" + std::to_string(B) +
                                    ", d=" + std::to_string(d) + ")");
    }
    const double scale = static_cast<double>(d) * B / (B - d + 1);
    return scale * f_quantile(d, B - d + 1, p);
}

double quantile(const QuantileRequest& req) {
    switch (req.family) {
        case Family::Normal:      return normal_quantile(req.p);
        case Family::StudentT:    return t_quantile(req.degrees1, req.p);
        case Family::ChiSquare:   return chi2_quantile(req.degrees1, req.p);
        case Family::F:           return f_quantile(req.degrees1, req.degrees2, req.p);
        case Family::HotellingT2: return hotelling_t2_quantile(req.degrees1, req.degrees2, req.p);
    }
    throw InternalError("unknown distribution family");
}

}  // namespace cheapboot::dist
