#ifndef SPECNET_STATS_HPP
#define SPECNET_STATS_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace specnet::stats {

/// Sample Pearson correlation. Requires equal lengths, n >= 3, and nonzero
/// variance in both series (DomainError otherwise).
double pearson(std::span<const double> x, std::span<const double> y);

/// Two-sided standard normal quantile used by the Fisher interval:
/// q such that P(|Z| <= q) = level.
double normal_two_sided_quantile(double level);

/// Inverse standard normal CDF.
double normal_quantile(double p);

/// Fisher-z confidence interval for a correlation: z = atanh(r),
/// half-width = Q(level) / sqrt(n - 3), interval = tanh(z -+ half).
/// Requires |r| < 1 and n >= 4.
std::pair<double, double> fisher_ci(double r, std::size_t n, double level = 0.95);

struct CorrelationResult {
    double r = 0.0;
    std::size_t n = 0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    double level = 0.95;
};

CorrelationResult correlate(std::span<const double> x, std::span<const double> y,
                            double level = 0.95);

struct RegressionResult {
    int degree = 1;
    std::vector<double> beta;      // beta_0 .. beta_degree
    std::vector<double> p_values;  // two-sided t-test per coefficient
    double r_squared = 0.0;
    std::vector<double> residuals;
    std::size_t dof = 0;           // n - (degree + 1)
};

/// Ordinary least squares fit of y on [1, x, ..., x^degree], degree 1 or 2.
/// Coefficient standard errors come from the unbiased residual variance and
/// the inverse normal-equations matrix. Rank-deficient designs raise
/// DomainError.
RegressionResult ols_poly(std::span<const double> x, std::span<const double> y,
                          int degree);

/// Student-t CDF via the regularized incomplete beta function; absolute
/// error <= 1e-8.
double t_cdf(double t, std::size_t dof);

/// Regularized incomplete beta I_x(a, b) by continued fraction.
double regularized_incomplete_beta(double a, double b, double x);

struct KsResult {
    double statistic = 0.0;
    double p_value = 0.0;
    std::size_t n = 0;
};

/// One-sample Kolmogorov-Smirnov test of normality with mean and sd
/// estimated from the sample, p-value from the asymptotic Kolmogorov series
/// sum 2(-1)^(k-1) exp(-2 k^2 n D^2). Estimating the parameters makes the
/// test conservative (Lilliefors effect); callers should surface that caveat.
/// Requires n >= 5 and nonzero sample sd.
KsResult ks_normal(std::span<const double> sample);

/// Caveat string reports should attach to ks_normal results.
const char* ks_normal_caveat();

}  // namespace specnet::stats

#endif
