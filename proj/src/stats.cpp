#include "specnet/stats.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

#include "specnet/errors.hpp"

namespace specnet::stats {

namespace {

double mean_of(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) m += x;
    return m / static_cast<double>(v.size());
}

double normal_cdf(double z) {
    return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

double normal_pdf(double z) {
    static const double inv_sqrt_2pi = 0.3989422804014327;
    return inv_sqrt_2pi * std::exp(-0.5 * z * z);
}

}  // namespace

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw UsageError("pearson: series lengths differ");
    }
    if (x.size() < 3) {
        throw UsageError("pearson: need at least 3 observations");
    }
    const double mx = mean_of(x);
    const double my = mean_of(y);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        throw DomainError("pearson: zero variance in a series");
    }
    return sxy / std::sqrt(sxx * syy);
}

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError("normal quantile requires p in (0, 1)");
    }
    // Acklam's rational approximation, then one Halley refinement via erfc.
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double p_low = 0.02425;
    double x;
    if (p < p_low) {
        double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - p_low) {
        double q = p - 0.5;
        double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    double e = normal_cdf(x) - p;
    double u = e / normal_pdf(x);
    x = x - u / (1.0 + x * u / 2.0);
    return x;
}

double normal_two_sided_quantile(double level) {
    if (!(level > 0.0 && level < 1.0)) {
        throw UsageError("confidence level must be in (0, 1)");
    }
    return normal_quantile(0.5 + level / 2.0);
}

std::pair<double, double> fisher_ci(double r, std::size_t n, double level) {
    if (!(std::abs(r) < 1.0)) {
        throw DomainError("Fisher interval degenerates at |r| = 1");
    }
    if (n < 4) {
        throw UsageError("Fisher interval requires n >= 4");
    }
    const double z = std::atanh(r);
    const double half = normal_two_sided_quantile(level) / std::sqrt(static_cast<double>(n - 3));
    return {std::tanh(z - half), std::tanh(z + half)};
}

CorrelationResult correlate(std::span<const double> x, std::span<const double> y, double level) {
    CorrelationResult result;
    result.n = x.size();
    result.level = level;
    result.r = pearson(x, y);
    auto [lo, hi] = fisher_ci(result.r, result.n, level);
    result.ci_low = lo;
    result.ci_high = hi;
    return result;
}

RegressionResult ols_poly(std::span<const double> x, std::span<const double> y, int degree) {
    if (degree != 1 && degree != 2) {
        throw UsageError("ols_poly supports degree 1 or 2");
    }
    if (x.size() != y.size()) {
        throw UsageError("ols_poly: series lengths differ");
    }
    const std::size_t n = x.size();
    const std::size_t k = static_cast<std::size_t>(degree) + 1;
    if (n <= k) {
        throw UsageError("ols_poly: need more observations than coefficients");
    }

    Eigen::MatrixXd design(n, k);
    Eigen::VectorXd target(n);
    for (std::size_t i = 0; i < n; ++i) {
        design(i, 0) = 1.0;
        design(i, 1) = x[i];
        if (k == 3) design(i, 2) = x[i] * x[i];
        target(i) = y[i];
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    if (qr.rank() < static_cast<Eigen::Index>(k)) {
        throw DomainError("ols_poly: rank-deficient design matrix");
    }
    Eigen::VectorXd beta = qr.solve(target);
    Eigen::VectorXd residual = target - design * beta;

    const double rss = residual.squaredNorm();
    const double ymean = target.mean();
    const double tss = (target.array() - ymean).square().sum();

    RegressionResult result;
    result.degree = degree;
    result.dof = n - k;
    result.beta.assign(beta.data(), beta.data() + k);
    result.residuals.assign(residual.data(), residual.data() + n);
    result.r_squared = tss > 0.0 ? 1.0 - rss / tss : 1.0;

    // Coefficient tests from the unbiased residual variance and (X'X)^-1.
    const double s2 = rss / static_cast<double>(result.dof);
    Eigen::MatrixXd xtx_inv =
        (design.transpose() * design).ldlt().solve(Eigen::MatrixXd::Identity(k, k));
    result.p_values.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
        const double se = std::sqrt(s2 * xtx_inv(j, j));
        if (se == 0.0) {
            // exact fit: a nonzero coefficient is certain, a zero one is inert
            result.p_values[j] = beta(j) == 0.0 ? 1.0 : 0.0;
            continue;
        }
        const double t = beta(j) / se;
        result.p_values[j] = 2.0 * (1.0 - t_cdf(std::abs(t), result.dof));
    }
    return result;
}

double regularized_incomplete_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;

    // Continued fraction (modified Lentz); NR-style evaluation.
    auto betacf = [](double aa, double bb, double xx) {
        const int max_iter = 300;
        const double eps = 1e-15;
        const double fpmin = 1e-300;
        double qab = aa + bb;
        double qap = aa + 1.0;
        double qam = aa - 1.0;
        double c = 1.0;
        double d = 1.0 - qab * xx / qap;
        if (std::abs(d) < fpmin) d = fpmin;
        d = 1.0 / d;
        double h = d;
        for (int m = 1; m <= max_iter; ++m) {
            int m2 = 2 * m;
            double num = m * (bb - m) * xx / ((qam + m2) * (aa + m2));
            d = 1.0 + num * d;
            if (std::abs(d) < fpmin) d = fpmin;
            c = 1.0 + num / c;
            if (std::abs(c) < fpmin) c = fpmin;
            d = 1.0 / d;
            h *= d * c;
            num = -(aa + m) * (qab + m) * xx / ((aa + m2) * (qap + m2));
            d = 1.0 + num * d;
            if (std::abs(d) < fpmin) d = fpmin;
            c = 1.0 + num / c;
            if (std::abs(c) < fpmin) c = fpmin;
            d = 1.0 / d;
            double delta = d * c;
            h *= delta;
            if (std::abs(delta - 1.0) < eps) break;
        }
        return h;
    };

    const double ln_bt = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                         a * std::log(x) + b * std::log(1.0 - x);
    const double bt = std::exp(ln_bt);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return bt * betacf(a, b, x) / a;
    }
    return 1.0 - bt * betacf(b, a, 1.0 - x) / b;
}

double t_cdf(double t, std::size_t dof) {
    if (dof < 1) {
        throw UsageError("t_cdf requires dof >= 1");
    }
    const double v = static_cast<double>(dof);
    const double x = v / (v + t * t);
    const double tail = 0.5 * regularized_incomplete_beta(v / 2.0, 0.5, x);
    return t >= 0.0 ? 1.0 - tail : tail;
}

KsResult ks_normal(std::span<const double> sample) {
    if (sample.size() < 5) {
        throw UsageError("ks_normal requires at least 5 observations");
    }
    const std::size_t n = sample.size();
    std::vector<double> sorted(sample.begin(), sample.end());
    std::sort(sorted.begin(), sorted.end());

    const double m = mean_of(sorted);
    double ss = 0.0;
    for (double v : sorted) ss += (v - m) * (v - m);
    const double sd = std::sqrt(ss / static_cast<double>(n - 1));
    if (sd == 0.0) {
        throw DomainError("ks_normal: sample has zero variance");
    }

    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double f = normal_cdf((sorted[i] - m) / sd);
        const double hi = static_cast<double>(i + 1) / static_cast<double>(n) - f;
        const double lo = f - static_cast<double>(i) / static_cast<double>(n);
        d = std::max({d, hi, lo});
    }

    // Asymptotic Kolmogorov series p = 2 sum (-1)^(k-1) exp(-2 k^2 n D^2).
    const double lambda = std::sqrt(static_cast<double>(n)) * d;
    double p = 1.0;
    if (lambda > 1e-3) {
        double sum = 0.0;
        double sign = 1.0;
        for (int k = 1; k <= 1000; ++k) {
            const double term = std::exp(-2.0 * k * k * lambda * lambda);
            sum += sign * term;
            sign = -sign;
            if (term < 1e-12) break;
        }
        p = std::clamp(2.0 * sum, 0.0, 1.0);
    }
    return {d, p, n};
}

const char* ks_normal_caveat() {
    return "normal parameters estimated from the sample; the asymptotic "
           "Kolmogorov p-value is conservative (Lilliefors effect)";
}

}  // namespace specnet::stats
