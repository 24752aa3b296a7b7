// stats.hpp
// Shared scalar statistics over spans: means, variances, Pearson correlation
// and simple OLS. Accumulation order is fixed (ascending index) so results are
// bit-identical run to run.

#pragma once

#include <cmath>
#include <limits>
#include <span>

namespace crashrisk {

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

inline double mean(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

// Sample variance, denominator n-1.
inline double sample_variance(std::span<const double> v) {
    const double m = mean(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return s / static_cast<double>(v.size() - 1);
}

inline double sample_stddev(std::span<const double> v) { return std::sqrt(sample_variance(v)); }

// Population variance, denominator n.
inline double population_variance(std::span<const double> v) {
    const double m = mean(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return s / static_cast<double>(v.size());
}

inline double population_stddev(std::span<const double> v) {
    return std::sqrt(population_variance(v));
}

// Centered cross moment sum_i (x-mx)(y-my), not normalized.
inline double centered_cross_sum(std::span<const double> x, std::span<const double> y) {
    const double mx = mean(x);
    const double my = mean(y);
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += (x[i] - mx) * (y[i] - my);
    return s;
}

inline double pearson_correlation(std::span<const double> x, std::span<const double> y) {
    const double mx = mean(x);
    const double my = mean(y);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return kNaN;
    return sxy / std::sqrt(sxx * syy);
}

struct OlsLine {
    double slope = kNaN;
    double intercept = kNaN;
};

// OLS of y on x with intercept. slope is NaN when x has zero variance.
inline OlsLine ols_fit(std::span<const double> x, std::span<const double> y) {
    const double mx = mean(x);
    const double my = mean(y);
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    if (sxx == 0.0) return {};
    OlsLine line;
    line.slope = sxy / sxx;
    line.intercept = my - line.slope * mx;
    return line;
}

inline double sigmoid(double z) {
    if (z >= 0.0) {
        return 1.0 / (1.0 + std::exp(-z));
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

inline double logit(double p) { return std::log(p / (1.0 - p)); }

}  // namespace crashrisk
