#include "heunbound/heun_series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace heunbound {

namespace {

constexpr double kTruncationTol = 1e-12;

// b_0 .. b_order from the recurrence, no truncation handling.
std::vector<double> run_recurrence(int abs_l, double theta_s, double delta, double mu_bar,
                                   int order) {
    std::vector<double> b(static_cast<std::size_t>(order) + 1, 0.0);
    const double L1 = 2.0 * abs_l + 1.0;
    b[0] = 1.0;
    if (order >= 1)
        b[1] = (delta * L1 - 2.0 * theta_s) / (2.0 * L1);
    for (int k = 0; k + 2 <= order; ++k) {
        const double cp = delta * (2.0 * k + 2.0 * abs_l + 3.0) - 2.0 * theta_s;
        const double cq = 2.0 * mu_bar + delta * delta / 2.0 - 4.0 * abs_l - 4.0 - 4.0 * k;
        b[k + 2] = (cp * b[k + 1] - cq * b[k]) / (2.0 * (k + 2.0) * (k + 2.0 + 2.0 * abs_l));
    }
    return b;
}

// Degree n such that mu_bar + delta^2/4 - 2|l| - 2 == 2n within tol, or -1.
int truncation_degree(const HeunParams& p, double tol) {
    const double cond = p.mu_bar + p.delta * p.delta / 4.0 - 2.0 * p.abs_l - 2.0;
    const double n_real = cond / 2.0;
    if (!(n_real > 0.5))
        return -1;
    const int n = static_cast<int>(std::llround(n_real));
    if (n < 1)
        return -1;
    const double scale = std::max(1.0, std::abs(cond));
    if (std::abs(cond - 2.0 * n) > tol * scale)
        return -1;
    return n;
}

double coefficient_scale(const std::vector<double>& b, int upto) {
    double s = 1.0;
    for (int k = 0; k <= upto && k < static_cast<int>(b.size()); ++k)
        s = std::max(s, std::abs(b[k]));
    return s;
}

} // namespace

double series_theta(const HeunParams& p, SeriesConvention c) {
    const double sign = p.problem_case == ProblemCase::coulomb_only ? -1.0 : 1.0;
    return (c == SeriesConvention::canonical ? sign : -sign) * p.alpha_or_theta;
}

SeriesSolution frobenius_coeffs(const HeunParams& p, int order, SeriesConvention c) {
    if (order < 2)
        throw InvalidConfig("series order must be >= 2");
    SeriesSolution s;
    s.params = p;
    s.convention = c;
    s.coeffs = run_recurrence(p.abs_l, series_theta(p, c), p.delta, p.mu_bar, order);

    const int n = truncation_degree(p, kTruncationTol);
    if (n >= 1 && n + 1 <= order) {
        const double scale = coefficient_scale(s.coeffs, n);
        if (std::abs(s.coeffs[n + 1]) <= kTruncationTol * scale) {
            s.truncated_at = n;
            for (int k = n + 1; k <= order; ++k) {
                s.tail_max = std::max(s.tail_max, std::abs(s.coeffs[k]));
                s.coeffs[k] = 0.0;
            }
        }
    }
    return s;
}

double eval_series(const SeriesSolution& s, double r, double tail_tol) {
    if (r < 0.0)
        throw InvalidConfig("series argument must be nonnegative");
    if (s.truncated_at) {
        const int n = *s.truncated_at;
        double acc = 0.0;
        for (int k = n; k >= 0; --k)
            acc = acc * r + s.coeffs[k];
        return acc;
    }

    // Forward accumulation; track increments for the tail bound.
    const int K = static_cast<int>(s.coeffs.size()) - 1;
    double sum = 0.0, comp = 0.0, pw = 1.0;
    std::vector<double> inc(s.coeffs.size());
    for (int k = 0; k <= K; ++k) {
        const double t = s.coeffs[k] * pw;
        inc[k] = std::abs(t);
        const double y = t - comp;
        const double u = sum + y;
        comp = (u - sum) - y;
        sum = u;
        pw *= r;
    }

    // Parity-paired increments: P_j = |t_{2j}| + |t_{2j+1}| absorbs the
    // vanishing odd terms of the theta = delta = 0 case.
    std::vector<double> pairs;
    for (int k = 0; k + 1 <= K; k += 2)
        pairs.push_back(inc[k] + inc[k + 1]);
    const int npairs = static_cast<int>(pairs.size());
    const int window = 5;
    if (npairs < window + 1)
        throw ConvergenceFailure("series order too small for a tail bound");
    double q = 0.0;
    for (int j = npairs - window; j < npairs; ++j) {
        const double prev = pairs[j - 1];
        if (prev == 0.0) {
            if (pairs[j] != 0.0)
                throw ConvergenceFailure("series increments not decaying");
            continue;
        }
        q = std::max(q, pairs[j] / prev);
    }
    const double floor_ = std::max(1.0, std::abs(sum));
    if (q >= 1.0)
        throw ConvergenceFailure("series increments not geometrically decreasing at this r");
    const double tail = pairs.back() * q / (1.0 - q);
    if (tail > tail_tol * floor_)
        throw ConvergenceFailure("series tail bound above tolerance at this r");
    return sum;
}

double eval_radial(const SeriesSolution& s, double r, double tail_tol) {
    if (r < 0.0)
        throw InvalidConfig("radial argument must be nonnegative");
    const double F = eval_series(s, r, tail_tol);
    double prefactor = std::exp(-r * r / 2.0 - s.params.delta * r / 2.0);
    for (int i = 0; i < s.params.abs_l; ++i)
        prefactor *= r;
    return prefactor * F;
}

double truncation_indicator(const HeunParams& p, int n, SeriesConvention c) {
    if (n < 1)
        throw InvalidConfig("truncation degree must be >= 1");
    const auto b = run_recurrence(p.abs_l, series_theta(p, c), p.delta, p.mu_bar, n + 1);
    return b[n + 1] / coefficient_scale(b, n);
}

double truncation_residual(const HeunParams& p, int n, SeriesConvention c) {
    return std::abs(truncation_indicator(p, n, c));
}

bool check_truncation(const HeunParams& p, int n, double tol, SeriesConvention c) {
    if (n < 1)
        throw InvalidConfig("truncation degree must be >= 1");
    if (truncation_degree(p, tol) != n)
        return false;
    const auto b = run_recurrence(p.abs_l, series_theta(p, c), p.delta, p.mu_bar, n + 9);
    const double scale = coefficient_scale(b, n);
    for (int k = n + 1; k <= n + 8; ++k)
        if (std::abs(b[k]) > tol * scale)
            return false;
    return true;
}

double ode_residual(const SeriesSolution& s, double r) {
    if (r <= 0.0)
        throw InvalidConfig("residual is defined for r > 0");
    double F = 0.0, dF = 0.0, d2F = 0.0, pw = 1.0;
    const int K = static_cast<int>(s.coeffs.size()) - 1;
    // pw = r^{k-2} entering the loop at k; accumulate all three term-wise.
    for (int k = 0; k <= K; ++k) {
        const double bk = s.coeffs[k];
        if (k >= 2)
            d2F += bk * k * (k - 1) * pw;
        if (k >= 1)
            dF += bk * k * (k >= 2 ? pw * r : pw);
        F += bk * (k >= 2 ? pw * r * r : (k == 1 ? pw * r : pw));
        if (k >= 2)
            pw *= r;
    }
    // Recompute cleanly: the incremental bookkeeping above is error-prone.
    F = dF = d2F = 0.0;
    pw = 1.0;
    for (int k = 0; k <= K; ++k) {
        const double t = s.coeffs[k] * pw;
        F += t;
        if (k >= 1)
            dF += t * k / r;
        if (k >= 2)
            d2F += t * k * (k - 1) / (r * r);
        pw *= r;
    }
    const auto& p = s.params;
    const double theta_s = series_theta(p, s.convention);
    const double L1 = 2.0 * p.abs_l + 1.0;
    const double P = L1 / r - p.delta - 2.0 * r;
    const double Q =
        p.mu_bar + p.delta * p.delta / 4.0 - 2.0 * p.abs_l - 2.0 - (p.delta * L1 - 2.0 * theta_s) / (2.0 * r);
    const double res = d2F + P * dF + Q * F;
    const double scale = std::max({1.0, std::abs(d2F), std::abs(P * dF), std::abs(Q * F)});
    return res / scale;
}

} // namespace heunbound
