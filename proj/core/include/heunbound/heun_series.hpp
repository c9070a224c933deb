#pragma once

#include <optional>
#include <vector>

#include "heunbound/params.hpp"

namespace heunbound {

/// Orientation of the 1/zeta coupling inside the series recurrence.
///
/// The recurrence kernel is
///   b_1     = [delta (2|l|+1) - 2 theta_s] / [2 (2|l|+1)]
///   b_{k+2} = { [delta (2k+2|l|+3) - 2 theta_s] b_{k+1}
///               - (2 mu_bar + delta^2/2 - 4|l| - 4 - 4k) b_k }
///             / [ 2 (k+2)(k+2+2|l|) ]
/// where theta_s is a signed image of alpha_or_theta.  The two orientations
/// produce mirror-image polynomials; the truncation condition at n = 1 is
/// even in theta_s, so the permitted frequencies agree (asserted by the
/// test suite).  `canonical` keeps the degree-n polynomial consistent with
/// the case-A radial operator at coupling +a; case-B results then refer to
/// the operator with the 1/rho coupling reflected, which the oracle module
/// accounts for when cross-validating.
enum class SeriesConvention { canonical, flipped };

/// The theta actually fed into the recurrence for this problem case.
/// canonical: -alpha (case A), +theta (case B); flipped negates both.
double series_theta(const HeunParams& p, SeriesConvention c = SeriesConvention::canonical);

/// Frobenius solution around the origin, b_0 = 1.
///
/// When the truncation pair holds (mu_bar + delta^2/4 - 2|l| - 2 = 2n and
/// b_{n+1} = 0, both within the 1e-12 coefficient-scaled default), the
/// series is a degree-n polynomial: `truncated_at` is set, `tail_max`
/// records the largest raw |b_k| beyond n (pure round-off), and the stored
/// tail coefficients are cleared so evaluation is exact polynomial
/// arithmetic.
struct SeriesSolution {
    std::vector<double> coeffs; ///< b_0 .. b_K
    HeunParams params;
    SeriesConvention convention = SeriesConvention::canonical;
    std::optional<int> truncated_at;
    double tail_max = 0.0;
};

/// Runs the recurrence to the requested order (K >= 2 coefficients past b_0).
SeriesSolution frobenius_coeffs(const HeunParams& p, int order,
                                SeriesConvention c = SeriesConvention::canonical);

/// F(r) = sum b_k r^k.
///
/// Truncated solutions evaluate exactly (Horner).  Otherwise the partial
/// sums must pass a geometric tail test near order K: consecutive
/// parity-paired increments must decay with ratio < 1 and the extrapolated
/// tail must stay below tail_tol * max(1, |F|), else ConvergenceFailure.
double eval_series(const SeriesSolution& s, double r, double tail_tol = 1e-12);

/// Full radial ansatz f(r) = r^{|l|} e^{-r^2/2} e^{-delta r/2} F(r).
double eval_radial(const SeriesSolution& s, double r, double tail_tol = 1e-12);

/// Signed, coefficient-scaled truncation indicator b_{n+1} / max(1, max_{k<=n} |b_k|).
/// Root scans bisect on its sign; |indicator| is the residual reported with roots.
double truncation_indicator(const HeunParams& p, int n,
                            SeriesConvention c = SeriesConvention::canonical);

/// |truncation_indicator|.
double truncation_residual(const HeunParams& p, int n,
                           SeriesConvention c = SeriesConvention::canonical);

/// True iff the degree-n truncation pair holds within tol and the eight
/// raw coefficients after b_{n+1} stay below the same scaled tolerance.
bool check_truncation(const HeunParams& p, int n, double tol = 1e-12,
                      SeriesConvention c = SeriesConvention::canonical);

/// Scaled residual of the series' own differential equation
///   F'' + [(2|l|+1)/r - delta - 2r] F'
///      + [mu_bar + delta^2/4 - 2|l| - 2 - (delta(2|l|+1) - 2 theta_s)/(2r)] F = 0
/// at r > 0, with F, F', F'' summed term-wise from the stored coefficients.
double ode_residual(const SeriesSolution& s, double r);

} // namespace heunbound
