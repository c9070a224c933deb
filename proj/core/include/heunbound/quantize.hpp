#pragma once

#include <string>
#include <vector>

#include "heunbound/heun_series.hpp"
#include "heunbound/params.hpp"

namespace heunbound {

enum class RootProvenance { closed_form, poly_root, cubic_root, scan_root };

const char* provenance_name(RootProvenance p);

struct FrequencyRoot {
    double omega;              ///< permitted frequency, > 0
    RootProvenance provenance;
    double residual;           ///< coefficient-scaled |b_{n+1}| at the root
};

/// All permitted frequencies for one (n, l) cell, sorted ascending.
/// An empty list is legal (no physical frequency).
struct QuantizationResult {
    int n = 1;
    int l = 0;
    ProblemCase problem_case = ProblemCase::coulomb_only;
    std::vector<FrequencyRoot> roots;
};

/// Real roots of the monic cubic s^3 + c2 s^2 + c1 s + c0, ascending.
/// Discriminant classification seeds the roots in closed form; each is then
/// polished by Newton iteration on the monic cubic.
std::vector<double> cubic_real_roots(double c2, double c1, double c0);

/// Case A, n = 1 closed form: omega = a^2 / (2 m (2|l|+1)).
/// The would-be n = 0 condition b_1 = 0 has no solution of the required
/// sign for a != 0, which is why n starts at 1.
double freq_case_a_n1(double m, double a, int l);

/// Case A, general n.  Fixes mu = 2n + 2|l| + 2, generates b_{n+1} as a
/// degree-(n+1) polynomial in alpha by running the recurrence with
/// polynomial coefficients, takes companion-matrix seeds for its real roots,
/// polishes each by Newton steps, keeps sign(alpha) = sign(a), and maps
/// omega = a^2 / (m alpha^2).  Every returned root passes check_truncation.
QuantizationResult freq_case_a_general(double m, double a, int l, int n,
                                       SeriesConvention c = SeriesConvention::canonical);

/// Case B, n = 1 via the cubic in s = sqrt((m omega)^2 + chi^2):
///   s^3 - A s^2 + B s - C = 0,
///   A = a^2 / (2(2|l|+1)),  B = 2 m chi a (|l|+1)/(2|l|+1),  C = m^2 chi^2 (2|l|+3)/2.
/// Real roots with s > chi map to omega = sqrt(s^2 - chi^2)/m; each kept
/// root is verified by check_truncation.  Throws NoPhysicalRoot (carrying
/// the largest real root) when no root exceeds chi.
QuantizationResult freq_case_b_n1(double m, double a, double chi, int l);

struct ScanOptions {
    double omega_min = 0.0; ///< 0: default 1e-4 * chi / m
    double omega_max = 0.0; ///< 0: default 1e4 * max(a^2/m, chi/m)
    int grid = 2000;        ///< log-spaced scan points
    double rel_tol = 1e-12; ///< bisection width target, relative
};

/// Case B, general n: imposes mu_bar = 2n + 2|l| + 2 - delta^2/4 and scans
/// the truncation indicator over a log-spaced omega grid, bisecting each
/// sign change.  Throws BracketExhausted when the scan shows no sign change
/// (distinct from NoPhysicalRoot so callers can widen the range).
QuantizationResult freq_case_b_general(double m, double a, double chi, int l, int n,
                                       const ScanOptions& opts = {},
                                       SeriesConvention c = SeriesConvention::canonical);

} // namespace heunbound
