#include "heunbound/params.hpp"

#include <cmath>

namespace heunbound {

void validate(const PhysicalConfig& cfg) {
    if (!std::isfinite(cfg.m) || !std::isfinite(cfg.omega) || !std::isfinite(cfg.coupling_a) ||
        !std::isfinite(cfg.chi))
        throw InvalidConfig("non-finite physical input");
    if (cfg.m <= 0.0)
        throw InvalidConfig("rest mass must be positive");
    if (cfg.omega < 0.0)
        throw InvalidConfig("oscillator frequency must be nonnegative");
    if (cfg.chi < 0.0)
        throw InvalidConfig("linear-potential strength must be nonnegative");
    if (cfg.n < 1)
        throw InvalidConfig("radial quantum number must be >= 1");
}

double effective_quadratic_strength(double m, double omega, double chi) {
    // hypot(x, 0) == |x| exactly, so the chi = 0 reduction is bit-exact.
    return std::hypot(m * omega, chi);
}

HeunParams derive_params(const PhysicalConfig& cfg, double energy_sq) {
    validate(cfg);
    if (!std::isfinite(energy_sq))
        throw InvalidConfig("non-finite squared energy");
    const double varpi = effective_quadratic_strength(cfg.m, cfg.omega, cfg.chi);
    if (varpi <= 0.0)
        throw DegenerateOperator("omega = 0 and chi = 0: no confining term");

    HeunParams p;
    p.abs_l = std::abs(cfg.l);
    p.varpi = varpi;
    p.alpha_or_theta = cfg.coupling_a / std::sqrt(varpi);
    p.delta = 2.0 * cfg.m * cfg.chi / (varpi * std::sqrt(varpi));
    p.mu_bar = (energy_sq - cfg.m * cfg.m + cfg.m * cfg.omega) / varpi;
    p.problem_case = cfg.chi == 0.0 ? ProblemCase::coulomb_only : ProblemCase::coulomb_linear;
    return p;
}

HeunParams truncation_params(double m, double a, double chi, double omega, int l, int n) {
    PhysicalConfig cfg{m, omega, a, chi, n, l};
    validate(cfg);
    const double varpi = effective_quadratic_strength(m, omega, chi);
    if (varpi <= 0.0)
        throw DegenerateOperator("omega = 0 and chi = 0: no confining term");

    HeunParams p;
    p.abs_l = std::abs(l);
    p.varpi = varpi;
    p.alpha_or_theta = a / std::sqrt(varpi);
    p.delta = 2.0 * m * chi / (varpi * std::sqrt(varpi));
    p.mu_bar = static_cast<double>(2 * n + 2 * p.abs_l + 2) - p.delta * p.delta / 4.0;
    p.problem_case = chi == 0.0 ? ProblemCase::coulomb_only : ProblemCase::coulomb_linear;
    return p;
}

double energy_sq_from_mu_bar(const HeunParams& p, double m, double omega) {
    return p.mu_bar * p.varpi + m * m - m * omega;
}

} // namespace heunbound
