#pragma once

#include "heunbound/errors.hpp"

namespace heunbound {

/// Which effective radial problem is solved: Coulomb-type coupling only
/// ("case A") or Coulomb-type plus linear confinement ("case B").
enum class ProblemCase { coulomb_only, coulomb_linear };

inline char case_label(ProblemCase c) { return c == ProblemCase::coulomb_only ? 'A' : 'B'; }

/// Raw physical inputs in natural units.
///
/// The background constants g, lambda, B0, kappa enter every implemented
/// equation only through the product g*lambda*B0*kappa, stored here as the
/// single composite coupling `coupling_a` (any sign; a < 0 is the attractive
/// orientation of the 1/rho term).
struct PhysicalConfig {
    double m = 1.0;          ///< rest mass, > 0
    double omega = 0.0;      ///< oscillator angular frequency, >= 0
    double coupling_a = 0.0; ///< composite 1/rho coupling strength
    double chi = 0.0;        ///< linear-potential strength, >= 0
    int n = 1;               ///< radial quantum number, >= 1
    int l = 0;               ///< angular momentum quantum number, any sign
};

/// Throws InvalidConfig unless all fields are finite and in range.
void validate(const PhysicalConfig& cfg);

/// Dimensionless parameter set of one biconfluent Heun problem.
///
/// varpi = sqrt((m omega)^2 + chi^2) is the effective quadratic strength;
/// case A is the chi = 0 specialization (varpi = m omega, delta = 0,
/// alpha_or_theta = a / sqrt(m omega)).
struct HeunParams {
    int abs_l = 0;               ///< |l|
    double alpha_or_theta = 0.0; ///< a / sqrt(varpi)  (alpha in case A, theta in case B)
    double delta = 0.0;          ///< 2 m chi / varpi^{3/2}
    double mu_bar = 0.0;         ///< (E^2 - m^2 + m omega) / varpi
    double varpi = 0.0;          ///< sqrt((m omega)^2 + chi^2)
    ProblemCase problem_case = ProblemCase::coulomb_only;
};

/// sqrt((m omega)^2 + chi^2); exactly m*omega when chi == 0.
double effective_quadratic_strength(double m, double omega, double chi);

/// Derives the Heun-problem parameters at a given squared energy.
///
/// Rejects omega = chi = 0 (DegenerateOperator: the Gaussian asymptotic
/// factor needs varpi > 0).  At chi = 0 the returned values satisfy
/// delta = 0 and theta = alpha exactly (single code path).
HeunParams derive_params(const PhysicalConfig& cfg, double energy_sq);

/// Parameters with mu_bar pinned by the degree-n truncation condition
/// mu_bar = 2n + 2|l| + 2 - delta^2/4.  This is the exact-in-floating-point
/// construction used by the quantization routines; the corresponding squared
/// energy is energy_sq_from_mu_bar().
HeunParams truncation_params(double m, double a, double chi, double omega, int l, int n);

/// Inverts the mu_bar definition: E^2 = mu_bar * varpi + m^2 - m omega.
double energy_sq_from_mu_bar(const HeunParams& p, double m, double omega);

} // namespace heunbound
