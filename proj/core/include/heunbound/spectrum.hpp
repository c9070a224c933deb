#pragma once

#include <vector>

#include "heunbound/heun_series.hpp"
#include "heunbound/params.hpp"

namespace heunbound {

/// Particle/antiparticle energy pair at one permitted frequency.
/// E_minus = -E_plus always; neither branch is privileged.
struct EnergyLevel {
    int n = 1;
    int l = 0;
    double omega = 0.0;
    double E_plus = 0.0;
    double E_minus = 0.0;
    ProblemCase problem_case = ProblemCase::coulomb_only;
};

/// E = +-sqrt(m^2 + 2 m omega (n + |l| + 1/2)).  Radicand is always positive.
EnergyLevel energy_case_a(double m, double omega, int n, int l);

/// E = +-sqrt(m^2 + 2 varpi (n + |l| + 1) - m omega - (m chi / varpi)^2).
///
/// At chi = 0 this reduces to energy_case_a bit-for-bit (delegated).  The
/// radicand is checked before the root; for validated inputs it is provably
/// positive (m^2 - (m chi/varpi)^2 >= 0 and 2 varpi (n+|l|+1) > m omega),
/// so NegativeRadicand is a defensive error path.
EnergyLevel energy_case_b(double m, double omega, double chi, int n, int l);

/// Per-root comparison of the direct energy formula against the
/// independently coded closed form (case A: the n = 1 closed-form energy at
/// the closed-form frequency; case B: the same radicand rearranged through
/// s = varpi at each cubic root).
struct IdentityReport {
    struct Entry {
        double omega;
        double e_direct;
        double e_closed;
        double rel_diff;
        bool pass;
    };
    std::vector<Entry> entries;
    bool all_pass = true;
};

/// n = 1 energy identity check; chi = 0 selects case A, chi > 0 case B.
IdentityReport algebraic_identity_check(double m, double a, double chi, int l);

struct GridSpec {
    double rho_max = 0.0; ///< 0: default 10 / sqrt(varpi)
    int points = 4001;    ///< odd, for composite Simpson
};

/// Radial samples normalized under the two-dimensional measure rho d rho.
struct RadialWavefunction {
    std::vector<double> grid;    ///< rho_i, ascending from 0
    std::vector<double> values;  ///< normalized f(rho_i)
    double norm_constant = 0.0;  ///< multiplier applied to the raw ansatz
    int nodes = 0;               ///< interior sign changes
};

/// Samples the polynomial-solution ansatz on a physical-rho grid
/// (zeta = physical_scale * rho, physical_scale defaulting to sqrt(varpi)),
/// normalizes by composite Simpson quadrature, and counts nodes.
/// Throws NotTruncated when the series is not a polynomial.
RadialWavefunction build_wavefunction(const SeriesSolution& s, double physical_scale = 0.0,
                                      const GridSpec& grid = {});

} // namespace heunbound
