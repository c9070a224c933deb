#pragma once

#include <vector>

#include "heunbound/params.hpp"
#include "heunbound/quantize.hpp"

namespace heunbound {

/// Effective radial operator
///   -f'' - f'/rho + [ l^2/rho^2 + varpi2 rho^2 + lin_coeff rho + coul_coeff/rho ] f = Lambda f
/// with Lambda = E^2 - m^2 + m omega, truncated to [rho_min, rho_max].
struct RadialOperatorSpec {
    int abs_l = 0;
    double varpi2 = 1.0;     ///< quadratic strength, > 0
    double lin_coeff = 0.0;  ///< 2 m chi
    double coul_coeff = 0.0; ///< 1/rho coupling strength
    double rho_min = 0.0;    ///< >= 0; the flux through rho = 0 vanishes naturally
    double rho_max = 12.0;
    int n_points = 4000;     ///< >= 100 cells
};

/// Defaults scaled to the oscillator length: rho_max = 12/sqrt(varpi) *
/// max(1, sqrt(n+|l|+1)), rho_min = 0, 4000 cells.
RadialOperatorSpec default_operator_spec(double varpi, int abs_l, int n,
                                         double lin_coeff, double coul_coeff);

/// Symmetric tridiagonal image of the operator.
///
/// Conservative cell-centered discretization in f on rho_j = rho_min +
/// (j+1/2)h, symmetrized by g = sqrt(rho) f.  Interior diagonal entries are
/// exactly 2/h^2 + V_eff(rho_j); Dirichlet walls at rho_min > 0 and rho_max
/// enter through the boundary rows.  (A pointwise substitution u = sqrt(rho) f
/// puts the critical -1/(4 rho^2) term into the potential and loses O(h^2)
/// convergence at l = 0; the flux form keeps it for every l.)
struct TridiagonalOperator {
    std::vector<double> diag;
    std::vector<double> offdiag; ///< size diag.size() - 1
    std::vector<double> centers; ///< cell centers rho_j
    double h = 0.0;
};

TridiagonalOperator build_operator(const RadialOperatorSpec& spec);

/// Lowest eigenvalues with eigenvector node counts and a two-grid
/// Richardson error estimate (the spec grid and its doubling).
struct OracleSpectrum {
    std::vector<double> eigenvalues;           ///< ascending
    std::vector<int> node_counts;              ///< per eigenvector
    std::vector<double> convergence_estimate;  ///< |Lambda_N - Lambda_2N| / 3
    int n_points = 0;
    double rho_min = 0.0;
    double rho_max = 0.0;
};

/// Sturm-sequence bisection for the k smallest eigenvalues plus inverse
/// iteration for the eigenvectors.  With conv_tol > 0, throws
/// ConvergenceFailure if any Richardson estimate exceeds
/// conv_tol * max(1, |Lambda|).
OracleSpectrum eigen_lowest(const RadialOperatorSpec& spec, int k, double conv_tol = 0.0);

struct CrossValidation {
    struct Entry {
        double omega;
        double lambda_analytic;
        double lambda_oracle;
        int node_index;
        double rel_err;
        bool energy_consistent; ///< E^2 from spectrum == Lambda + m^2 - m omega
        bool pass;
    };
    std::vector<Entry> entries;
    bool all_pass = true;
};

struct CrossValidateOptions {
    int grid_n = 4000;
    double rho_max_scale = 1.0;
};

/// For each permitted frequency: Lambda_analytic = varpi * mu_bar from the
/// truncation condition, compared against the oracle eigenvalue whose node
/// count matches the polynomial's positive-root count.
///
/// The operator is built with the 1/rho strength the polynomial actually
/// solves: +a in case A, -a in case B (the case-B series convention mirrors
/// the coupling; see SeriesConvention).
CrossValidation cross_validate(const PhysicalConfig& cfg, const QuantizationResult& q,
                               double tol, const CrossValidateOptions& opts = {});

} // namespace heunbound
