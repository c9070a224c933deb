#pragma once

#include <stdexcept>
#include <string>

namespace heunbound {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An input violates a domain precondition (non-finite, wrong sign, n < 1, ...).
class InvalidConfig : public Error {
  public:
    using Error::Error;
};

/// omega = 0 and chi = 0: no confining term, the dimensionless reduction is undefined.
class DegenerateOperator : public Error {
  public:
    using Error::Error;
};

/// Coupling a = 0 where a closed-form frequency would degenerate to omega = 0.
class ZeroCoupling : public Error {
  public:
    using Error::Error;
};

/// The quantization condition has no real root in the physical region.
class NoPhysicalRoot : public Error {
  public:
    NoPhysicalRoot(const std::string& msg, double max_real_root, double chi)
        : Error(msg), max_real_root_(max_real_root), chi_(chi) {}
    double max_real_root() const { return max_real_root_; }
    double chi() const { return chi_; }

  private:
    double max_real_root_;
    double chi_;
};

/// A root scan found no sign change; the bracketing grid may be too narrow.
class BracketExhausted : public Error {
  public:
    using Error::Error;
};

/// A series tail bound or a two-grid eigenvalue estimate failed to meet tolerance.
class ConvergenceFailure : public Error {
  public:
    using Error::Error;
};

/// The energy radicand came out negative (reported, never returned as NaN).
class NegativeRadicand : public Error {
  public:
    NegativeRadicand(const std::string& msg, double radicand)
        : Error(msg), radicand_(radicand) {}
    double radicand() const { return radicand_; }

  private:
    double radicand_;
};

/// A wavefunction was requested from a series that is not a polynomial.
class NotTruncated : public Error {
  public:
    using Error::Error;
};

/// Discretization domain is unusable (empty interval, too few points, ...).
class InvalidDomain : public Error {
  public:
    using Error::Error;
};

} // namespace heunbound
