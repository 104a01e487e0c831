/// @file errors.hpp
/// @brief Error types shared across the library.

#pragma once

#include <stdexcept>
#include <string>

namespace eprgeo {

/// Open interval in the pair coordinate u = x1 + x2.
struct Strip {
  double lo = 0.0;
  double hi = 0.0;
  double width() const { return hi - lo; }
};

/// Evaluation requested outside the positivity domain of the amplitude.
/// Carries the offending coordinate and the nearest valid strip.
class OutsideDomainError : public std::domain_error {
 public:
  OutsideDomainError(double u, Strip nearest, const std::string& what)
      : std::domain_error(what), u_(u), nearest_(nearest) {}
  double u() const { return u_; }
  const Strip& nearest_strip() const { return nearest_; }

 private:
  double u_;
  Strip nearest_;
};

/// Evaluation at (or within tolerance of) a metric pole.
/// approach_sign is the sign of the vanishing denominator factor, telling
/// from which side the divergence is approached.
class PoleError : public std::domain_error {
 public:
  PoleError(double u, int approach_sign, const std::string& what)
      : std::domain_error(what), u_(u), approach_sign_(approach_sign) {}
  double u() const { return u_; }
  int approach_sign() const { return approach_sign_; }

 private:
  double u_;
  int approach_sign_;
};

/// The squared momentum scale G^2 is negative at the point, so no real
/// momentum field exists there. Points are flagged, never clamped.
class UnphysicalRegionError : public std::domain_error {
 public:
  UnphysicalRegionError(double u, double g_squared, const std::string& what)
      : std::domain_error(what), u_(u), g_squared_(g_squared) {}
  double u() const { return u_; }
  double g_squared() const { return g_squared_; }

 private:
  double u_;
  double g_squared_;
};

/// A quadrature or scan sampled a non-finite value; carries the abscissa.
class NonFiniteSampleError : public std::runtime_error {
 public:
  NonFiniteSampleError(double abscissa, const std::string& what)
      : std::runtime_error(what), abscissa_(abscissa) {}
  double abscissa() const { return abscissa_; }

 private:
  double abscissa_;
};

/// Iterative refinement hit its iteration cap; carries the best bracket.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(double lo, double hi, const std::string& what)
      : std::runtime_error(what), lo_(lo), hi_(hi) {}
  double best_lo() const { return lo_; }
  double best_hi() const { return hi_; }

 private:
  double lo_;
  double hi_;
};

}  // namespace eprgeo
