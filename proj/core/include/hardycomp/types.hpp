#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace hardycomp {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Point on the unit circle at angle theta.
inline Complex unit_at(double theta) {
  return {std::cos(theta), std::sin(theta)};
}

/// e^{ib} - e^{ia}, stable for small b - a.
inline Complex circle_diff(double b, double a) {
  const double h = 0.5 * (b - a);
  const double s = 2.0 * std::sin(h);
  const double m = a + h;
  return {-s * std::sin(m), s * std::cos(m)};
}

/// Wrap an angle into (-pi, pi].
inline double wrap_angle(double t) {
  t = std::fmod(t, kTwoPi);
  if (t > kPi) t -= kTwoPi;
  if (t <= -kPi) t += kTwoPi;
  return t;
}

/// Wrap an angle into [0, 2*pi).
inline double wrap_positive(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  return t;
}

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Expression-text rejection, with the byte offset of the offending token.
struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// Violated precondition (parameter range, unmet hypothesis).
struct DomainError : Error {
  using Error::Error;
};

/// NaN/overflow in samples, iteration failures, scale floors.
struct NumericError : Error {
  using Error::Error;
};

}  // namespace hardycomp
