#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "img/kneading.hpp"

namespace img {

/// A rational angle p/q in R/Z, reduced, with 0 <= p < q.
class Angle {
 public:
  Angle() = default;
  /// Reduces and takes p mod q. Throws DomainError for q <= 0.
  Angle(std::int64_t p, std::int64_t q);
  /// "p/q", or "0".
  static Angle parse(std::string_view text);

  std::int64_t num() const { return p_; }
  std::int64_t den() const { return q_; }
  Angle doubled() const { return Angle(2 * p_, q_); }
  std::string str() const;

  friend bool operator==(const Angle&, const Angle&) = default;
  /// Exact comparison of the values.
  friend bool operator<(const Angle& a, const Angle& b);

 private:
  std::int64_t p_ = 0, q_ = 1;
};

struct DoublingOrbit {
  /// θ, 2θ, ... up to and excluding the first repeat.
  std::vector<Angle> orbit;
  std::size_t preperiod = 0;
  std::size_t period = 1;
};

DoublingOrbit doubling_orbit(const Angle& theta);

/// '0', '1' or '*'.
using ItinerarySymbol = char;

/// Symbol of α relative to the diameter {θ/2, (1+θ)/2}: '*' on it, '1' on
/// the open arc containing θ, '0' on the other. With `literal` set the two
/// arcs are swapped.
ItinerarySymbol itinerary_symbol(const Angle& theta, const Angle& alpha, bool literal = false);

/// Symbols of α, 2α, ..., 2^{length-1}α.
std::string itinerary(const Angle& theta, const Angle& alpha, std::size_t length, bool literal = false);

struct KneadingResult {
  DoublingOrbit orbit;
  /// The itinerary of θ along its own orbit: raw_prefix raw_period^ω.
  std::string raw_prefix;
  std::string raw_period;
  KneadingSpec canonical;
  /// Length of the canonical period (n for Periodic(x_1..x_{n-1})).
  std::size_t kneading_period = 1;
  /// The kneading period is a proper divisor of the angle's period.
  bool period_reduced = false;

  std::string raw() const { return raw_prefix + "(" + raw_period + ")"; }
};

/// Throws DomainError when the canonical form does not exist.
KneadingResult kneading_sequence(const Angle& theta, bool literal = false);

KneadingGroup group_from_angle(const Angle& theta);

}  // namespace img
