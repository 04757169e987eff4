#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace predom {

/// Exact arbitrary-precision rational, always kept in lowest terms.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "p/q" (q > 0). Throws PreconditionError on malformed text.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string format_rational(Rational const& r);

/// How products involving 0 and infinity are resolved.
///   Upper:    inf * 0 = 0   (continuous for the upper topology)
///   Lower:    inf * 0 = inf (continuous for the lower topology)
///   Interval: no continuous extension exists, such products throw.
enum class ScalarMode { Upper, Lower, Interval };

/// A nonnegative rational or +infinity.
class ExtRational {
 public:
  ExtRational() = default;
  ExtRational(std::int64_t n);  // NOLINT(google-explicit-constructor)
  ExtRational(Rational r);      // NOLINT(google-explicit-constructor)

  static ExtRational infinity();

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }
  bool is_zero() const noexcept { return !infinite_ && value_ == 0; }

  /// Throws PreconditionError when infinite.
  Rational const& finite() const;

  friend bool operator==(ExtRational const& a, ExtRational const& b);
  friend std::strong_ordering operator<=>(ExtRational const& a,
                                          ExtRational const& b);

  /// Infinity absorbs.
  friend ExtRational operator+(ExtRational const& a, ExtRational const& b);
  ExtRational& operator+=(ExtRational const& b) { return *this = *this + b; }

 private:
  Rational value_{0};
  bool     infinite_ = false;
};

/// Product under the chosen convention for 0 * inf.
ExtRational multiply(ExtRational const& scalar, ExtRational const& value,
                     ScalarMode mode);

/// (a + b) / 2 for finite arguments.
ExtRational midpoint(ExtRational const& a, ExtRational const& b);

ExtRational const& max(ExtRational const& a, ExtRational const& b);
ExtRational const& min(ExtRational const& a, ExtRational const& b);

/// Accepts "inf" and everything parse_rational accepts.
ExtRational parse_ext(std::string_view text);
std::string format_ext(ExtRational const& x);

std::ostream& operator<<(std::ostream& os, ExtRational const& x);

}  // namespace predom
