#include "predom/rational.hpp"

#include <cctype>
#include <ostream>

#include "predom/error.hpp"

namespace predom {

namespace {
  bool all_digits(std::string_view s) {
    if (s.empty()) {
      return false;
    }
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        return false;
      }
    }
    return true;
  }
}  // namespace

Rational parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  auto slash = text.find('/');
  auto num   = text.substr(0, slash);
  auto den   = slash == std::string_view::npos ? std::string_view("1")
                                               : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw PreconditionError("malformed rational '" + std::string(text) + "'");
  }
  boost::multiprecision::cpp_int n{std::string(num)};
  boost::multiprecision::cpp_int d{std::string(den)};
  if (d == 0) {
    throw PreconditionError("zero denominator in '" + std::string(text) + "'");
  }
  Rational r(n, d);
  return negative ? Rational(-r) : r;
}

std::string format_rational(Rational const& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

ExtRational::ExtRational(std::int64_t n) : value_(n) {
  if (n < 0) {
    throw PreconditionError("extended rationals are nonnegative");
  }
}

ExtRational::ExtRational(Rational r) : value_(std::move(r)) {
  if (value_ < 0) {
    throw PreconditionError("extended rationals are nonnegative");
  }
}

ExtRational ExtRational::infinity() {
  ExtRational x;
  x.infinite_ = true;
  return x;
}

Rational const& ExtRational::finite() const {
  if (infinite_) {
    throw PreconditionError("value is infinite");
  }
  return value_;
}

bool operator==(ExtRational const& a, ExtRational const& b) {
  if (a.infinite_ || b.infinite_) {
    return a.infinite_ == b.infinite_;
  }
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(ExtRational const& a, ExtRational const& b) {
  if (a.infinite_ || b.infinite_) {
    return a.infinite_ <=> b.infinite_;
  }
  if (a.value_ < b.value_) {
    return std::strong_ordering::less;
  }
  if (b.value_ < a.value_) {
    return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

ExtRational operator+(ExtRational const& a, ExtRational const& b) {
  if (a.infinite_ || b.infinite_) {
    return ExtRational::infinity();
  }
  return ExtRational(Rational(a.value_ + b.value_));
}

ExtRational multiply(ExtRational const& scalar, ExtRational const& value,
                     ScalarMode mode) {
  bool const zero_times_inf = (scalar.is_zero() && value.is_infinite())
                              || (scalar.is_infinite() && value.is_zero());
  if (mode == ScalarMode::Interval && scalar.is_infinite()) {
    throw PreconditionError(
        "multiplication by infinity has no continuous extension for the "
        "interval topology");
  }
  if (zero_times_inf) {
    switch (mode) {
      case ScalarMode::Upper:
        return ExtRational(0);
      case ScalarMode::Lower:
        return ExtRational::infinity();
      case ScalarMode::Interval:
        throw PreconditionError(
            "0 * inf has no continuous extension for the interval topology");
    }
  }
  if (scalar.is_infinite() || value.is_infinite()) {
    return ExtRational::infinity();
  }
  return ExtRational(Rational(scalar.finite() * value.finite()));
}

ExtRational midpoint(ExtRational const& a, ExtRational const& b) {
  return ExtRational(Rational((a.finite() + b.finite()) / 2));
}

ExtRational const& max(ExtRational const& a, ExtRational const& b) {
  return a < b ? b : a;
}

ExtRational const& min(ExtRational const& a, ExtRational const& b) {
  return b < a ? b : a;
}

ExtRational parse_ext(std::string_view text) {
  if (text == "inf") {
    return ExtRational::infinity();
  }
  auto r = parse_rational(text);
  if (r < 0) {
    throw PreconditionError("negative value '" + std::string(text) + "'");
  }
  return ExtRational(std::move(r));
}

std::string format_ext(ExtRational const& x) {
  return x.is_infinite() ? std::string("inf") : format_rational(x.finite());
}

std::ostream& operator<<(std::ostream& os, ExtRational const& x) {
  return os << format_ext(x);
}

}  // namespace predom
