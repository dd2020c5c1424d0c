#pragma once

#include <compare>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace varbesov {

// A value in [-inf, +inf] where the infinite case is an explicit tag. Exponent
// conventions such as omega_inf or lambda^(1/inf) are case splits on the tag,
// never approximations by large floats.
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;
  constexpr ExtendedReal(double finite) : value_(finite) {  // NOLINT(google-explicit-constructor)
    if (finite != finite || finite == std::numeric_limits<double>::infinity() ||
        finite == -std::numeric_limits<double>::infinity())
      throw std::invalid_argument("ExtendedReal: finite constructor given a non-finite value");
  }

  static constexpr ExtendedReal infinity() { return ExtendedReal(Tag::plus_inf); }
  static constexpr ExtendedReal minus_infinity() { return ExtendedReal(Tag::minus_inf); }

  // Maps IEEE +-inf onto the tag; NaN is rejected.
  static constexpr ExtendedReal from_double(double v) {
    if (v == std::numeric_limits<double>::infinity()) return infinity();
    if (v == -std::numeric_limits<double>::infinity()) return minus_infinity();
    return ExtendedReal(v);
  }

  constexpr bool is_finite() const { return tag_ == Tag::finite; }
  constexpr bool is_infinite() const { return tag_ != Tag::finite; }
  constexpr bool is_plus_infinity() const { return tag_ == Tag::plus_inf; }

  // Finite payload; throws on the infinite tags.
  constexpr double value() const {
    if (tag_ != Tag::finite) throw std::domain_error("ExtendedReal::value on an infinite value");
    return value_;
  }

  // IEEE view (infinite tags become +-inf) for reporting and arithmetic shortcuts.
  constexpr double to_double() const {
    switch (tag_) {
      case Tag::plus_inf: return std::numeric_limits<double>::infinity();
      case Tag::minus_inf: return -std::numeric_limits<double>::infinity();
      default: return value_;
    }
  }

  friend constexpr bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    return a.tag_ == b.tag_ && (a.tag_ != Tag::finite || a.value_ == b.value_);
  }
  friend constexpr std::partial_ordering operator<=>(const ExtendedReal& a, const ExtendedReal& b) {
    return a.to_double() <=> b.to_double();
  }

  friend ExtendedReal operator+(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.is_plus_infinity() || b.is_plus_infinity()) {
      if (a.tag_ == Tag::minus_inf || b.tag_ == Tag::minus_inf)
        throw std::domain_error("ExtendedReal: inf - inf");
      return infinity();
    }
    if (a.tag_ == Tag::minus_inf || b.tag_ == Tag::minus_inf) return minus_infinity();
    return from_double(a.value_ + b.value_);
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtendedReal& x) {
    if (x.is_plus_infinity()) return os << "inf";
    if (x.tag_ == Tag::minus_inf) return os << "-inf";
    return os << x.value_;
  }

 private:
  enum class Tag { finite, plus_inf, minus_inf };
  constexpr explicit ExtendedReal(Tag t) : tag_(t) {}

  double value_ = 0.0;
  Tag tag_ = Tag::finite;
};

}  // namespace varbesov
