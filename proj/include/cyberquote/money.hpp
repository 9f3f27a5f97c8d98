#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace cyberquote {

// Fixed-point currency amount held in integer minor units (cents).
class Money {
 public:
  constexpr Money() noexcept = default;

  static constexpr Money from_cents(std::int64_t cents) noexcept { return Money(cents); }

  // Rounds half-to-even onto the cent grid.
  static Money from_units(double amount);

  // Parses "1234", "1234.5", "-0.07". At most two decimals.
  static Money parse(std::string_view text);

  constexpr std::int64_t cents() const noexcept { return cents_; }
  constexpr double to_double() const noexcept { return static_cast<double>(cents_) / 100.0; }

  // "1234.56", "-0.07"
  std::string to_string() const;

  constexpr Money operator+(Money o) const noexcept { return Money(cents_ + o.cents_); }
  constexpr Money operator-(Money o) const noexcept { return Money(cents_ - o.cents_); }
  constexpr Money operator-() const noexcept { return Money(-cents_); }
  constexpr Money& operator+=(Money o) noexcept {
    cents_ += o.cents_;
    return *this;
  }

  constexpr auto operator<=>(const Money&) const noexcept = default;

 private:
  constexpr explicit Money(std::int64_t cents) noexcept : cents_(cents) {}
  std::int64_t cents_ = 0;
};

// Half-even rounding of an amount to whole cents, returned as a double count of cents.
// Shared by the scalar and vector loss kernels so both land on the same grid point.
double round_to_cents(double amount) noexcept;

}  // namespace cyberquote
