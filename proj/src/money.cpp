#include "cyberquote/money.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>

#include "cyberquote/error.hpp"

namespace cyberquote {

double round_to_cents(double amount) noexcept {
  // nearbyint honours the default FE_TONEAREST mode, which is round-half-even.
  return std::nearbyint(amount * 100.0);
}

Money Money::from_units(double amount) {
  if (!std::isfinite(amount)) {
    throw NumericalError("non-finite money amount");
  }
  const double cents = round_to_cents(amount);
  if (std::fabs(cents) > 9.0e18) {
    throw NumericalError("money amount out of range");
  }
  return Money(static_cast<std::int64_t>(cents));
}

Money Money::parse(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto dot = s.find('.');
  const std::string_view whole = s.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if (whole.empty() && frac.empty()) {
    throw FormatError("invalid money amount: '" + std::string(text) + "'");
  }
  if (frac.size() > 2) {
    throw FormatError("money amount has more than two decimals: '" + std::string(text) + "'");
  }
  auto all_digits = [](std::string_view d) {
    for (char c : d) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  if (!all_digits(whole) || !all_digits(frac)) {
    throw FormatError("invalid money amount: '" + std::string(text) + "'");
  }
  std::int64_t units = 0;
  if (!whole.empty()) {
    auto [p, ec] = std::from_chars(whole.data(), whole.data() + whole.size(), units);
    if (ec != std::errc{} || p != whole.data() + whole.size()) {
      throw FormatError("invalid money amount: '" + std::string(text) + "'");
    }
  }
  std::int64_t minor = 0;
  if (!frac.empty()) {
    auto [p, ec] = std::from_chars(frac.data(), frac.data() + frac.size(), minor);
    (void)p;
    (void)ec;
    if (frac.size() == 1) minor *= 10;
  }
  const std::int64_t cents = units * 100 + minor;
  return Money(negative ? -cents : cents);
}

std::string Money::to_string() const {
  const std::int64_t mag = cents_ < 0 ? -cents_ : cents_;
  std::string out = cents_ < 0 ? "-" : "";
  out += std::to_string(mag / 100);
  out += '.';
  const std::int64_t minor = mag % 100;
  if (minor < 10) out += '0';
  out += std::to_string(minor);
  return out;
}

}  // namespace cyberquote
