#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hfpt {

/// A point of P¹(F_p): either a field element s (the line x - s·y) or
/// infinity (the line y = 0).
class Slope {
 public:
  static Slope finite(std::uint32_t value) { return Slope(false, value); }
  static Slope infinity() { return Slope(true, 0); }

  /// "inf" or a nonnegative decimal integer. Range against p is checked by the arrangement.
  static Slope parse(std::string_view text);

  bool is_infinity() const noexcept { return infinite_; }
  std::uint32_t value() const noexcept { return value_; }
  std::string to_string() const;

  friend bool operator==(const Slope&, const Slope&) = default;
  friend auto operator<=>(const Slope&, const Slope&) = default;

 private:
  Slope(bool infinite, std::uint32_t value) : infinite_(infinite), value_(value) {}

  bool infinite_;
  std::uint32_t value_;
};

std::vector<Slope> parse_slope_list(std::string_view text);

}  // namespace hfpt
