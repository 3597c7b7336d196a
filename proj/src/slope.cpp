#include "hfpt/slope.hpp"

#include <charconv>

#include "hfpt/errors.hpp"

namespace hfpt {

Slope Slope::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text == "inf") return infinity();
  std::uint32_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw DomainError("malformed slope '" + std::string(text) + "' (expected a field element or 'inf')");
  }
  return finite(v);
}

std::string Slope::to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

std::vector<Slope> parse_slope_list(std::string_view text) {
  std::vector<Slope> out;
  if (text.find_first_not_of(' ') == std::string_view::npos) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(Slope::parse(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace hfpt
