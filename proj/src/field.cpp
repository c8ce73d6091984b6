#include "lrb/field.hpp"

namespace lrb {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) {
    throw InvalidInput("BadField", std::to_string(p) + " is not prime");
  }
  return Field(p);
}

Field Field::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty()) throw InvalidInput("BadField", "missing prime in '" + text + "'");
    std::uint64_t p = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') throw InvalidInput("BadField", "bad field '" + text + "'");
      p = p * 10 + static_cast<std::uint64_t>(c - '0');
      if (p > 0x7fffffffULL) throw InvalidInput("BadField", "prime too large in '" + text + "'");
    }
    return prime(static_cast<std::uint32_t>(p));
  }
  throw InvalidInput("BadField", "expected 'q' or 'fp:P', got '" + text + "'");
}

}  // namespace lrb
