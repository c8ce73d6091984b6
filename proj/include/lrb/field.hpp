#pragma once

#include <cstdint>
#include <string>

#include "lrb/errors.hpp"

namespace lrb {

// Descriptor of an exact coefficient field: the rationals or a prime field
// F_p. All linear algebra in this library is exact; there is no floating
// point anywhere.
class Field {
 public:
  static Field rationals() { return Field(0); }

  static Field prime(std::uint32_t p);

  // Accepts "q" (rationals) or "fp:P" with P prime.
  static Field parse(const std::string& text);

  bool is_rational() const { return p_ == 0; }

  // 0 for the rationals, p for F_p.
  std::uint32_t characteristic() const { return p_; }

  std::string name() const {
    return is_rational() ? "q" : "fp:" + std::to_string(p_);
  }

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_;
  }
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

}  // namespace lrb
