#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cmdev/errors.hpp"

namespace cmdev {

/// Upper bound on the number of ring variables.
inline constexpr std::size_t kMaxVars = 16;
/// Upper bound on a single exponent (exponents are stored in one byte).
inline constexpr int kMaxExponent = 255;

/// Exponent vector with cached total degree and a support bitmask for fast
/// divisibility rejection.
class Monomial {
 public:
  Monomial() = default;

  explicit Monomial(std::span<const int> exponents) {
    if (exponents.size() > kMaxVars)
      throw PreconditionError("at most " + std::to_string(kMaxVars) + " variables are supported");
    for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
  }
  Monomial(std::initializer_list<int> exponents)
      : Monomial(std::span<const int>(exponents.begin(), exponents.size())) {}

  static Monomial variable(std::size_t i, int power = 1) {
    Monomial m;
    m.set(i, power);
    return m;
  }

  int operator[](std::size_t i) const noexcept { return e_[i]; }
  int degree() const noexcept { return deg_; }
  std::uint16_t support() const noexcept { return mask_; }
  bool is_one() const noexcept { return deg_ == 0; }

  void set(std::size_t i, int value) {
    if (value < 0 || value > kMaxExponent)
      throw ResourceError("exponent " + std::to_string(value) + " outside [0, " +
                          std::to_string(kMaxExponent) + "]");
    deg_ = static_cast<std::uint16_t>(deg_ - e_[i] + value);
    e_[i] = static_cast<std::uint8_t>(value);
    if (value)
      mask_ = static_cast<std::uint16_t>(mask_ | (1u << i));
    else
      mask_ = static_cast<std::uint16_t>(mask_ & ~(1u << i));
  }

  bool divides(const Monomial& other) const noexcept {
    if (mask_ & ~other.mask_) return false;
    if (deg_ > other.deg_) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      int s = a.e_[i] + b.e_[i];
      if (s > kMaxExponent) throw ResourceError("exponent overflow in monomial product");
      r.e_[i] = static_cast<std::uint8_t>(s);
    }
    r.deg_ = static_cast<std::uint16_t>(a.deg_ + b.deg_);
    r.mask_ = static_cast<std::uint16_t>(a.mask_ | b.mask_);
    return r;
  }

  /// Exact quotient; requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b) noexcept {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      r.e_[i] = static_cast<std::uint8_t>(a.e_[i] - b.e_[i]);
      if (r.e_[i]) r.mask_ = static_cast<std::uint16_t>(r.mask_ | (1u << i));
    }
    r.deg_ = static_cast<std::uint16_t>(a.deg_ - b.deg_);
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
      r.deg_ = static_cast<std::uint16_t>(r.deg_ + r.e_[i]);
    }
    r.mask_ = static_cast<std::uint16_t>(a.mask_ | b.mask_);
    return r;
  }

  static bool coprime(const Monomial& a, const Monomial& b) noexcept {
    return (a.mask_ & b.mask_) == 0;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.e_ == b.e_; }

  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : e_) h = (h ^ v) * 1099511628211ull;
    return h;
  }

  std::vector<int> exponents(std::size_t nvars) const {
    std::vector<int> out(nvars);
    for (std::size_t i = 0; i < nvars; ++i) out[i] = e_[i];
    return out;
  }

 private:
  std::array<std::uint8_t, kMaxVars> e_{};
  std::uint16_t deg_ = 0;
  std::uint16_t mask_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

enum class OrderKind { grevlex, lex, grlex };
enum class ModuleExtension { position_over_term, term_over_position };

/// A monomial order on the ring plus its extension to free modules.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  ModuleExtension extension = ModuleExtension::position_over_term;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

inline std::string to_string(OrderKind k) {
  switch (k) {
    case OrderKind::grevlex: return "grevlex";
    case OrderKind::lex: return "lex";
    case OrderKind::grlex: return "grlex";
  }
  return "?";
}

inline OrderKind order_kind_from_string(const std::string& s) {
  if (s == "grevlex") return OrderKind::grevlex;
  if (s == "lex") return OrderKind::lex;
  if (s == "grlex") return OrderKind::grlex;
  throw PreconditionError("unknown monomial order '" + s + "'");
}

/// Three-way comparison of monomials; positive means a > b.
inline int compare(const Monomial& a, const Monomial& b, OrderKind kind) noexcept {
  if (kind != OrderKind::lex && a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  if (kind == OrderKind::grevlex) {
    // equal degree: the monomial with the smaller exponent in the last differing variable is larger
    for (std::size_t i = kMaxVars; i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  return 0;
}

inline std::strong_ordering order_compare(const Monomial& a, const Monomial& b, OrderKind kind) noexcept {
  int c = compare(a, b, kind);
  return c > 0 ? std::strong_ordering::greater
               : (c < 0 ? std::strong_ordering::less : std::strong_ordering::equal);
}

}  // namespace cmdev
