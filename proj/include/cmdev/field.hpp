#pragma once

#include <cstdint>
#include <string>

#include "cmdev/errors.hpp"

namespace cmdev {

using Coeff = std::uint32_t;

/// Arithmetic in Z/p for an odd prime p below 2^31. Residues are kept in [0, p).
class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  explicit PrimeField(std::uint32_t p = kDefaultPrime) : p_(p) {
    if (p < 3 || p >= (1u << 31) || !is_prime(p))
      throw PreconditionError("field modulus " + std::to_string(p) + " is not an odd prime below 2^31");
  }

  std::uint32_t characteristic() const noexcept { return p_; }

  Coeff add(Coeff a, Coeff b) const noexcept {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Coeff pow(Coeff a, std::uint64_t e) const noexcept {
    Coeff r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  /// Multiplicative inverse via Fermat; a must be nonzero.
  Coeff inv(Coeff a) const {
    if (a == 0) throw PreconditionError("inverse of zero in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
  }
  Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }

  Coeff from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Coeff>(r);
  }
  /// Symmetric representative in (-p/2, p/2], used for printing.
  std::int64_t to_signed(Coeff a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

  static bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  std::uint32_t p_;
};

}  // namespace cmdev
