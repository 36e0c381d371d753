#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "cmdev/groebner.hpp"
#include "cmdev/monomial.hpp"

namespace cmdev {

/// Integer Laurent polynomial sum_k coeffs[k] t^(low + k), kept trimmed.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(int low, std::vector<std::int64_t> coeffs) : low_(low), c_(std::move(coeffs)) { trim(); }
  static LaurentPolynomial monomial(int exponent, std::int64_t c = 1) { return {exponent, {c}}; }

  bool is_zero() const noexcept { return c_.empty(); }
  int low() const noexcept { return low_; }
  int high() const noexcept { return low_ + static_cast<int>(c_.size()) - 1; }
  const std::vector<std::int64_t>& coefficients() const noexcept { return c_; }
  std::int64_t operator[](int e) const noexcept {
    return (e < low_ || e > high()) ? 0 : c_[static_cast<std::size_t>(e - low_)];
  }
  std::int64_t at_one() const noexcept {
    std::int64_t s = 0;
    for (auto v : c_) s += v;
    return s;
  }

  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int lo = std::min(a.low_, b.low_), hi = std::max(a.high(), b.high());
    std::vector<std::int64_t> c(static_cast<std::size_t>(hi - lo + 1), 0);
    for (int e = lo; e <= hi; ++e) c[static_cast<std::size_t>(e - lo)] = a[e] + b[e];
    return {lo, std::move(c)};
  }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a + b.scaled(-1);
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::int64_t> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return {a.low_ + b.low_, std::move(c)};
  }
  LaurentPolynomial scaled(std::int64_t k) const {
    auto c = c_;
    for (auto& v : c) v *= k;
    return {low_, std::move(c)};
  }
  LaurentPolynomial shifted(int k) const { return {low_ + k, c_}; }

  /// Quotient by (1 - t); requires value 0 at t = 1.
  LaurentPolynomial divided_by_one_minus_t() const {
    std::vector<std::int64_t> q(c_.size(), 0);
    std::int64_t run = 0;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      run += c_[i];
      q[i] = run;
    }
    return {low_, std::move(q)};
  }

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.low_ == b.low_ && a.c_ == b.c_;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!c_[i]) continue;
      int e = low_ + static_cast<int>(i);
      std::int64_t v = c_[i];
      if (!s.empty()) s += v < 0 ? " - " : " + ";
      else if (v < 0) s += "-";
      std::int64_t a = v < 0 ? -v : v;
      if (e == 0) s += std::to_string(a);
      else {
        if (a != 1) s += std::to_string(a) + "*";
        s += "t";
        if (e != 1) s += "^" + std::to_string(e);
      }
    }
    return s;
  }

 private:
  void trim() {
    std::size_t a = 0;
    while (a < c_.size() && c_[a] == 0) ++a;
    std::size_t b = c_.size();
    while (b > a && c_[b - 1] == 0) --b;
    if (a == b) {
      c_.clear();
      low_ = 0;
      return;
    }
    c_ = std::vector<std::int64_t>(c_.begin() + static_cast<long>(a), c_.begin() + static_cast<long>(b));
    low_ += static_cast<int>(a);
  }

  int low_ = 0;
  std::vector<std::int64_t> c_;
};

namespace detail {

inline void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& o : out)
      if (o.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  gens = std::move(out);
}

/// Numerator N with HS(S/J) = N(t) / (1-t)^n, by pivoting on a variable power.
inline LaurentPolynomial monomial_numerator(std::vector<Monomial> gens) {
  minimalize(gens);
  if (gens.empty()) return LaurentPolynomial::monomial(0);
  if (gens.front().is_one()) return {};

  std::uint16_t seen = 0;
  bool coprime = true;
  for (const auto& g : gens) {
    if (seen & g.support()) coprime = false;
    seen = static_cast<std::uint16_t>(seen | g.support());
  }
  if (coprime) {
    LaurentPolynomial r = LaurentPolynomial::monomial(0);
    for (const auto& g : gens) r = r * LaurentPolynomial(0, [&] {
                                  std::vector<std::int64_t> c(static_cast<std::size_t>(g.degree()) + 1, 0);
                                  c[0] = 1;
                                  c.back() -= 1;
                                  return c;
                                }());
    return r;
  }

  // pivot: the variable occurring in the most non-pure-power generators
  std::array<int, kMaxVars> count{};
  for (const auto& g : gens) {
    if (std::popcount(static_cast<unsigned>(g.support())) < 2) continue;
    for (std::size_t v = 0; v < kMaxVars; ++v)
      if (g[v]) ++count[v];
  }
  std::size_t var = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  int e = kMaxExponent;
  for (const auto& g : gens)
    if (std::popcount(static_cast<unsigned>(g.support())) >= 2 && g[var]) e = std::min(e, static_cast<int>(g[var]));
  const Monomial p = Monomial::variable(var, e);

  std::vector<Monomial> sum = gens;
  sum.push_back(p);
  std::vector<Monomial> quotient;
  quotient.reserve(gens.size());
  for (const auto& g : gens) {
    Monomial q = g;
    q.set(var, std::max(0, g[var] - e));
    quotient.push_back(q);
  }
  return monomial_numerator(std::move(sum)) + monomial_numerator(std::move(quotient)).shifted(e);
}

}  // namespace detail

/// Hilbert series Q(t)/(1-t)^n of a graded module, with dimension and multiplicity.
struct HilbertData {
  LaurentPolynomial numerator;
  int nvars = 0;
  /// -1 for the zero module.
  int krull_dim = -1;
  /// 0 for the zero module.
  std::int64_t multiplicity = 0;

  static HilbertData from_numerator(LaurentPolynomial q, int nvars) {
    HilbertData h;
    h.numerator = q;
    h.nvars = nvars;
    if (q.is_zero()) return h;
    int k = 0;
    while (q.at_one() == 0) {
      q = q.divided_by_one_minus_t();
      ++k;
    }
    h.krull_dim = nvars - k;
    h.multiplicity = q.at_one();
    return h;
  }

  bool is_zero() const noexcept { return numerator.is_zero(); }
  bool finite_length() const noexcept { return krull_dim <= 0; }
  /// Total length; requires finite length.
  std::int64_t length() const {
    if (krull_dim > 0) throw PreconditionError("module does not have finite length");
    return multiplicity;
  }

  /// Value of the Hilbert function in degree `deg`.
  std::int64_t hilbert_function(int deg) const {
    // coefficient of t^deg in Q(t) * sum_k binom(k+n-1, n-1) t^k
    std::int64_t total = 0;
    for (int e = numerator.low(); e <= numerator.high() && e <= deg; ++e) {
      std::int64_t c = numerator[e];
      if (!c) continue;
      total += c * binomial(deg - e + nvars - 1, nvars - 1);
    }
    return total;
  }

  static std::int64_t binomial(int n, int k) {
    if (k < 0 || n < k) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  }
};

/// Hilbert data of F / N from a Gröbner basis of N.
inline HilbertData hilbert_data(const GroebnerBasis& gb) {
  const FreeModule& f = gb.ambient();
  LaurentPolynomial q;
  for (std::size_t c = 0; c < f.rank(); ++c)
    q = q + detail::monomial_numerator(gb.leading_monomials(c)).shifted(f.shift(c));
  return HilbertData::from_numerator(q, static_cast<int>(f.ring()->nvars()));
}

/// Hilbert data of S / I.
inline HilbertData hilbert_data(const Ideal& i) {
  return hilbert_data(groebner_basis(i, {OrderKind::grevlex, ModuleExtension::term_over_position}));
}

/// Krull dimension of S / I (-1 for the unit ideal).
inline int dimension(const Ideal& i) { return hilbert_data(i).krull_dim; }

}  // namespace cmdev
