#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmdev/errors.hpp"
#include "cmdev/field.hpp"
#include "cmdev/monomial.hpp"

namespace cmdev {

/// Polynomial ring k[x_1..x_n] over a prime field with a default monomial order.
class Ring {
 public:
  Ring(PrimeField field, std::vector<std::string> names, OrderKind order = OrderKind::grevlex)
      : field_(field), names_(std::move(names)), order_(order) {
    if (names_.empty()) throw PreconditionError("a ring needs at least one variable");
    if (names_.size() > kMaxVars)
      throw PreconditionError("at most " + std::to_string(kMaxVars) + " variables are supported");
  }

  /// k[x1..xn] with the default prime.
  static std::shared_ptr<const Ring> standard(std::size_t n, std::uint32_t p = PrimeField::kDefaultPrime,
                                              OrderKind order = OrderKind::grevlex) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return std::make_shared<const Ring>(PrimeField(p), std::move(names), order);
  }

  const PrimeField& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  OrderKind order() const noexcept { return order_; }

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  PrimeField field_;
  std::vector<std::string> names_;
  OrderKind order_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

/// A coefficient times a monomial in a given free-module component (0 for ring elements).
struct Term {
  Monomial mon;
  std::uint32_t comp = 0;
  Coeff coef = 0;
};

using TermVec = std::vector<Term>;

/// Total order on module terms: a monomial order extended to components, with
/// per-component degree shifts (basis vector e_i has degree shifts[i]).
class TermOrder {
 public:
  TermOrder() = default;
  explicit TermOrder(MonomialOrder order, std::vector<int> shifts = {})
      : order_(order), shifts_(std::move(shifts)) {}

  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<int>& shifts() const noexcept { return shifts_; }
  int shift(std::uint32_t comp) const noexcept {
    return comp < shifts_.size() ? shifts_[comp] : 0;
  }
  int degree(const Term& t) const noexcept { return t.mon.degree() + shift(t.comp); }

  /// Positive if a > b. Lower component indices are larger.
  int compare(const Term& a, const Term& b) const noexcept {
    if (order_.extension == ModuleExtension::position_over_term) {
      if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
      return cmdev::compare(a.mon, b.mon, order_.kind);
    }
    if (order_.kind != OrderKind::lex) {
      int da = degree(a), db = degree(b);
      if (da != db) return da > db ? 1 : -1;
    }
    int c = cmdev::compare(a.mon, b.mon, order_.kind);
    if (c != 0) return c;
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return 0;
  }

 private:
  MonomialOrder order_{};
  std::vector<int> shifts_;
};

namespace detail {

inline bool same_position(const Term& a, const Term& b) noexcept {
  return a.comp == b.comp && a.mon == b.mon;
}

/// Sorts descending, merges equal positions and drops zero coefficients.
template <class Order>
inline void normalize(TermVec& v, const Order& ord, const PrimeField& F) {
  std::sort(v.begin(), v.end(), [&](const Term& a, const Term& b) { return ord.compare(a, b) > 0; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    Term t = v[i];
    std::size_t j = i + 1;
    for (; j < v.size() && same_position(v[j], t); ++j) t.coef = F.add(t.coef, v[j].coef);
    if (t.coef != 0) v[out++] = t;
    i = j;
  }
  v.resize(out);
}

/// out = a + c*m*b for sorted a, b (m*b stays sorted because orders are multiplicative).
template <class Order>
inline void add_scaled(const TermVec& a, Coeff c, const Monomial& m, const TermVec& b, TermVec& out,
                       const Order& ord, const PrimeField& F, std::size_t a_begin = 0) {
  out.clear();
  out.reserve(a.size() - a_begin + b.size());
  std::size_t i = a_begin, j = 0;
  const bool trivial = m.is_one();
  while (i < a.size() && j < b.size()) {
    Term tb{trivial ? b[j].mon : b[j].mon * m, b[j].comp, F.mul(c, b[j].coef)};
    int cmp = ord.compare(a[i], tb);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(tb);
      ++j;
    } else {
      Coeff s = F.add(a[i].coef, tb.coef);
      if (s) out.push_back({tb.mon, tb.comp, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({trivial ? b[j].mon : b[j].mon * m, b[j].comp, F.mul(c, b[j].coef)});
}

template <class Order>
inline TermVec add(const TermVec& a, const TermVec& b, const Order& ord, const PrimeField& F) {
  TermVec out;
  add_scaled(a, 1, Monomial{}, b, out, ord, F);
  return out;
}

template <class Order>
inline TermVec sub(const TermVec& a, const TermVec& b, const Order& ord, const PrimeField& F) {
  TermVec out;
  add_scaled(a, F.neg(1), Monomial{}, b, out, ord, F);
  return out;
}

inline TermVec scale(TermVec v, Coeff c, const PrimeField& F) {
  if (c == 0) return {};
  for (auto& t : v) t.coef = F.mul(t.coef, c);
  return v;
}

inline TermVec mul_term(const TermVec& v, Coeff c, const Monomial& m, const PrimeField& F) {
  TermVec out;
  if (c == 0) return out;
  out.reserve(v.size());
  for (const auto& t : v) out.push_back({t.mon * m, t.comp, F.mul(c, t.coef)});
  return out;
}

/// Product of a ring element (comp 0 terms) with a vector.
template <class Order>
inline TermVec mul_poly(const TermVec& p, const TermVec& v, const Order& ord, const PrimeField& F) {
  if (p.empty() || v.empty()) return {};
  if (p.size() == 1) return mul_term(v, p[0].coef, p[0].mon, F);
  TermVec out;
  out.reserve(p.size() * v.size());
  for (const auto& a : p)
    for (const auto& b : v) out.push_back({a.mon * b.mon, b.comp, F.mul(a.coef, b.coef)});
  normalize(out, ord, F);
  return out;
}

inline TermVec make_monic(TermVec v, const PrimeField& F) {
  if (v.empty() || v.front().coef == 1) return v;
  const Coeff c = F.inv(v.front().coef);
  return scale(std::move(v), c, F);
}

inline bool is_homogeneous(const TermVec& v, const TermOrder& ord) {
  for (const auto& t : v)
    if (ord.degree(t) != ord.degree(v.front())) return false;
  return true;
}

inline bool terms_equal(const TermVec& a, const TermVec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!same_position(a[i], b[i]) || a[i].coef != b[i].coef) return false;
  return true;
}

}  // namespace detail

/// Element of k[x_1..x_n]; terms strictly descending in the ring's order.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, TermVec terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    for (auto& t : terms_) t.comp = 0;
    detail::normalize(terms_, order(), ring_->field());
  }

  static Polynomial constant(RingPtr ring, std::int64_t c) {
    Coeff v = ring->field().from_int(c);
    TermVec t;
    if (v) t.push_back({Monomial{}, 0, v});
    return Polynomial(std::move(ring), std::move(t));
  }
  static Polynomial variable(RingPtr ring, std::size_t i) {
    if (i >= ring->nvars()) throw PreconditionError("variable index out of range");
    return Polynomial(std::move(ring), TermVec{{Monomial::variable(i), 0, 1}});
  }
  static Polynomial monomial(RingPtr ring, const Monomial& m, Coeff c = 1) {
    TermVec t;
    if (c) t.push_back({m, 0, c});
    return Polynomial(std::move(ring), std::move(t));
  }
  /// Wraps terms already normalized under the ring order.
  static Polynomial from_sorted(RingPtr ring, TermVec terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const TermVec& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  TermOrder order() const { return TermOrder({ring_->order(), ModuleExtension::position_over_term}); }

  /// Maximal total degree, -1 for the zero polynomial.
  int degree() const noexcept {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mon.degree());
    return d;
  }
  bool is_homogeneous() const noexcept {
    for (const auto& t : terms_)
      if (t.mon.degree() != terms_.front().mon.degree()) return false;
    return true;
  }
  const Term& lead() const {
    if (terms_.empty()) throw PreconditionError("leading term of zero polynomial");
    return terms_.front();
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check(a, b);
    return from_sorted(a.ring_, detail::add(a.terms_, b.terms_, a.order(), a.ring_->field()));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    check(a, b);
    return from_sorted(a.ring_, detail::sub(a.terms_, b.terms_, a.order(), a.ring_->field()));
  }
  friend Polynomial operator-(const Polynomial& a) {
    return from_sorted(a.ring_, detail::scale(a.terms_, a.ring_->field().neg(1), a.ring_->field()));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check(a, b);
    return from_sorted(a.ring_, detail::mul_poly(a.terms_, b.terms_, a.order(), a.ring_->field()));
  }
  friend Polynomial operator*(std::int64_t c, const Polynomial& a) {
    const auto& F = a.ring_->field();
    return from_sorted(a.ring_, detail::scale(a.terms_, F.from_int(c), F));
  }
  /// Scaled to leading coefficient 1; zero stays zero.
  Polynomial monic() const { return from_sorted(ring_, detail::make_monic(terms_, ring_->field())); }
  Polynomial pow(unsigned e) const {
    Polynomial r = constant(ring_, 1), base = *this;
    while (e) {
      if (e & 1) r = r * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_ring(a.ring_, b.ring_) && detail::terms_equal(a.terms_, b.terms_);
  }

 private:
  static void check(const Polynomial& a, const Polynomial& b) {
    if (!a.ring_ || !same_ring(a.ring_, b.ring_))
      throw AmbientMismatch("polynomials belong to different rings");
  }

  RingPtr ring_;
  TermVec terms_;
};

/// Graded free module F = (+)_i S(-shifts[i]); basis vector e_i has degree shifts[i].
class FreeModule {
 public:
  FreeModule() = default;
  FreeModule(RingPtr ring, std::vector<int> shifts, std::optional<MonomialOrder> order = std::nullopt)
      : ring_(std::move(ring)) {
    MonomialOrder o = order.value_or(MonomialOrder{ring_->order(), ModuleExtension::position_over_term});
    order_ = std::make_shared<const TermOrder>(o, std::move(shifts));
  }
  static FreeModule ring_module(RingPtr ring) { return FreeModule(std::move(ring), {0}); }

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return order_ ? order_->shifts().size() : 0; }
  const std::vector<int>& shifts() const noexcept { return order_->shifts(); }
  int shift(std::size_t i) const noexcept { return order_->shifts()[i]; }
  const TermOrder& term_order() const noexcept { return *order_; }
  const MonomialOrder& order() const noexcept { return order_->order(); }

  FreeModule with_order(MonomialOrder o) const { return FreeModule(ring_, shifts(), o); }
  FreeModule dual() const {
    std::vector<int> s = shifts();
    for (auto& v : s) v = -v;
    return FreeModule(ring_, std::move(s), order());
  }

  /// Same ring and shifts; the term order is not part of the identity.
  bool same_ambient(const FreeModule& o) const { return same_ring(ring_, o.ring_) && shifts() == o.shifts(); }

 private:
  RingPtr ring_;
  std::shared_ptr<const TermOrder> order_;
};

/// Element of a graded free module; terms strictly descending in the module's term order.
class ModuleElement {
 public:
  ModuleElement() = default;
  explicit ModuleElement(FreeModule ambient) : ambient_(std::move(ambient)) {}
  ModuleElement(FreeModule ambient, TermVec terms) : ambient_(std::move(ambient)), terms_(std::move(terms)) {
    for (const auto& t : terms_)
      if (t.comp >= ambient_.rank()) throw PreconditionError("module term component out of range");
    detail::normalize(terms_, ambient_.term_order(), ambient_.ring()->field());
  }
  static ModuleElement from_sorted(FreeModule ambient, TermVec terms) {
    ModuleElement e(std::move(ambient));
    e.terms_ = std::move(terms);
    return e;
  }
  static ModuleElement basis(FreeModule ambient, std::size_t i) {
    if (i >= ambient.rank()) throw PreconditionError("basis index out of range");
    return ModuleElement(std::move(ambient), TermVec{{Monomial{}, static_cast<std::uint32_t>(i), 1}});
  }
  /// Builds sum_i entries[i] e_i.
  static ModuleElement from_entries(FreeModule ambient, const std::vector<Polynomial>& entries) {
    if (entries.size() != ambient.rank()) throw AmbientMismatch("entry count differs from module rank");
    TermVec t;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (!entries[i].is_zero() && !same_ring(entries[i].ring(), ambient.ring()))
        throw AmbientMismatch("entry from a different ring");
      for (auto term : entries[i].terms()) {
        term.comp = static_cast<std::uint32_t>(i);
        t.push_back(term);
      }
    }
    return ModuleElement(std::move(ambient), std::move(t));
  }

  const FreeModule& ambient() const noexcept { return ambient_; }
  const TermVec& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Degree including shifts; nullopt for zero.
  std::optional<int> degree() const {
    if (terms_.empty()) return std::nullopt;
    return ambient_.term_order().degree(terms_.front());
  }
  bool is_homogeneous() const { return detail::is_homogeneous(terms_, ambient_.term_order()); }

  Polynomial component(std::size_t i) const {
    TermVec t;
    for (const auto& term : terms_)
      if (term.comp == i) t.push_back({term.mon, 0, term.coef});
    return Polynomial(ambient_.ring(), std::move(t));
  }

  /// Same element re-sorted under another order of the same ambient module.
  ModuleElement in(const FreeModule& target) const {
    if (!ambient_.same_ambient(target)) throw AmbientMismatch("module element from a different free module");
    return ModuleElement(target, terms_);
  }

  friend ModuleElement operator+(const ModuleElement& a, const ModuleElement& b) {
    auto bb = b.in(a.ambient_);
    return from_sorted(a.ambient_, detail::add(a.terms_, bb.terms_, a.ambient_.term_order(), a.field()));
  }
  friend ModuleElement operator-(const ModuleElement& a, const ModuleElement& b) {
    auto bb = b.in(a.ambient_);
    return from_sorted(a.ambient_, detail::sub(a.terms_, bb.terms_, a.ambient_.term_order(), a.field()));
  }
  friend ModuleElement operator*(const Polynomial& f, const ModuleElement& v) {
    if (!same_ring(f.ring(), v.ambient_.ring())) throw AmbientMismatch("scalar from a different ring");
    return from_sorted(v.ambient_, detail::mul_poly(f.terms(), v.terms_, v.ambient_.term_order(), v.field()));
  }
  friend bool operator==(const ModuleElement& a, const ModuleElement& b) {
    if (!a.ambient_.same_ambient(b.ambient_)) return false;
    return detail::terms_equal(a.terms_, b.in(a.ambient_).terms_);
  }

 private:
  const PrimeField& field() const { return ambient_.ring()->field(); }

  FreeModule ambient_;
  TermVec terms_;
};

}  // namespace cmdev
