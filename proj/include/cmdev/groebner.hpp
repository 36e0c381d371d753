#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cmdev/engine.hpp"
#include "cmdev/polynomial.hpp"

namespace cmdev {

/// Submodule of a graded free module given by homogeneous generators.
struct Submodule {
  FreeModule ambient;
  std::vector<ModuleElement> generators;

  Submodule() = default;
  Submodule(FreeModule f, std::vector<ModuleElement> gens) : ambient(std::move(f)), generators(std::move(gens)) {
    for (auto& g : generators) {
      if (!g.ambient().same_ambient(ambient)) throw AmbientMismatch("generator outside the ambient module");
      if (!g.is_homogeneous()) throw PreconditionError("submodule generators must be homogeneous");
      g = g.in(ambient);
    }
  }
};

/// Homogeneous ideal of a polynomial ring.
struct Ideal {
  RingPtr ring;
  std::vector<Polynomial> generators;

  Ideal() = default;
  Ideal(RingPtr r, std::vector<Polynomial> gens) : ring(std::move(r)), generators(std::move(gens)) {
    for (const auto& g : generators) {
      if (!g.is_zero() && !same_ring(g.ring(), ring)) throw AmbientMismatch("ideal generator from another ring");
      if (!g.is_homogeneous()) throw PreconditionError("ideal generators must be homogeneous");
    }
  }
  static Ideal unit(RingPtr r) { return Ideal(r, {Polynomial::constant(r, 1)}); }
  static Ideal maximal(RingPtr r) {
    std::vector<Polynomial> g;
    for (std::size_t i = 0; i < r->nvars(); ++i) g.push_back(Polynomial::variable(r, i));
    return Ideal(r, std::move(g));
  }

  /// The ideal as a submodule of S = S^1.
  Submodule as_submodule() const {
    FreeModule s = FreeModule::ring_module(ring);
    std::vector<ModuleElement> gens;
    for (const auto& g : generators) gens.push_back(ModuleElement(s, g.terms()));
    return Submodule(s, std::move(gens));
  }
  static Ideal from_submodule(const Submodule& s) {
    if (s.ambient.rank() != 1) throw PreconditionError("not a submodule of the ring");
    std::vector<Polynomial> g;
    for (const auto& e : s.generators)
      if (!e.is_zero()) g.push_back(e.component(0));
    return Ideal(s.ambient.ring(), std::move(g));
  }
};

namespace detail {

inline std::vector<TermVec> terms_in(const std::vector<ModuleElement>& gens, const FreeModule& f) {
  std::vector<TermVec> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.in(f).terms());
  return out;
}

inline std::vector<int> generator_degrees(const std::vector<ModuleElement>& gens) {
  std::vector<int> d;
  for (const auto& g : gens) d.push_back(g.degree().value_or(0));
  return d;
}

/// Internal computations use term-over-position grevlex with shifts.
inline FreeModule working(const FreeModule& f) {
  return f.with_order({OrderKind::grevlex, ModuleExtension::term_over_position});
}

}  // namespace detail

/// Reduced Gröbner basis of a submodule under a fixed order.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(FreeModule ambient, std::vector<TermVec> elements)
      : ambient_(std::move(ambient)), elements_(std::move(elements)) {
    by_comp_.resize(ambient_.rank());
    for (std::size_t i = 0; i < elements_.size(); ++i) by_comp_[elements_[i].front().comp].push_back(i);
  }

  /// Ambient free module; its term order is the basis order.
  const FreeModule& ambient() const noexcept { return ambient_; }
  const MonomialOrder& order() const noexcept { return ambient_.order(); }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<TermVec>& raw() const noexcept { return elements_; }

  std::vector<ModuleElement> elements() const {
    std::vector<ModuleElement> out;
    for (const auto& e : elements_) out.push_back(ModuleElement::from_sorted(ambient_, e));
    return out;
  }
  std::vector<Term> leading_terms() const {
    std::vector<Term> out;
    for (const auto& e : elements_) out.push_back(e.front());
    return out;
  }
  /// Leading monomials lying in component c.
  std::vector<Monomial> leading_monomials(std::size_t c) const {
    std::vector<Monomial> out;
    for (std::size_t i : by_comp_[c]) out.push_back(elements_[i].front().mon);
    return out;
  }

  /// Remainder of full reduction; no remaining term is divisible by a leading term.
  TermVec reduce(TermVec f) const {
    const auto& F = ambient_.ring()->field();
    const auto& ord = ambient_.term_order();
    TermVec result, scratch;
    std::size_t pos = 0;
    while (pos < f.size()) {
      const Term t = f[pos];
      const TermVec* g = nullptr;
      for (std::size_t i : by_comp_[t.comp])
        if (elements_[i].front().mon.divides(t.mon)) {
          g = &elements_[i];
          break;
        }
      if (!g) {
        result.push_back(t);
        ++pos;
        continue;
      }
      detail::add_scaled(f, F.neg(t.coef), t.mon / g->front().mon, *g, scratch, ord, F, pos);
      std::swap(f, scratch);
      pos = 0;
    }
    return result;
  }

  bool contains(const ModuleElement& f) const { return reduce(f.in(ambient_).terms()).empty(); }

  /// True when the submodule is the whole free module.
  bool is_everything() const {
    for (std::size_t c = 0; c < ambient_.rank(); ++c) {
      bool unit = false;
      for (std::size_t i : by_comp_[c])
        if (elements_[i].front().mon.is_one()) unit = true;
      if (!unit) return false;
    }
    return true;
  }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    if (!a.ambient_.same_ambient(b.ambient_) || !(a.order() == b.order())) return false;
    if (a.elements_.size() != b.elements_.size()) return false;
    for (std::size_t i = 0; i < a.elements_.size(); ++i)
      if (!detail::terms_equal(a.elements_[i], b.elements_[i])) return false;
    return true;
  }

 private:
  FreeModule ambient_;
  std::vector<TermVec> elements_;
  std::vector<std::vector<std::size_t>> by_comp_;
};

inline GroebnerBasis groebner_basis(const Submodule& s, MonomialOrder order) {
  FreeModule f = s.ambient.with_order(order);
  auto res = detail::run_buchberger(f.ring()->field(), f.term_order(), detail::terms_in(s.generators, f),
                                    detail::generator_degrees(s.generators), detail::Tracking::none);
  return GroebnerBasis(f, std::move(res.basis));
}

/// Basis under the ambient module's own order.
inline GroebnerBasis groebner_basis(const Submodule& s) { return groebner_basis(s, s.ambient.order()); }

inline GroebnerBasis groebner_basis(const Ideal& i, MonomialOrder order) {
  return groebner_basis(i.as_submodule(), order);
}
inline GroebnerBasis groebner_basis(const Ideal& i) { return groebner_basis(i.as_submodule()); }

inline ModuleElement normal_form(const ModuleElement& f, const GroebnerBasis& gb) {
  if (!f.ambient().same_ambient(gb.ambient())) throw AmbientMismatch("element outside the basis' ambient module");
  return ModuleElement::from_sorted(gb.ambient(), gb.reduce(f.in(gb.ambient()).terms()));
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (gb.ambient().rank() != 1 || !same_ring(f.ring(), gb.ambient().ring()))
    throw AmbientMismatch("polynomial outside the basis' ring");
  TermVec t = gb.reduce(ModuleElement(gb.ambient(), f.terms()).terms());
  return Polynomial(f.ring(), std::move(t));
}

/// A minimal homogeneous generating set of the same submodule.
inline Submodule minimal_generators(const Submodule& s) {
  FreeModule w = detail::working(s.ambient);
  auto res = detail::run_buchberger(w.ring()->field(), w.term_order(), detail::terms_in(s.generators, w),
                                    detail::generator_degrees(s.generators), detail::Tracking::none);
  std::vector<ModuleElement> gens;
  for (std::size_t k : res.minimal) gens.push_back(s.generators[k]);
  return Submodule(s.ambient, std::move(gens));
}

inline Ideal minimal_generators(const Ideal& i) { return Ideal::from_submodule(minimal_generators(i.as_submodule())); }

namespace detail {

struct SyzygyData {
  std::vector<TermVec> vectors;
  std::vector<int> shifts;
};

/// Kernel of the map S^m -> F sending e_k to gens[k] (degree degrees[k]).
inline SyzygyData syzygy_vectors(const FreeModule& f, std::vector<TermVec> gens, std::vector<int> degrees) {
  FreeModule w = working(f);
  for (auto& g : gens) normalize(g, w.term_order(), w.ring()->field());
  auto res = run_buchberger(w.ring()->field(), w.term_order(), std::move(gens), degrees, Tracking::all_inputs);
  return {std::move(res.syzygies), std::move(degrees)};
}

/// Keeps coordinates [0, k) of each vector, dropping zeros.
inline std::vector<TermVec> project(const std::vector<TermVec>& vs, std::size_t k) {
  std::vector<TermVec> out;
  for (const auto& v : vs) {
    TermVec p;
    for (const auto& t : v)
      if (t.comp < k) p.push_back(t);
    if (!p.empty()) out.push_back(std::move(p));
  }
  return out;
}

inline std::vector<ModuleElement> wrap(const FreeModule& f, const std::vector<TermVec>& vs) {
  std::vector<ModuleElement> out;
  for (const auto& v : vs) out.push_back(ModuleElement(f, v));
  return out;
}

}  // namespace detail

/// Syzygy module of the generators, inside S^m with shifts = generator degrees.
inline Submodule syzygies(const Submodule& s) {
  auto gens = detail::terms_in(s.generators, s.ambient);
  auto degrees = detail::generator_degrees(s.generators);
  auto syz = detail::syzygy_vectors(s.ambient, std::move(gens), degrees);
  FreeModule target(s.ambient.ring(), syz.shifts);
  return Submodule(target, detail::wrap(target, syz.vectors));
}

/// (s :_F f) = { v in F : f v in s }.
inline Submodule colon(const Submodule& s, const Polynomial& f) {
  const FreeModule& F = s.ambient;
  if (!same_ring(f.ring(), F.ring())) throw AmbientMismatch("colon element from another ring");
  if (!f.is_homogeneous()) throw PreconditionError("colon element must be homogeneous");
  if (f.is_zero()) {
    std::vector<ModuleElement> all;
    for (std::size_t c = 0; c < F.rank(); ++c) all.push_back(ModuleElement::basis(F, c));
    return Submodule(F, std::move(all));
  }
  const int df = f.degree();
  std::vector<TermVec> gens;
  std::vector<int> degrees;
  for (std::size_t c = 0; c < F.rank(); ++c) {
    gens.push_back((f * ModuleElement::basis(F, c)).terms());
    degrees.push_back(F.shift(c) + df);
  }
  for (const auto& g : s.generators) {
    gens.push_back(g.terms());
    degrees.push_back(g.degree().value_or(0));
  }
  auto syz = detail::syzygy_vectors(F, std::move(gens), std::move(degrees));
  // coordinate c of a syzygy is the coefficient of e_c; its degree in F is shift(c)
  auto first = detail::project(syz.vectors, F.rank());
  return minimal_generators(Submodule(F, detail::wrap(F, first)));
}

/// Ideal { f in S : f m in s }.
inline Ideal colon_into_ring(const Submodule& s, const ModuleElement& m) {
  if (!m.ambient().same_ambient(s.ambient)) throw AmbientMismatch("element outside the submodule's ambient");
  if (!m.is_homogeneous()) throw PreconditionError("colon element must be homogeneous");
  RingPtr ring = s.ambient.ring();
  if (m.is_zero()) return Ideal::unit(ring);
  std::vector<TermVec> gens{m.in(s.ambient).terms()};
  std::vector<int> degrees{*m.degree()};
  for (const auto& g : s.generators) {
    gens.push_back(g.terms());
    degrees.push_back(g.degree().value_or(0));
  }
  auto syz = detail::syzygy_vectors(s.ambient, std::move(gens), std::move(degrees));
  std::vector<Polynomial> out;
  for (const auto& v : detail::project(syz.vectors, 1)) {
    TermVec t = v;
    for (auto& term : t) term.comp = 0;
    out.push_back(Polynomial(ring, std::move(t)));
  }
  return minimal_generators(Ideal(ring, std::move(out)));
}

/// A ∩ B for submodules of the same free module.
inline Submodule intersect(const Submodule& a, const Submodule& b) {
  if (!a.ambient.same_ambient(b.ambient)) throw AmbientMismatch("intersection of submodules of different modules");
  std::vector<TermVec> gens;
  std::vector<int> degrees;
  for (const auto& g : a.generators) {
    gens.push_back(g.terms());
    degrees.push_back(g.degree().value_or(0));
  }
  for (const auto& g : b.generators) {
    gens.push_back(g.in(a.ambient).terms());
    degrees.push_back(g.degree().value_or(0));
  }
  auto syz = detail::syzygy_vectors(a.ambient, std::move(gens), std::move(degrees));
  const auto& F = a.ambient.ring()->field();
  const auto& ord = a.ambient.term_order();
  std::vector<ModuleElement> out;
  for (const auto& v : detail::project(syz.vectors, a.generators.size())) {
    TermVec acc;
    for (const auto& t : v) {
      TermVec piece = detail::mul_term(a.generators[t.comp].terms(), t.coef, t.mon, F);
      acc = detail::add(acc, piece, ord, F);
    }
    if (!acc.empty()) out.push_back(ModuleElement::from_sorted(a.ambient, std::move(acc)));
  }
  return minimal_generators(Submodule(a.ambient, std::move(out)));
}

inline Ideal intersect(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring, b.ring)) throw AmbientMismatch("ideals from different rings");
  return Ideal::from_submodule(intersect(a.as_submodule(), b.as_submodule()));
}

inline Ideal product(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring, b.ring)) throw AmbientMismatch("ideals from different rings");
  std::vector<Polynomial> g;
  for (const auto& x : a.generators)
    for (const auto& y : b.generators) {
      Polynomial p = x * y;
      if (!p.is_zero()) g.push_back(std::move(p));
    }
  return minimal_generators(Ideal(a.ring, std::move(g)));
}

inline Ideal power(const Ideal& a, unsigned k) {
  Ideal r = Ideal::unit(a.ring);
  for (unsigned i = 0; i < k; ++i) r = product(r, a);
  return r;
}

/// Sum of ideals.
inline Ideal operator+(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring, b.ring)) throw AmbientMismatch("ideals from different rings");
  std::vector<Polynomial> g = a.generators;
  g.insert(g.end(), b.generators.begin(), b.generators.end());
  return Ideal(a.ring, std::move(g));
}

inline bool is_unit_ideal(const Ideal& i) { return groebner_basis(i).is_everything(); }

inline bool contains(const Ideal& i, const Polynomial& f) {
  return normal_form(f, groebner_basis(i)).is_zero();
}

/// Equality of submodules via reduced bases.
inline bool same_submodule(const Submodule& a, const Submodule& b) {
  MonomialOrder o{OrderKind::grevlex, ModuleExtension::term_over_position};
  return groebner_basis(a, o) == groebner_basis(Submodule(a.ambient, b.generators), o);
}

}  // namespace cmdev
