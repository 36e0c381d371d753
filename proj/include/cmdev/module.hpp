#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <typeindex>
#include <utility>
#include <vector>

#include "cmdev/groebner.hpp"
#include "cmdev/hilbert.hpp"

namespace cmdev {

/// Graded module M = F0 / image(relations). Immutable; derived data (Gröbner
/// basis, Hilbert series, homological tables) is computed once and shared by copies.
class PresentedModule {
 public:
  PresentedModule() : PresentedModule(FreeModule(Ring::standard(1), {}), {}) {}
  PresentedModule(FreeModule generators, std::vector<ModuleElement> relations)
      : s_(std::make_shared<State>(Submodule(std::move(generators), std::move(relations)))) {}

  static PresentedModule quotient_ring(const Ideal& i) {
    FreeModule s = FreeModule::ring_module(i.ring);
    return PresentedModule(s, i.as_submodule().generators);
  }
  static PresentedModule free(FreeModule f) { return PresentedModule(std::move(f), {}); }
  static PresentedModule zero(RingPtr ring) { return PresentedModule(FreeModule(std::move(ring), {}), {}); }

  const FreeModule& free_module() const noexcept { return s_->rels.ambient; }
  const std::vector<ModuleElement>& relations() const noexcept { return s_->rels.generators; }
  const Submodule& relation_module() const noexcept { return s_->rels; }
  const RingPtr& ring() const noexcept { return free_module().ring(); }
  std::size_t rank() const noexcept { return free_module().rank(); }
  int nvars() const noexcept { return static_cast<int>(ring()->nvars()); }

  /// Gröbner basis of the relation module (grevlex, term over position).
  const GroebnerBasis& basis() const {
    return cached<GroebnerBasis>([this] {
      return groebner_basis(s_->rels, MonomialOrder{OrderKind::grevlex, ModuleExtension::term_over_position});
    });
  }
  const HilbertData& hilbert() const {
    return cached<HilbertData>([this] { return cmdev::hilbert_data(basis()); });
  }
  bool is_zero() const { return hilbert().is_zero(); }
  int dim() const { return hilbert().krull_dim; }

  /// Memoizes a value of type T derived from this module.
  template <class T, class Make>
  const T& cached(Make&& make) const {
    {
      std::lock_guard<std::mutex> lock(s_->mutex);
      auto it = s_->cache.find(std::type_index(typeid(T)));
      if (it != s_->cache.end()) return *static_cast<const T*>(it->second.get());
    }
    auto value = std::make_shared<const T>(make());
    std::lock_guard<std::mutex> lock(s_->mutex);
    auto [it, inserted] = s_->cache.emplace(std::type_index(typeid(T)), value);
    return *static_cast<const T*>(it->second.get());
  }

 private:
  struct State {
    explicit State(Submodule r) : rels(std::move(r)) {}
    Submodule rels;
    std::mutex mutex;
    std::map<std::type_index, std::shared_ptr<const void>> cache;
  };
  std::shared_ptr<State> s_;
};

inline HilbertData hilbert_data(const PresentedModule& m) { return m.hilbert(); }

/// Length of a finite-length module.
inline std::int64_t length(const PresentedModule& m) { return m.hilbert().length(); }

/// M / (xs) M.
inline PresentedModule quotient(const PresentedModule& m, const std::vector<Polynomial>& xs) {
  std::vector<ModuleElement> rels = m.relations();
  for (const auto& x : xs) {
    if (!same_ring(x.ring(), m.ring())) throw AmbientMismatch("quotient element from another ring");
    if (!x.is_homogeneous()) throw PreconditionError("quotient elements must be homogeneous");
    if (x.is_zero()) continue;
    for (std::size_t c = 0; c < m.rank(); ++c) rels.push_back(x * ModuleElement::basis(m.free_module(), c));
  }
  return PresentedModule(m.free_module(), std::move(rels));
}

/// The subquotient (G + R) / R of a free module F, presented on the generators G.
inline PresentedModule subquotient(const FreeModule& f, const std::vector<ModuleElement>& gens,
                                   const std::vector<ModuleElement>& rels) {
  std::vector<TermVec> all;
  std::vector<int> degrees;
  for (const auto& g : gens) {
    all.push_back(g.in(f).terms());
    degrees.push_back(g.degree().value_or(0));
  }
  for (const auto& r : rels) {
    if (r.is_zero()) continue;
    all.push_back(r.in(f).terms());
    degrees.push_back(*r.degree());
  }
  std::vector<int> shifts(degrees.begin(), degrees.begin() + static_cast<long>(gens.size()));
  auto syz = detail::syzygy_vectors(f, std::move(all), std::move(degrees));
  FreeModule target(f.ring(), shifts);
  return PresentedModule(target, detail::wrap(target, detail::project(syz.vectors, gens.size())));
}

/// Minimal presentation: minimal relations, and generators killed by a unit
/// entry are eliminated.
inline PresentedModule prune(const PresentedModule& m) {
  const RingPtr ring = m.ring();
  const auto& F = ring->field();
  std::vector<int> shifts = m.free_module().shifts();
  FreeModule work = detail::working(m.free_module());
  std::vector<TermVec> rels;
  for (const auto& r : minimal_generators(m.relation_module()).generators) rels.push_back(r.in(work).terms());

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < rels.size() && !changed; ++k) {
      const auto unit = std::find_if(rels[k].begin(), rels[k].end(), [](const Term& t) { return t.mon.is_one(); });
      if (unit == rels[k].end()) continue;
      const std::uint32_t j = unit->comp;
      const Coeff inv = F.inv(unit->coef);
      TermOrder ord({OrderKind::grevlex, ModuleExtension::term_over_position}, shifts);
      const TermVec pivot = rels[k];
      std::vector<TermVec> next;
      for (std::size_t l = 0; l < rels.size(); ++l) {
        if (l == k) continue;
        TermVec r = rels[l];
        TermVec coeff;
        for (const auto& t : r)
          if (t.comp == j) coeff.push_back({t.mon, 0, F.mul(F.neg(t.coef), inv)});
        if (!coeff.empty()) r = detail::add(r, detail::mul_poly(coeff, pivot, ord, F), ord, F);
        if (!r.empty()) next.push_back(std::move(r));
      }
      shifts.erase(shifts.begin() + j);
      TermOrder after({OrderKind::grevlex, ModuleExtension::term_over_position}, shifts);
      for (auto& r : next) {
        for (auto& t : r)
          if (t.comp > j) --t.comp;
        detail::normalize(r, after, F);
      }
      rels = std::move(next);
      changed = true;
    }
  }
  FreeModule out(ring, shifts);
  std::vector<ModuleElement> elems;
  for (auto& r : rels) elems.push_back(ModuleElement(out, std::move(r)));
  return PresentedModule(out, minimal_generators(Submodule(out, std::move(elems))).generators);
}

/// Submodule of F containing the relations of M whose image is the given set;
/// i.e. lift of the submodule of M generated by `gens`.
inline Submodule lift(const PresentedModule& m, const std::vector<ModuleElement>& gens) {
  std::vector<ModuleElement> all = m.relations();
  all.insert(all.end(), gens.begin(), gens.end());
  return Submodule(m.free_module(), std::move(all));
}

}  // namespace cmdev
