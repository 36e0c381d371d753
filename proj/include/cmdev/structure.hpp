#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cmdev/homological.hpp"

namespace cmdev {

namespace detail {

inline std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent seed for sub-computation `salt` of a computation seeded by `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) { return splitmix(splitmix(seed) ^ salt); }

inline Coeff random_unit(std::mt19937_64& rng, const PrimeField& F) {
  std::uniform_int_distribution<std::uint64_t> dist(1, F.characteristic() - 1);
  return static_cast<Coeff>(dist(rng));
}

inline Polynomial random_linear_form(const RingPtr& ring, std::mt19937_64& rng) {
  TermVec t;
  for (std::size_t v = 0; v < ring->nvars(); ++v) t.push_back({Monomial::variable(v), 0, random_unit(rng, ring->field())});
  return Polynomial(ring, std::move(t));
}

/// `k` distinct indices from [0, n), sorted.
inline std::vector<std::size_t> sample_indices(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min(k, n));
  std::sort(all.begin(), all.end());
  return all;
}

inline Polynomial random_monomial(const RingPtr& ring, std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<std::size_t> pick(0, ring->nvars() - 1);
  Monomial m;
  for (int i = 0; i < degree; ++i) {
    const std::size_t v = pick(rng);
    m.set(v, m[v] + 1);
  }
  return Polynomial::monomial(ring, m, 1);
}

inline bool drops_dimension(const PresentedModule& m, const Polynomial& x) {
  return !x.is_zero() && quotient(m, {x}).dim() == m.dim() - 1;
}

}  // namespace detail

constexpr int kParameterBudget = 64;

/// Homogeneous x in j with dim M/xM = dim M - 1, found by seeded random search.
inline Polynomial find_parameter_element(const PresentedModule& m, const Ideal& j, std::uint64_t seed,
                                         int budget = kParameterBudget) {
  const RingPtr ring = m.ring();
  const int d = m.dim();
  if (d <= 0) throw PreconditionError("parameter elements need a module of positive dimension");
  if (dimension(j) >= d) throw PreconditionError("dim S/j >= dim M: no parameter element in j");
  std::vector<Polynomial> gens;
  for (const auto& g : minimal_generators(j).generators)
    if (!g.is_zero()) gens.push_back(g);
  std::mt19937_64 rng(seed);
  int top = 1;
  for (const auto& g : gens) top = std::max(top, g.degree());
  const int escalation = 4;
  for (int D = top; D <= top + escalation; ++D) {
    for (int attempt = 0; attempt < budget; ++attempt) {
      // early attempts combine a few generators with monomial multipliers; later ones are dense
      const bool sparse = attempt < budget / 2;
      const std::size_t width = sparse ? std::min<std::size_t>(1 + static_cast<std::size_t>(attempt) / 4, 8) : 0;
      Polynomial x = Polynomial::constant(ring, 0);
      if (gens.empty() || gens.front().degree() == 0) {
        if (sparse) {
          std::vector<std::size_t> vars = detail::sample_indices(rng, ring->nvars(), width);
          TermVec t;
          for (std::size_t v : vars) t.push_back({Monomial::variable(v), 0, detail::random_unit(rng, ring->field())});
          x = Polynomial(ring, std::move(t)).pow(static_cast<unsigned>(D));
        } else {
          x = detail::random_linear_form(ring, rng).pow(static_cast<unsigned>(D));
        }
      } else if (sparse) {
        for (std::size_t k : detail::sample_indices(rng, gens.size(), width)) {
          const Polynomial& g = gens[k];
          const Polynomial c = Polynomial::constant(ring, detail::random_unit(rng, ring->field()));
          x = x + c * detail::random_monomial(ring, rng, D - g.degree()) * g;
        }
      } else {
        for (const auto& g : gens) {
          const Polynomial c = Polynomial::constant(ring, detail::random_unit(rng, ring->field()));
          x = x + c * detail::random_linear_form(ring, rng).pow(static_cast<unsigned>(D - g.degree())) * g;
        }
      }
      if (detail::drops_dimension(m, x)) return x.monic();
    }
  }
  throw SearchFailure("no parameter element found within the search budget", seed);
}

/// C-system of parameters x_1..x_d built back to front.
struct CSop {
  std::vector<Polynomial> elements;
  /// certificates[i-1] = a(M/(x_{i+1},...,x_d)M), the ideal whose cube contains x_i.
  std::vector<Ideal> certificates;
  /// tails[i] = M/(x_{i+1},...,x_d)M for i = 0..d; tails[d] = M.
  std::vector<PresentedModule> tails;
};

inline bool in_cube(const Ideal& a, const Polynomial& x) {
  if (is_unit_ideal(a)) return true;
  return contains(power(a, 3), x);
}

inline CSop c_system_of_parameters(const PresentedModule& m, std::uint64_t seed) {
  const int d = m.dim();
  if (d < 1) throw PreconditionError("C-systems of parameters need dim M >= 1");
  CSop c;
  c.elements.resize(static_cast<std::size_t>(d), Polynomial::constant(m.ring(), 0));
  c.certificates.resize(static_cast<std::size_t>(d));
  c.tails.resize(static_cast<std::size_t>(d) + 1);
  c.tails[static_cast<std::size_t>(d)] = m;
  PresentedModule n = m;
  for (int i = d; i >= 1; --i) {
    const Ideal a = local_cohomology_annihilators(n).product;
    const bool unit = is_unit_ideal(a);
    const Polynomial g = find_parameter_element(n, a, detail::derive_seed(seed, static_cast<std::uint64_t>(i)));
    Polynomial x = unit ? g : g.pow(3);
    if (!unit && !in_cube(a, x)) throw Error("C-parameter certificate failed: x not in a^3");
    PresentedModule next = quotient(n, {x});
    if (next.dim() != i - 1) throw Error("C-parameter certificate failed: no dimension drop");
    c.elements[static_cast<std::size_t>(i - 1)] = std::move(x);
    c.certificates[static_cast<std::size_t>(i - 1)] = a;
    c.tails[static_cast<std::size_t>(i - 1)] = next;
    n = next;
  }
  return c;
}

/// Re-checks x_i in a(M/(x_{i+1..d})M)^3 and the dimension drops for a candidate sequence.
inline bool verify_csop(const PresentedModule& m, const std::vector<Polynomial>& xs) {
  const int d = m.dim();
  if (static_cast<int>(xs.size()) != d) return false;
  PresentedModule n = m;
  for (int i = d; i >= 1; --i) {
    const Polynomial& x = xs[static_cast<std::size_t>(i - 1)];
    if (!in_cube(local_cohomology_annihilators(n).product, x)) return false;
    n = quotient(n, {x});
    if (n.dim() != i - 1) return false;
  }
  return true;
}

/// Submodule N/K of M = F/K, remembered by its lift N inside F.
struct SubquotientPiece {
  Submodule lift;
  PresentedModule module;
};

inline SubquotientPiece piece(const PresentedModule& m, Submodule lift) {
  PresentedModule sq = subquotient(m.free_module(), lift.generators, m.relations());
  return {std::move(lift), std::move(sq)};
}

/// 0 :_M x as a piece of M.
inline SubquotientPiece annihilated_by(const PresentedModule& m, const Polynomial& x) {
  return piece(m, colon(m.relation_module(), x));
}

/// U_M(0) = 0 :_M x for a parameter element x in a(M).
inline SubquotientPiece unmixed_piece(const PresentedModule& m, std::uint64_t seed) {
  if (m.dim() <= 0) return piece(m, m.relation_module());
  const Ideal& a = local_cohomology_annihilators(m).product;
  if (is_unit_ideal(a)) return piece(m, m.relation_module());
  return annihilated_by(m, find_parameter_element(m, a, seed));
}

inline PresentedModule unmixed_component(const PresentedModule& m, std::uint64_t seed) {
  return unmixed_piece(m, seed).module;
}

/// Cohen-Macaulay deviated sequence U_i(M) = U_{M/(x_{i+2},...,x_d)M}(0), i = 0..d-1.
struct DeviatedSequence {
  CSop csop;
  std::vector<PresentedModule> u;
};

inline const DeviatedSequence& cm_deviated_sequence(const PresentedModule& m, std::uint64_t seed) {
  struct Memo {
    std::shared_ptr<std::mutex> mutex = std::make_shared<std::mutex>();
    mutable std::map<std::uint64_t, DeviatedSequence> by_seed;
  };
  const Memo& memo = m.cached<Memo>([] { return Memo{}; });
  {
    std::lock_guard<std::mutex> lock(*memo.mutex);
    auto it = memo.by_seed.find(seed);
    if (it != memo.by_seed.end()) return it->second;
  }
  DeviatedSequence s;
  if (m.dim() >= 1) {
    s.csop = c_system_of_parameters(m, seed);
    const std::size_t d = s.csop.elements.size();
    for (std::size_t i = 0; i < d; ++i) {
      const PresentedModule& n = s.csop.tails[i + 1];
      const Ideal& cert = s.csop.certificates[i];
      s.u.push_back(is_unit_ideal(cert) ? PresentedModule::zero(m.ring())
                                        : annihilated_by(n, s.csop.elements[i]).module);
    }
  }
  std::lock_guard<std::mutex> lock(*memo.mutex);
  return memo.by_seed.emplace(seed, std::move(s)).first->second;
}

/// Dimension filtration D_0 subset ... subset D_t = M of nonzero members.
struct DimensionFiltration {
  std::vector<SubquotientPiece> members;
  std::vector<int> dims;
};

inline DimensionFiltration dimension_filtration(const PresentedModule& m, std::uint64_t seed) {
  if (m.is_zero()) throw PreconditionError("dimension filtration of the zero module");
  std::vector<ModuleElement> all = m.relations();
  for (std::size_t c = 0; c < m.rank(); ++c) all.push_back(ModuleElement::basis(m.free_module(), c));
  std::vector<SubquotientPiece> chain{SubquotientPiece{Submodule(m.free_module(), all), m}};
  for (std::uint64_t step = 0;; ++step) {
    const SubquotientPiece& top = chain.back();
    const PresentedModule& d = top.module;
    if (d.dim() <= 0) break;
    const Ideal& a = local_cohomology_annihilators(d).product;
    if (is_unit_ideal(a)) break;
    const Polynomial x = find_parameter_element(d, a, detail::derive_seed(seed, 1000 + step));
    Submodule lift = intersect(colon(m.relation_module(), x), top.lift);
    SubquotientPiece next = piece(m, std::move(lift));
    if (next.module.is_zero()) break;
    chain.push_back(std::move(next));
  }
  DimensionFiltration f;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    f.dims.push_back(it->module.dim());
    f.members.push_back(*it);
  }
  return f;
}

/// D_i / D_{i-1} (with D_{-1} = 0).
inline PresentedModule filtration_quotient(const PresentedModule& m, const DimensionFiltration& f, std::size_t i) {
  std::vector<ModuleElement> below = m.relations();
  if (i > 0) {
    const auto& g = f.members[i - 1].lift.generators;
    below.insert(below.end(), g.begin(), g.end());
  }
  return subquotient(m.free_module(), f.members[i].lift.generators, below);
}

/// p(M) = dim S/a(M), and -1 when a(M) = (1).
inline int polynomial_type(const PresentedModule& m) {
  if (m.dim() < 1) return -1;
  const Ideal& a = local_cohomology_annihilators(m).product;
  return is_unit_ideal(a) ? -1 : dimension(a);
}

struct Classification {
  bool is_cm = false;
  bool is_sequentially_cm = false;
  bool is_generalized_cm = false;
};

inline bool is_generalized_cohen_macaulay(const PresentedModule& m) {
  const int n = m.nvars(), d = m.dim();
  for (int i = 0; i < d; ++i)
    if (ext_module(m, static_cast<std::size_t>(n - i)).dim() > 0) return false;
  return true;
}

inline bool is_sequentially_cohen_macaulay(const PresentedModule& m, const DimensionFiltration& f) {
  for (std::size_t i = 0; i < f.members.size(); ++i)
    if (!is_cohen_macaulay(filtration_quotient(m, f, i))) return false;
  return true;
}

inline Classification classify(const PresentedModule& m, std::uint64_t seed) {
  if (m.is_zero()) throw PreconditionError("classification of the zero module");
  Classification c;
  c.is_cm = is_cohen_macaulay(m);
  c.is_generalized_cm = is_generalized_cohen_macaulay(m);
  c.is_sequentially_cm = is_sequentially_cohen_macaulay(m, dimension_filtration(m, seed));
  return c;
}

}  // namespace cmdev
