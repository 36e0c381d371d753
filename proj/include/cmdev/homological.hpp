#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "cmdev/resolution.hpp"

namespace cmdev {

namespace detail {

/// Transposes the map F_k -> F_{k-1}: one vector in F_k^* per basis element of F_{k-1}^*.
inline std::vector<TermVec> transpose(const FreeResolution& r, std::size_t k) {
  const FreeModule dual = working(r.modules[k].dual());
  const TermOrder& ord = dual.term_order();
  const auto& F = dual.ring()->field();
  std::vector<TermVec> out(r.modules[k - 1].rank());
  for (std::size_t col = 0; col < r.maps[k].size(); ++col)
    for (const auto& t : r.maps[k][col].terms()) out[t.comp].push_back({t.mon, static_cast<std::uint32_t>(col), t.coef});
  for (auto& v : out) normalize(v, ord, F);
  return out;
}

}  // namespace detail

/// Ext^i_S(M, S) from a resolution of M, pruned.
inline PresentedModule ext_from_resolution(const FreeResolution& r, const RingPtr& ring, std::size_t i) {
  if (i > r.length()) return PresentedModule::zero(ring);
  const FreeModule Fi = r.modules[i].dual();
  const FreeModule w = detail::working(Fi);
  std::vector<ModuleElement> kernel;
  if (i + 1 <= r.length()) {
    std::vector<int> degrees = Fi.shifts();
    auto cols = detail::transpose(r, i + 1);
    auto syz = detail::syzygy_vectors(r.modules[i + 1].dual(), std::move(cols), degrees);
    kernel = detail::wrap(w, syz.vectors);
  } else {
    for (std::size_t c = 0; c < Fi.rank(); ++c) kernel.push_back(ModuleElement::basis(w, c));
  }
  std::vector<ModuleElement> image;
  if (i >= 1)
    for (auto& v : detail::transpose(r, i))
      if (!v.empty()) image.push_back(ModuleElement(w, std::move(v)));
  return prune(subquotient(w, kernel, image));
}

inline const FreeResolution& resolution(const PresentedModule& m) {
  return m.cached<FreeResolution>([&] { return free_resolution(m); });
}

/// Projective dimension = length of the minimal resolution; 0 for the zero module.
inline int projective_dimension(const PresentedModule& m) {
  return m.is_zero() ? 0 : static_cast<int>(resolution(m).length());
}

/// Ext^i_S(M, S), computed on demand and memoized per index.
inline const PresentedModule& ext_module(const PresentedModule& m, std::size_t i) {
  if (i > m.ring()->nvars()) throw PreconditionError("Ext index exceeds the number of variables");
  struct Memo {
    std::shared_ptr<std::mutex> mutex = std::make_shared<std::mutex>();
    mutable std::map<std::size_t, PresentedModule> ext;
  };
  const Memo& memo = m.cached<Memo>([] { return Memo{}; });
  {
    std::lock_guard<std::mutex> lock(*memo.mutex);
    auto it = memo.ext.find(i);
    if (it != memo.ext.end()) return it->second;
  }
  // Ext^i vanishes below the codimension and above the projective dimension
  const int n = m.nvars();
  PresentedModule e = (m.is_zero() || static_cast<int>(i) < n - m.dim() || static_cast<int>(i) > projective_dimension(m))
                          ? PresentedModule::zero(m.ring())
                          : ext_from_resolution(resolution(m), m.ring(), i);
  std::lock_guard<std::mutex> lock(*memo.mutex);
  return memo.ext.emplace(i, std::move(e)).first->second;
}

/// depth = n - max{i : Ext^i(M,S) != 0}.
inline int depth(const PresentedModule& m) {
  if (m.is_zero()) throw PreconditionError("depth of the zero module is undefined");
  return m.nvars() - projective_dimension(m);
}

inline bool is_cohen_macaulay(const PresentedModule& m) { return m.is_zero() || depth(m) == m.dim(); }

/// Ann(M) = intersection over generators e_c of (image : e_c).
inline Ideal annihilator(const PresentedModule& m) {
  const RingPtr ring = m.ring();
  if (m.rank() == 0) return Ideal::unit(ring);
  if (m.rank() == 1) return minimal_generators(Ideal::from_submodule(m.relation_module()));
  std::optional<Ideal> acc;
  for (std::size_t c = 0; c < m.rank(); ++c) {
    Ideal a = colon_into_ring(m.relation_module(), ModuleElement::basis(m.free_module(), c));
    acc = acc ? intersect(*acc, a) : a;
  }
  return *acc;
}

/// a_i(M) = Ann H^i_m(M) = Ann Ext^{n-i}(M, S) for 0 <= i < dim M, and their product.
struct AnnihilatorLadder {
  std::vector<Ideal> a;
  Ideal product;
};

inline const AnnihilatorLadder& local_cohomology_annihilators(const PresentedModule& m) {
  return m.cached<AnnihilatorLadder>([&] {
    AnnihilatorLadder l;
    const int n = m.nvars();
    const int d = m.dim();
    Ideal prod = Ideal::unit(m.ring());
    for (int i = 0; i < d; ++i) {
      const PresentedModule& e = ext_module(m, static_cast<std::size_t>(n - i));
      Ideal a = e.is_zero() ? Ideal::unit(m.ring()) : annihilator(e);
      if (!e.is_zero()) prod = product(prod, a);
      l.a.push_back(std::move(a));
    }
    l.product = minimal_generators(prod);
    return l;
  });
}

/// Lift of H^0_m(M) = (K :_F m^infinity) inside the free module of M.
inline Submodule saturation(const Submodule& k) {
  const RingPtr ring = k.ambient.ring();
  Submodule cur = minimal_generators(k);
  while (true) {
    std::optional<Submodule> next;
    for (std::size_t v = 0; v < ring->nvars(); ++v) {
      Submodule c = colon(cur, Polynomial::variable(ring, v));
      next = next ? intersect(*next, c) : c;
    }
    if (!next) return cur;
    if (same_submodule(*next, cur)) return cur;
    cur = std::move(*next);
  }
}

/// H^0_m(M) as a subquotient of the free module of M.
inline PresentedModule zeroth_local_cohomology(const PresentedModule& m) {
  if (m.rank() == 0) return m;
  Submodule sat = saturation(m.relation_module());
  return subquotient(m.free_module(), sat.generators, m.relations());
}

namespace detail {

/// Index of subset `s` (bitmask) among the subsets of the same size, in increasing order.
inline std::vector<std::vector<std::uint32_t>> subsets_by_size(std::size_t r) {
  std::vector<std::vector<std::uint32_t>> out(r + 1);
  for (std::uint32_t s = 0; s < (1u << r); ++s) out[static_cast<std::size_t>(std::popcount(s))].push_back(s);
  return out;
}

}  // namespace detail

/// Lengths of the Koszul homology H_i(xs; M), i = 0..r.
inline std::vector<std::int64_t> koszul_homology_lengths(const std::vector<Polynomial>& xs, const PresentedModule& m) {
  const RingPtr ring = m.ring();
  for (const auto& x : xs) {
    if (!same_ring(x.ring(), ring)) throw AmbientMismatch("Koszul element from another ring");
    if (x.is_zero() || !x.is_homogeneous()) throw PreconditionError("Koszul elements must be nonzero and homogeneous");
  }
  if (!quotient(m, xs).hilbert().finite_length())
    throw PreconditionError("M/(xs)M does not have finite length");
  const std::size_t r = xs.size();
  const std::size_t rank = m.rank();
  const auto& field = ring->field();
  const auto subsets = detail::subsets_by_size(r);
  auto index_of = [&](std::size_t size, std::uint32_t s) {
    const auto& v = subsets[size];
    return static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), s) - v.begin());
  };
  auto wedge = [&](std::size_t i) {
    std::vector<int> shifts;
    for (std::uint32_t s : subsets[i]) {
      int d = 0;
      for (std::size_t j = 0; j < r; ++j)
        if (s >> j & 1u) d += xs[j].degree();
      for (std::size_t c = 0; c < rank; ++c) shifts.push_back(d + m.free_module().shift(c));
    }
    return detail::working(FreeModule(ring, shifts));
  };
  // relations of M placed in each exterior summand
  auto tensored_relations = [&](std::size_t i, const FreeModule& f) {
    std::vector<ModuleElement> out;
    for (std::size_t si = 0; si < subsets[i].size(); ++si)
      for (const auto& rel : m.relations()) {
        TermVec t = rel.terms();
        for (auto& term : t) term.comp = static_cast<std::uint32_t>(si * rank + term.comp);
        if (!t.empty()) out.push_back(ModuleElement(f, std::move(t)));
      }
    return out;
  };
  // boundary of the basis element (s, c) of wedge i, as a vector of wedge i-1
  auto boundary = [&](std::size_t i, std::uint32_t s, std::size_t c, const FreeModule& target) {
    TermVec acc;
    int sign_pos = 0;
    for (std::size_t j = 0; j < r; ++j) {
      if (!(s >> j & 1u)) continue;
      const std::size_t ti = index_of(i - 1, s & ~(1u << j)) * rank + c;
      TermVec piece;
      for (const auto& t : xs[j].terms()) piece.push_back({t.mon, static_cast<std::uint32_t>(ti), t.coef});
      if (sign_pos % 2) piece = detail::scale(std::move(piece), field.neg(1), field);
      acc = detail::add(acc, piece, target.term_order(), field);
      ++sign_pos;
    }
    return acc;
  };

  std::vector<FreeModule> w;
  for (std::size_t i = 0; i <= r; ++i) w.push_back(wedge(i));
  std::vector<std::int64_t> lengths;
  for (std::size_t i = 0; i <= r; ++i) {
    const FreeModule& f = w[i];
    std::vector<ModuleElement> cycles;
    if (i == 0) {
      for (std::size_t c = 0; c < f.rank(); ++c) cycles.push_back(ModuleElement::basis(f, c));
    } else {
      std::vector<TermVec> gens;
      std::vector<int> degrees;
      for (std::size_t si = 0; si < subsets[i].size(); ++si)
        for (std::size_t c = 0; c < rank; ++c) {
          gens.push_back(boundary(i, subsets[i][si], c, w[i - 1]));
          degrees.push_back(f.shift(si * rank + c));
        }
      for (const auto& rel : tensored_relations(i - 1, w[i - 1])) {
        gens.push_back(rel.terms());
        degrees.push_back(*rel.degree());
      }
      auto syz = detail::syzygy_vectors(w[i - 1], std::move(gens), std::move(degrees));
      cycles = detail::wrap(f, detail::project(syz.vectors, f.rank()));
    }
    std::vector<ModuleElement> bounds = tensored_relations(i, f);
    if (i < r)
      for (std::size_t si = 0; si < subsets[i + 1].size(); ++si)
        for (std::size_t c = 0; c < rank; ++c) {
          TermVec b = boundary(i + 1, subsets[i + 1][si], c, f);
          if (!b.empty()) bounds.push_back(ModuleElement(f, std::move(b)));
        }
    lengths.push_back(length(subquotient(f, cycles, bounds)));
  }
  return lengths;
}

/// Serre multiplicity e(xs; M) = sum (-1)^i length H_i(xs; M).
inline std::int64_t koszul_euler_characteristic(const std::vector<Polynomial>& xs, const PresentedModule& m) {
  std::int64_t e = 0;
  const auto l = koszul_homology_lengths(xs, m);
  for (std::size_t i = 0; i < l.size(); ++i) e += (i % 2 ? -1 : 1) * l[i];
  return e;
}

}  // namespace cmdev
