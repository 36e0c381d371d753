#pragma once

// Brute-force oracles for the tests: dense linear algebra on graded slices,
// independent of the Gröbner engine.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "cmdev/module.hpp"

namespace oracle {

using namespace cmdev;

/// All monomials of total degree d in n variables.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial m;
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      m.set(i, left);
      out.push_back(m);
      m.set(i, 0);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m.set(i, e);
      self(self, i + 1, left - e);
    }
    m.set(i, 0);
  };
  rec(rec, 0, d);
  return out;
}

/// Row reduction over F_p; returns the rank. Rows are modified.
inline std::size_t rank(std::vector<std::vector<Coeff>> rows, const PrimeField& F) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const Coeff inv = F.inv(rows[r][c]);
    for (auto& v : rows[r]) v = F.mul(v, inv);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c] == 0) continue;
      const Coeff f = rows[k][c];
      for (std::size_t j = c; j < cols; ++j) rows[k][j] = F.sub(rows[k][j], F.mul(f, rows[r][j]));
    }
    ++r;
  }
  return r;
}

/// Coordinates of the degree-D slice of a free module of rank `copies` x rank(F).
class Slice {
 public:
  Slice(const FreeModule& f, int degree, std::size_t copies = 1) : f_(f) {
    for (std::size_t k = 0; k < copies; ++k)
      for (std::size_t c = 0; c < f.rank(); ++c)
        for (const auto& m : monomials_of_degree(f.ring()->nvars(), degree - f.shift(c)))
          index_.emplace(key(k, c, m), index_.size());
  }
  std::size_t size() const { return index_.size(); }

  /// Dense vector of a homogeneous element of this degree placed in copy k.
  std::vector<Coeff> vector(const TermVec& terms, std::size_t k = 0) const {
    std::vector<Coeff> v(size(), 0);
    for (const auto& t : terms) v[index_.at(key(k, t.comp, t.mon))] = t.coef;
    return v;
  }

  /// Spanning set of the degree slice of the submodule generated by `gens`, in copy k.
  std::vector<std::vector<Coeff>> span(const std::vector<ModuleElement>& gens, int degree, std::size_t k = 0) const {
    std::vector<std::vector<Coeff>> rows;
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      for (const auto& m : monomials_of_degree(f_.ring()->nvars(), degree - *g.degree())) {
        TermVec t;
        for (const auto& term : g.terms()) t.push_back({term.mon * m, term.comp, term.coef});
        rows.push_back(vector(t, k));
      }
    }
    return rows;
  }

 private:
  std::vector<int> key(std::size_t k, std::size_t c, const Monomial& m) const {
    std::vector<int> out{static_cast<int>(k), static_cast<int>(c)};
    auto e = m.exponents(f_.ring()->nvars());
    out.insert(out.end(), e.begin(), e.end());
    return out;
  }
  FreeModule f_;
  std::map<std::vector<int>, std::size_t> index_;
};

/// f in the submodule generated by gens, by linear algebra in the degree of f.
inline bool member(const std::vector<ModuleElement>& gens, const ModuleElement& f) {
  if (f.is_zero()) return true;
  const int D = *f.degree();
  const FreeModule& F = f.ambient();
  Slice s(F, D);
  auto rows = s.span(gens, D);
  const std::size_t r0 = rank(rows, F.ring()->field());
  rows.push_back(s.vector(f.in(F).terms()));
  return rank(rows, F.ring()->field()) == r0;
}

/// Hilbert function of F / <gens> in degree D.
inline std::int64_t hilbert_function(const FreeModule& f, const std::vector<ModuleElement>& gens, int D) {
  Slice s(f, D);
  return static_cast<std::int64_t>(s.size() - rank(s.span(gens, D), f.ring()->field()));
}

/// dim_k of the degree-D part of Ann(F / <gens>).
inline std::int64_t annihilator_slice(const PresentedModule& m, int D) {
  const FreeModule& F = m.free_module();
  const auto& field = m.ring()->field();
  const std::size_t r = F.rank();
  const auto mons = monomials_of_degree(m.ring()->nvars(), D);
  // the module relations in every copy k, the target degree of copy k is D + shift(k)
  std::vector<std::vector<Coeff>> rel_rows;
  std::vector<Slice> slices;
  std::size_t total = 0;
  std::vector<std::size_t> offset;
  for (std::size_t k = 0; k < r; ++k) {
    slices.emplace_back(F, D + F.shift(k));
    offset.push_back(total);
    total += slices.back().size();
  }
  auto place = [&](std::size_t k, const std::vector<Coeff>& v) {
    std::vector<Coeff> row(total, 0);
    for (std::size_t i = 0; i < v.size(); ++i) row[offset[k] + i] = v[i];
    return row;
  };
  for (std::size_t k = 0; k < r; ++k)
    for (const auto& v : slices[k].span(m.relations(), D + F.shift(k))) rel_rows.push_back(place(k, v));
  const std::size_t base = rank(rel_rows, field);
  auto all = rel_rows;
  for (const auto& mon : mons) {
    std::vector<Coeff> row(total, 0);
    for (std::size_t k = 0; k < r; ++k) {
      TermVec t{{mon, static_cast<std::uint32_t>(k), 1}};
      auto v = slices[k].vector(t);
      for (std::size_t i = 0; i < v.size(); ++i) row[offset[k] + i] = v[i];
    }
    all.push_back(std::move(row));
  }
  const std::size_t image = rank(all, field) - base;
  return static_cast<std::int64_t>(mons.size() - image);
}

/// Schoolbook product with a coefficient map, no ordering involved.
inline std::map<std::vector<int>, Coeff> naive_product(const Polynomial& a, const Polynomial& b) {
  const auto& F = a.ring()->field();
  const std::size_t n = a.ring()->nvars();
  std::map<std::vector<int>, Coeff> out;
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) {
      auto& c = out[(s.mon * t.mon).exponents(n)];
      c = F.add(c, F.mul(s.coef, t.coef));
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline std::map<std::vector<int>, Coeff> as_map(const Polynomial& p) {
  std::map<std::vector<int>, Coeff> out;
  for (const auto& t : p.terms()) out[t.mon.exponents(p.ring()->nvars())] = t.coef;
  return out;
}

inline Polynomial random_form(const RingPtr& r, std::mt19937_64& rng, int degree, int terms) {
  std::uniform_int_distribution<Coeff> coef(1, r->field().characteristic() - 1);
  const auto mons = monomials_of_degree(r->nvars(), degree);
  std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
  TermVec t;
  for (int k = 0; k < terms; ++k) t.push_back({mons[pick(rng)], 0, coef(rng)});
  return Polynomial(r, std::move(t));
}

}  // namespace oracle
