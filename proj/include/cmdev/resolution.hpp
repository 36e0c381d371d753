#pragma once

// Free resolutions. A Schreyer frame is built first: the syzygies of a
// Gröbner basis obtained from S-pair reductions form a Gröbner basis for the
// induced order, so every level only needs reductions, no new completions.
// The frame is then minimized by cancelling unit entries.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <vector>

#include "cmdev/module.hpp"

namespace cmdev {

/// Graded free resolution 0 <- F_0 <- F_1 <- ... <- F_L.
struct FreeResolution {
  std::vector<FreeModule> modules;
  /// maps[k] lists the images of the basis of F_k in F_{k-1}; maps[0] is empty.
  std::vector<std::vector<ModuleElement>> maps;

  std::size_t length() const noexcept { return modules.empty() ? 0 : modules.size() - 1; }
  std::vector<std::size_t> ranks() const {
    std::vector<std::size_t> r;
    for (const auto& f : modules) r.push_back(f.rank());
    return r;
  }
};

namespace detail {

/// Induced order on F_k: m e_a is compared through m * (lead of the image of e_a),
/// flattened down to F_0, with ties broken by the index path.
struct SchreyerLevel {
  std::vector<Monomial> total;
  std::vector<std::uint32_t> base;
  std::vector<std::vector<std::uint32_t>> path;
  std::vector<int> degrees;
};

class SchreyerOrder {
 public:
  SchreyerOrder(const TermOrder& base, const SchreyerLevel* level) : base_(base), level_(level) {}

  int compare(const Term& a, const Term& b) const {
    if (!level_) return base_.compare(a, b);
    const Term fa{a.mon * level_->total[a.comp], level_->base[a.comp], 0};
    const Term fb{b.mon * level_->total[b.comp], level_->base[b.comp], 0};
    if (int c = base_.compare(fa, fb)) return c;
    const auto& pa = level_->path[a.comp];
    const auto& pb = level_->path[b.comp];
    for (std::size_t i = 0; i < pa.size(); ++i)
      if (pa[i] != pb[i]) return pa[i] < pb[i] ? 1 : -1;
    return 0;
  }

 private:
  const TermOrder& base_;
  const SchreyerLevel* level_;
};

/// Lex comparison used to number frame elements within a lead component.
inline bool lex_greater(const Monomial& a, const Monomial& b) { return compare(a, b, OrderKind::lex) > 0; }

struct Frame {
  /// columns[k] = images of the basis of F_{k+1} in F_k, sorted for the level-k order.
  std::vector<std::vector<TermVec>> columns;
  std::vector<std::vector<int>> shifts;
};

inline Frame schreyer_frame(const FreeModule& f0, const std::vector<TermVec>& gb, std::size_t max_levels) {
  const PrimeField& F = f0.ring()->field();
  const TermOrder base = working(f0).term_order();
  Frame frame;
  frame.shifts.push_back(f0.shifts());

  std::vector<TermVec> current = gb;
  std::deque<SchreyerLevel> levels;  // levels[k-1] describes F_k
  const SchreyerLevel* level = nullptr;
  while (!current.empty()) {
    if (frame.columns.size() >= max_levels) throw Error("free resolution longer than the number of variables");
    SchreyerOrder ord(base, level);
    std::stable_sort(current.begin(), current.end(), [](const TermVec& a, const TermVec& b) {
      if (a.front().comp != b.front().comp) return a.front().comp < b.front().comp;
      return lex_greater(a.front().mon, b.front().mon);
    });

    SchreyerLevel next;
    for (std::uint32_t j = 0; j < current.size(); ++j) {
      const Term& lead = current[j].front();
      if (level) {
        next.total.push_back(lead.mon * level->total[lead.comp]);
        next.base.push_back(level->base[lead.comp]);
        auto p = level->path[lead.comp];
        p.push_back(j);
        next.path.push_back(std::move(p));
      } else {
        next.total.push_back(lead.mon);
        next.base.push_back(lead.comp);
        next.path.push_back({j});
      }
      next.degrees.push_back(base.degree({next.total.back(), next.base.back(), 0}));
    }

    std::size_t ncomp = 0;
    for (const auto& g : current) ncomp = std::max<std::size_t>(ncomp, g.front().comp + 1);
    std::vector<std::vector<std::uint32_t>> by_comp(ncomp);
    for (std::uint32_t j = 0; j < current.size(); ++j) by_comp[current[j].front().comp].push_back(j);

    levels.push_back(std::move(next));
    const SchreyerLevel* up = &levels.back();
    SchreyerOrder up_ord(base, up);
    std::vector<TermVec> syz;
    TermVec scratch;
    for (const auto& group : by_comp) {
      for (std::size_t x = 0; x < group.size(); ++x) {
        const std::uint32_t i = group[x];
        const Monomial& li = current[i].front().mon;
        std::vector<std::pair<Monomial, std::uint32_t>> cands;
        for (std::size_t y = x + 1; y < group.size(); ++y) {
          const std::uint32_t j = group[y];
          cands.push_back({Monomial::lcm(li, current[j].front().mon) / li, j});
        }
        std::stable_sort(cands.begin(), cands.end(),
                         [](const auto& a, const auto& b) { return a.first.degree() < b.first.degree(); });
        std::vector<std::pair<Monomial, std::uint32_t>> kept;
        for (const auto& c : cands) {
          bool redundant = false;
          for (const auto& k : kept)
            if (k.first.divides(c.first)) {
              redundant = true;
              break;
            }
          if (!redundant) kept.push_back(c);
        }
        for (const auto& [mij, j] : kept) {
          const Monomial mji = Monomial::lcm(li, current[j].front().mon) / current[j].front().mon;
          TermVec s;
          add_scaled(mul_term(current[i], 1, mij, F), F.neg(1), mji, current[j], s, ord, F);
          TermVec v{{mij, i, 1}, {mji, j, F.neg(1)}};
          while (!s.empty()) {
            const Term t = s.front();
            long r = -1;
            for (std::uint32_t cand : by_comp[t.comp])
              if (current[cand].front().mon.divides(t.mon)) {
                r = cand;
                break;
              }
            if (r < 0) throw Error("Schreyer frame: S-pair does not reduce to zero");
            const Monomial q = t.mon / current[static_cast<std::size_t>(r)].front().mon;
            add_scaled(s, F.neg(t.coef), q, current[static_cast<std::size_t>(r)], scratch, ord, F);
            std::swap(s, scratch);
            v.push_back({q, static_cast<std::uint32_t>(r), F.neg(t.coef)});
          }
          normalize(v, up_ord, F);
          syz.push_back(std::move(v));
        }
      }
    }

    frame.columns.push_back(std::move(current));
    frame.shifts.push_back(up->degrees);
    current = std::move(syz);
    level = up;
  }
  return frame;
}

/// Cancels unit entries: a column a of d_k with a constant entry in row b splits
/// off the trivial complex e_a -> e_b.
inline void minimize(std::vector<std::vector<TermVec>>& cols, std::vector<std::vector<int>>& shifts, const RingPtr& ring) {
  const PrimeField& F = ring->field();
  const std::size_t L = cols.size();
  std::vector<std::vector<bool>> alive(L + 1);
  for (std::size_t k = 0; k <= L; ++k) alive[k].assign(shifts[k].size(), true);
  for (std::size_t k = 0; k < L; ++k) {
    // cols[k] : F_{k+1} -> F_k
    const TermOrder ord({OrderKind::grevlex, ModuleExtension::term_over_position}, shifts[k]);
    auto& c = cols[k];
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t a = 0; a < c.size(); ++a) {
        if (!alive[k + 1][a]) continue;
        auto unit = std::find_if(c[a].begin(), c[a].end(), [](const Term& t) { return t.mon.is_one(); });
        if (unit == c[a].end()) continue;
        const std::uint32_t b = unit->comp;
        const Coeff inv = F.inv(unit->coef);
        const TermVec pivot = c[a];
        for (std::size_t x = 0; x < c.size(); ++x) {
          if (x == a || !alive[k + 1][x]) continue;
          TermVec coeff;
          for (const auto& t : c[x])
            if (t.comp == b) coeff.push_back({t.mon, 0, F.mul(F.neg(t.coef), inv)});
          if (coeff.empty()) continue;
          c[x] = add(c[x], mul_poly(coeff, pivot, ord, F), ord, F);
        }
        alive[k + 1][a] = false;
        alive[k][b] = false;
        c[a].clear();
        if (k + 1 < L)
          for (auto& col : cols[k + 1])
            col.erase(std::remove_if(col.begin(), col.end(), [&](const Term& t) { return t.comp == a; }), col.end());
        if (k > 0) cols[k - 1][b].clear();
        progress = true;
      }
    }
  }
  // compact
  for (std::size_t k = 0; k <= L; ++k) {
    std::vector<std::uint32_t> index(shifts[k].size(), 0);
    std::vector<int> s;
    for (std::size_t i = 0; i < shifts[k].size(); ++i)
      if (alive[k][i]) {
        index[i] = static_cast<std::uint32_t>(s.size());
        s.push_back(shifts[k][i]);
      }
    if (k < L) {
      const TermOrder ord({OrderKind::grevlex, ModuleExtension::term_over_position}, s);
      std::vector<TermVec> kept;
      for (std::size_t a = 0; a < cols[k].size(); ++a) {
        if (!alive[k + 1][a]) continue;
        TermVec v = cols[k][a];
        for (auto& t : v) t.comp = index[t.comp];
        normalize(v, ord, F);
        kept.push_back(std::move(v));
      }
      cols[k] = std::move(kept);
    }
    shifts[k] = std::move(s);
  }
  while (!cols.empty() && cols.back().empty()) {
    cols.pop_back();
    shifts.pop_back();
  }
}

}  // namespace detail

/// Minimal graded free resolution of M via a Schreyer frame.
inline FreeResolution free_resolution(const PresentedModule& m) {
  const RingPtr ring = m.ring();
  PresentedModule p = prune(m);
  const FreeModule w = detail::working(p.free_module());
  std::vector<TermVec> gb = p.basis().raw();
  auto frame = detail::schreyer_frame(w, gb, ring->nvars() + 2);
  // frame columns are sorted for the Schreyer orders; resort for the standard ones
  for (std::size_t k = 0; k < frame.columns.size(); ++k) {
    const TermOrder ord({OrderKind::grevlex, ModuleExtension::term_over_position}, frame.shifts[k]);
    for (auto& v : frame.columns[k]) detail::normalize(v, ord, ring->field());
  }
  detail::minimize(frame.columns, frame.shifts, ring);
  FreeResolution r;
  for (std::size_t k = 0; k < frame.shifts.size(); ++k) r.modules.push_back(detail::working(FreeModule(ring, frame.shifts[k])));
  r.maps.emplace_back();
  for (std::size_t k = 0; k < frame.columns.size(); ++k) r.maps.push_back(detail::wrap(r.modules[k], frame.columns[k]));
  if (r.length() > ring->nvars()) throw Error("minimal free resolution longer than the number of variables");
  return r;
}

/// Minimal resolution by iterated minimal syzygies; slower, kept as an independent check.
inline FreeResolution free_resolution_by_syzygies(const PresentedModule& m) {
  PresentedModule p = prune(m);
  FreeResolution r;
  r.modules.push_back(p.free_module());
  r.maps.emplace_back();
  std::vector<ModuleElement> cols = p.relations();
  FreeModule target = p.free_module();
  while (!cols.empty()) {
    if (r.length() > m.ring()->nvars()) throw Error("free resolution longer than the number of variables");
    FreeModule src(m.ring(), detail::generator_degrees(cols));
    std::vector<ModuleElement> next = minimal_generators(syzygies(Submodule(target, cols))).generators;
    r.modules.push_back(src);
    r.maps.push_back(std::move(cols));
    cols = std::move(next);
    target = src;
  }
  return r;
}

}  // namespace cmdev
