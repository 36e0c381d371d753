#pragma once

// Homogeneous Buchberger engine for submodules of graded free modules.
//
// Work proceeds degree by degree: all S-pairs of degree d are reduced before
// the input generators of degree d, so an input that still has a nonzero
// remainder is a minimal generator. Pairs are pruned with the Gebauer-Möller
// criteria. When tracking is enabled every basis element carries its
// expression in the inputs, and every S-pair that reduces to zero yields a
// syzygy; together these generate the full syzygy module of the inputs.

#include <algorithm>
#include <climits>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cmdev/limits.hpp"
#include "cmdev/polynomial.hpp"

namespace cmdev::detail {

enum class Tracking {
  none,
  /// Syzygies are expressed in all inputs; inputs reducing to zero contribute one.
  all_inputs,
  /// Redundant inputs are dropped; syzygies are expressed in the kept ones.
  minimal_inputs,
};

struct EngineResult {
  /// Reduced, monic basis sorted by leading term, largest first.
  std::vector<TermVec> basis;
  /// Input indices that were minimal generators, in processing order.
  std::vector<std::size_t> minimal;
  /// Syzygy vectors; component k refers to input k (all_inputs) or minimal[k].
  std::vector<TermVec> syzygies;
  /// Shifts of the syzygy coordinates.
  std::vector<int> syzygy_shifts;
};

class Buchberger {
 public:
  Buchberger(const PrimeField& field, TermOrder order, Tracking tracking, bool single_component)
      : F_(field), ord_(std::move(order)), tracking_(tracking), single_component_(single_component) {}

  EngineResult run(std::vector<TermVec> inputs, std::vector<int> degrees) {
    const std::size_t n = inputs.size();
    rep_ord_ = TermOrder({OrderKind::grevlex, ModuleExtension::term_over_position}, degrees);
    for (auto& v : inputs) normalize(v, ord_, F_);

    std::vector<std::size_t> by_degree(n);
    for (std::size_t i = 0; i < n; ++i) by_degree[i] = i;
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](std::size_t a, std::size_t b) { return degrees[a] < degrees[b]; });

    EngineResult out;
    std::size_t next_input = 0;
    const int cap = limits().degree_cap;
    while (true) {
      int d = INT_MAX;
      for (const auto& p : pairs_) d = std::min(d, p.degree);
      if (next_input < n) d = std::min(d, degrees[by_degree[next_input]]);
      if (d == INT_MAX) break;

      std::vector<Pair> batch;
      std::vector<Pair> rest;
      for (auto& p : pairs_) (p.degree == d ? batch : rest).push_back(p);
      pairs_ = std::move(rest);
      std::sort(batch.begin(), batch.end(),
                [](const Pair& a, const Pair& b) { return a.i != b.i ? a.i < b.i : a.j < b.j; });
      for (const auto& p : batch) {
        if (p.lcm.degree() > cap)
          throw ResourceError("degree cap " + std::to_string(cap) + " exceeded (S-pair of degree " +
                              std::to_string(p.lcm.degree()) + ")");
        Element s = spair(p);
        reduce(s);
        if (s.poly.empty())
          record_syzygy(std::move(s.rep));
        else
          insert(std::move(s));
      }

      while (next_input < n && degrees[by_degree[next_input]] == d) {
        const std::size_t k = by_degree[next_input++];
        Element e;
        e.poly = std::move(inputs[k]);
        e.degree = d;
        if (tracking_ != Tracking::none) e.rep = TermVec{{Monomial{}, static_cast<std::uint32_t>(k), 1}};
        if (!e.poly.empty()) {
          if (e.poly.front().mon.degree() > cap)
            throw ResourceError("degree cap " + std::to_string(cap) + " exceeded (generator of degree " +
                                std::to_string(e.poly.front().mon.degree()) + ")");
          reduce(e);
        }
        if (e.poly.empty()) {
          if (tracking_ == Tracking::all_inputs) record_syzygy(std::move(e.rep));
          continue;
        }
        out.minimal.push_back(k);
        insert(std::move(e));
      }
    }

    out.basis = reduced_basis();
    if (tracking_ == Tracking::minimal_inputs) {
      std::vector<std::size_t> slot(n, 0);
      for (std::size_t pos = 0; pos < out.minimal.size(); ++pos) slot[out.minimal[pos]] = pos;
      for (std::size_t k : out.minimal) out.syzygy_shifts.push_back(degrees[k]);
      TermOrder renumbered({OrderKind::grevlex, ModuleExtension::term_over_position}, out.syzygy_shifts);
      for (auto& s : syzygies_) {
        for (auto& t : s) t.comp = static_cast<std::uint32_t>(slot[t.comp]);
        normalize(s, renumbered, F_);
      }
    } else if (tracking_ == Tracking::all_inputs) {
      out.syzygy_shifts = degrees;
    }
    out.syzygies = std::move(syzygies_);
    return out;
  }

 private:
  struct Element {
    TermVec poly;
    TermVec rep;
    int degree = 0;
  };
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    int degree;
  };

  Element spair(const Pair& p) const {
    const Element& a = basis_[p.i];
    const Element& b = basis_[p.j];
    const Monomial ma = p.lcm / a.poly.front().mon;
    const Monomial mb = p.lcm / b.poly.front().mon;
    Element s;
    s.degree = p.degree;
    TermVec left = mul_term(a.poly, 1, ma, F_);
    add_scaled(left, F_.neg(1), mb, b.poly, s.poly, ord_, F_);
    if (tracking_ != Tracking::none) {
      TermVec lrep = mul_term(a.rep, 1, ma, F_);
      add_scaled(lrep, F_.neg(1), mb, b.rep, s.rep, rep_ord_, F_);
    }
    return s;
  }

  long find_reducer(const Term& t) const {
    if (t.comp >= by_comp_.size()) return -1;
    for (std::size_t idx : by_comp_[t.comp])
      if (basis_[idx].poly.front().mon.divides(t.mon)) return static_cast<long>(idx);
    return -1;
  }

  /// Full reduction; the result is monic when nonzero.
  void reduce(Element& e) {
    TermVec result, scratch, rscratch;
    std::size_t pos = 0;
    const bool track = tracking_ != Tracking::none;
    while (pos < e.poly.size()) {
      const Term t = e.poly[pos];
      const long r = find_reducer(t);
      if (r < 0) {
        result.push_back(t);
        ++pos;
        continue;
      }
      const Element& g = basis_[static_cast<std::size_t>(r)];
      const Coeff c = F_.neg(t.coef);
      const Monomial m = t.mon / g.poly.front().mon;
      add_scaled(e.poly, c, m, g.poly, scratch, ord_, F_, pos);
      std::swap(e.poly, scratch);
      pos = 0;
      if (track) {
        add_scaled(e.rep, c, m, g.rep, rscratch, rep_ord_, F_);
        std::swap(e.rep, rscratch);
      }
    }
    e.poly = std::move(result);
    if (!e.poly.empty() && e.poly.front().coef != 1) {
      const Coeff inv = F_.inv(e.poly.front().coef);
      e.poly = scale(std::move(e.poly), inv, F_);
      if (track) e.rep = scale(std::move(e.rep), inv, F_);
    }
  }

  void record_syzygy(TermVec rep) {
    if (tracking_ == Tracking::none || rep.empty()) return;
    syzygies_.push_back(std::move(rep));
  }

  void record_koszul(std::size_t i, std::size_t j) {
    if (tracking_ == Tracking::none) return;
    // g_j * rep_i - g_i * rep_j; only valid for ring elements (single component)
    TermVec a = mul_poly(strip(basis_[j].poly), basis_[i].rep, rep_ord_, F_);
    TermVec b = mul_poly(strip(basis_[i].poly), basis_[j].rep, rep_ord_, F_);
    record_syzygy(sub(a, b, rep_ord_, F_));
  }

  static TermVec strip(TermVec v) {
    for (auto& t : v) t.comp = 0;
    return v;
  }

  bool product_criterion(std::size_t i, std::size_t j) const {
    return single_component_ &&
           Monomial::coprime(basis_[i].poly.front().mon, basis_[j].poly.front().mon);
  }

  /// Gebauer-Möller update.
  void insert(Element e) {
    const std::size_t t = basis_.size();
    const Term lead = e.poly.front();
    basis_.push_back(std::move(e));
    if (by_comp_.size() <= lead.comp) by_comp_.resize(lead.comp + 1);

    struct Candidate {
      std::size_t i;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Candidate> c;
    for (std::size_t i : by_comp_[lead.comp]) {
      const Monomial& li = basis_[i].poly.front().mon;
      c.push_back({i, Monomial::lcm(li, lead.mon), product_criterion(i, t)});
    }

    std::vector<Candidate> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      bool keep = c[k].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < c.size() && keep; ++l)
          if (c[l].lcm.divides(c[k].lcm)) keep = false;
        for (const auto& x : d)
          if (keep && x.lcm.divides(c[k].lcm)) keep = false;
      }
      if (keep) d.push_back(c[k]);
    }

    std::vector<Pair> kept;
    kept.reserve(pairs_.size());
    for (const auto& p : pairs_) {
      bool drop = false;
      if (basis_[p.i].poly.front().comp == lead.comp && lead.mon.divides(p.lcm)) {
        const Monomial lit = Monomial::lcm(basis_[p.i].poly.front().mon, lead.mon);
        const Monomial ljt = Monomial::lcm(basis_[p.j].poly.front().mon, lead.mon);
        drop = !(lit == p.lcm) && !(ljt == p.lcm);
      }
      if (!drop) kept.push_back(p);
    }
    pairs_ = std::move(kept);

    const int shift = ord_.shift(lead.comp);
    for (const auto& x : d) {
      if (x.coprime) {
        record_koszul(x.i, t);
        continue;
      }
      pairs_.push_back({x.i, t, x.lcm, x.lcm.degree() + shift});
    }
    by_comp_[lead.comp].push_back(t);
  }

  std::vector<TermVec> reduced_basis() const {
    // Homogeneous degree-by-degree insertion already yields a minimal basis.
    std::vector<TermVec> out;
    out.reserve(basis_.size());
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const TermVec& g = basis_[k].poly;
      TermVec tail(g.begin() + 1, g.end()), result, scratch;
      result.push_back(g.front());
      std::size_t pos = 0;
      while (pos < tail.size()) {
        const Term term = tail[pos];
        long r = -1;
        if (term.comp < by_comp_.size())
          for (std::size_t idx : by_comp_[term.comp])
            if (idx != k && basis_[idx].poly.front().mon.divides(term.mon)) {
              r = static_cast<long>(idx);
              break;
            }
        if (r < 0) {
          result.push_back(term);
          ++pos;
          continue;
        }
        const TermVec& h = basis_[static_cast<std::size_t>(r)].poly;
        add_scaled(tail, F_.neg(term.coef), term.mon / h.front().mon, h, scratch, ord_, F_, pos);
        std::swap(tail, scratch);
        pos = 0;
      }
      out.push_back(std::move(result));
    }
    std::sort(out.begin(), out.end(),
              [&](const TermVec& a, const TermVec& b) { return ord_.compare(a.front(), b.front()) > 0; });
    return out;
  }

  const PrimeField& F_;
  TermOrder ord_;
  TermOrder rep_ord_;
  Tracking tracking_;
  bool single_component_;
  std::vector<Element> basis_;
  std::vector<std::vector<std::size_t>> by_comp_;
  std::vector<Pair> pairs_;
  std::vector<TermVec> syzygies_;
};

/// Degree of a homogeneous vector, or `fallback` for zero.
inline int vector_degree(const TermVec& v, const TermOrder& ord, int fallback = 0) {
  return v.empty() ? fallback : ord.degree(v.front());
}

inline EngineResult run_buchberger(const PrimeField& F, const TermOrder& ord, std::vector<TermVec> inputs,
                                   std::vector<int> degrees, Tracking tracking) {
  for (const auto& v : inputs)
    if (!is_homogeneous(v, ord)) throw PreconditionError("Gröbner engine requires homogeneous input");
  bool single = true;
  for (const auto& v : inputs)
    for (const auto& t : v)
      if (t.comp != 0) single = false;
  if (ord.shifts().size() > 1) single = false;
  Buchberger engine(F, ord, tracking, single);
  return engine.run(std::move(inputs), std::move(degrees));
}

}  // namespace cmdev::detail
