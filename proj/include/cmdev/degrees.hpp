#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cmdev/structure.hpp"
#include "cmdev/text.hpp"

namespace cmdev {

/// Multiplicity; length in dimension 0; 0 for the zero module.
inline std::int64_t deg(const PresentedModule& m) { return m.hilbert().multiplicity; }

/// Arithmetic degree via double Ext: sum_i deg Ext^i(Ext^i(M,S),S).
inline std::int64_t adeg(const PresentedModule& m) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i <= m.ring()->nvars(); ++i) {
    const PresentedModule& e = ext_module(m, i);
    if (e.is_zero()) continue;
    total += deg(ext_module(e, i));
  }
  return total;
}

/// Arithmetic degree as the sum of the degrees of the dimension filtration members.
inline std::int64_t adeg_from_filtration(const DimensionFiltration& f) {
  std::int64_t total = 0;
  for (const auto& p : f.members) total += deg(p.module);
  return total;
}

/// Homological degree, recursive on dimension.
inline std::int64_t hdeg(const PresentedModule& m) {
  if (m.is_zero()) return 0;
  const int d = m.dim();
  if (d <= 0) return length(m);
  const int n = m.nvars();
  std::int64_t total = deg(m);
  for (int i = n - d + 1; i <= n; ++i) {
    const PresentedModule& e = ext_module(m, static_cast<std::size_t>(i));
    if (e.is_zero()) continue;
    total += HilbertData::binomial(d - 1, i - n + d - 1) * hdeg(e);
  }
  return total;
}

/// Unmixed degree: deg + sum over i with dim U_i(M) = i of deg U_i(M).
inline std::int64_t udeg(const PresentedModule& m, std::uint64_t seed) {
  if (m.is_zero()) return 0;
  if (m.dim() <= 0) return length(m);
  std::int64_t total = deg(m);
  const auto& s = cm_deviated_sequence(m, seed);
  for (std::size_t i = 0; i < s.u.size(); ++i)
    if (s.u[i].dim() == static_cast<int>(i)) total += deg(s.u[i]);
  return total;
}

inline std::int64_t serre_multiplicity(const std::vector<Polynomial>& xs, const PresentedModule& m) {
  return koszul_euler_characteristic(xs, m);
}

struct DeviatedEntry {
  int i = 0;
  int dim = -1;
  std::int64_t multiplicity = 0;
  bool delta = false;
  LaurentPolynomial numerator;
};

struct DegreeReport {
  int dim = -1;
  int depth = 0;
  std::int64_t deg = 0, adeg = 0, adeg_filtration = 0, hdeg = 0, udeg = 0;
  int p_type = -1;
  Classification flags;
  std::vector<DeviatedEntry> deviated;
  std::vector<int> filtration_dims;
  std::vector<std::int64_t> filtration_degrees;
};

inline std::vector<DeviatedEntry> deviated_summary(const DeviatedSequence& s) {
  std::vector<DeviatedEntry> out;
  for (std::size_t i = 0; i < s.u.size(); ++i) {
    const auto& h = s.u[i].hilbert();
    out.push_back({static_cast<int>(i), h.krull_dim, h.multiplicity, h.krull_dim == static_cast<int>(i), h.numerator});
  }
  return out;
}

inline DegreeReport degree_report(const PresentedModule& m, std::uint64_t seed) {
  if (m.is_zero()) throw PreconditionError("degree report of the zero module");
  DegreeReport r;
  r.dim = m.dim();
  r.depth = depth(m);
  r.deg = deg(m);
  r.adeg = adeg(m);
  r.hdeg = hdeg(m);
  r.udeg = udeg(m, seed);
  r.p_type = polynomial_type(m);
  const DimensionFiltration f = dimension_filtration(m, seed);
  r.adeg_filtration = adeg_from_filtration(f);
  r.flags.is_cm = is_cohen_macaulay(m);
  r.flags.is_generalized_cm = is_generalized_cohen_macaulay(m);
  r.flags.is_sequentially_cm = is_sequentially_cohen_macaulay(m, f);
  r.filtration_dims = f.dims;
  for (const auto& p : f.members) r.filtration_degrees.push_back(deg(p.module));
  if (r.dim >= 1) r.deviated = deviated_summary(cm_deviated_sequence(m, seed));
  return r;
}

/// One evaluation of the length-polynomial identity.
struct LengthRow {
  std::vector<int> n;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool ok() const { return lhs == rhs; }
};

struct LengthCheck {
  std::int64_t e_m = 0;
  /// e(x_1..x_i; U_i(M)) for i = 0..d-1.
  std::vector<std::int64_t> e_u;
  int p_type = -1;
  std::vector<LengthRow> rows;
  bool ok() const {
    for (const auto& r : rows)
      if (!r.ok()) return false;
    return true;
  }
};

/// l(M/(x^n)M) = n_1..n_d e(x;M) + sum_{i<=p(M)} n_1..n_i e(x_1..x_i; U_i(M)).
inline LengthCheck length_function_check(const PresentedModule& m, const DeviatedSequence& s,
                                         const std::vector<std::vector<int>>& tuples) {
  const auto& xs = s.csop.elements;
  const std::size_t d = xs.size();
  LengthCheck c;
  c.e_m = serre_multiplicity(xs, m);
  c.p_type = polynomial_type(m);
  for (std::size_t i = 0; i < d; ++i) {
    if (s.u[i].is_zero() || static_cast<int>(i) > c.p_type) {
      c.e_u.push_back(0);
      continue;
    }
    std::vector<Polynomial> head(xs.begin(), xs.begin() + static_cast<long>(i));
    c.e_u.push_back(i == 0 ? length(s.u[i]) : serre_multiplicity(head, s.u[i]));
  }
  for (const auto& n : tuples) {
    if (n.size() != d) throw PreconditionError("length tuple of wrong size");
    std::vector<Polynomial> powers;
    for (std::size_t i = 0; i < d; ++i) powers.push_back(xs[i].pow(static_cast<unsigned>(n[i])));
    LengthRow row;
    row.n = n;
    row.lhs = length(quotient(m, powers));
    std::int64_t prod = 1;
    for (std::size_t i = 0; i < d; ++i) {
      row.rhs += prod * c.e_u[i];
      prod *= n[i];
    }
    row.rhs += prod * c.e_m;
    c.rows.push_back(std::move(row));
  }
  return c;
}

struct BertiniTrial {
  std::string x;
  std::int64_t udeg_m = 0;
  std::int64_t udeg_quotient = 0;
  bool ok() const { return udeg_quotient <= udeg_m; }
};

/// udeg(M/xM) <= udeg(M) for random linear forms x that are parameters on M and on every U_i(M).
inline std::vector<BertiniTrial> bertini_check(const PresentedModule& m, int trials, std::uint64_t seed) {
  if (m.dim() < 1) throw PreconditionError("Bertini check needs dim M >= 1");
  if (trials < 1) throw PreconditionError("Bertini check needs at least one trial");
  const std::int64_t base = udeg(m, seed);
  const auto& s = cm_deviated_sequence(m, seed);
  std::vector<BertiniTrial> out;
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng(detail::derive_seed(seed, 5000 + static_cast<std::uint64_t>(t)));
    std::optional<Polynomial> x;
    for (int attempt = 0; attempt < kParameterBudget && !x; ++attempt) {
      Polynomial cand = detail::random_linear_form(m.ring(), rng);
      bool good = detail::drops_dimension(m, cand);
      for (const auto& u : s.u)
        if (good && u.dim() > 0) good = detail::drops_dimension(u, cand);
      if (good) x = cand;
    }
    if (!x) throw SearchFailure("no generic linear form found for the Bertini check", seed);
    BertiniTrial tr;
    tr.x = to_string(*x);
    tr.udeg_m = base;
    tr.udeg_quotient = udeg(quotient(m, {*x}), detail::derive_seed(seed, 6000 + static_cast<std::uint64_t>(t)));
    out.push_back(std::move(tr));
  }
  return out;
}

/// Length of H^i_m(M) read from Ext^{n-i}(M,S); -1 when not finite.
inline std::int64_t local_cohomology_length(const PresentedModule& m, int i) {
  const int n = m.nvars();
  if (i < 0 || i > n) return 0;
  const PresentedModule& e = ext_module(m, static_cast<std::size_t>(n - i));
  if (e.is_zero()) return 0;
  return e.dim() <= 0 ? length(e) : -1;
}

struct SplittingRow {
  int i = 0;
  std::int64_t quotient = 0, module = 0, unmixed_quotient = 0;
  bool ok() const { return quotient == module + unmixed_quotient; }
};

/// l(H^i(M/xM)) = l(H^i(M)) + l(H^{i+1}(M/U_M(0))) for i < d-1 where all lengths are finite.
inline std::vector<SplittingRow> splitting_check(const PresentedModule& m, const Polynomial& x,
                                                 const Submodule& unmixed_lift) {
  const int d = m.dim();
  const PresentedModule mx = quotient(m, {x});
  const PresentedModule bar(m.free_module(), unmixed_lift.generators);
  std::vector<SplittingRow> out;
  for (int i = 0; i < d - 1; ++i) {
    SplittingRow r;
    r.i = i;
    r.quotient = local_cohomology_length(mx, i);
    r.module = local_cohomology_length(m, i);
    r.unmixed_quotient = local_cohomology_length(bar, i + 1);
    if (r.quotient < 0 || r.module < 0 || r.unmixed_quotient < 0) continue;
    out.push_back(r);
  }
  return out;
}

struct AdditivityCheck {
  std::int64_t udeg_m = 0, udeg_quotient = 0, h0_length = 0;
  bool ok() const { return udeg_m == udeg_quotient + h0_length; }
};

/// udeg(M) = udeg(M/H^0_m(M)) + l(H^0_m(M)).
inline AdditivityCheck finite_length_additivity(const PresentedModule& m, std::uint64_t seed) {
  AdditivityCheck c;
  const Submodule sat = saturation(m.relation_module());
  const PresentedModule h0 = subquotient(m.free_module(), sat.generators, m.relations());
  c.h0_length = length(h0);
  c.udeg_m = udeg(m, seed);
  c.udeg_quotient = udeg(PresentedModule(m.free_module(), sat.generators), seed);
  return c;
}

}  // namespace cmdev
