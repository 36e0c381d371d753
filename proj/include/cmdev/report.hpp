#pragma once

// Report documents and verification suites shared by the command-line tool and
// the acceptance runner. Every document carries "schema": 1 and is a pure
// function of (input, command, flags, seed); timing is added by the caller.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cmdev/degrees.hpp"
#include "cmdev/io.hpp"

namespace cmdev {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kArtifactVersion = "0.1.0";

inline Json numerator_json(const LaurentPolynomial& q) {
  return Json{{"low", q.low()}, {"coefficients", q.coefficients()}};
}

inline Json hilbert_json(const HilbertData& h) {
  return Json{{"dim", h.krull_dim}, {"multiplicity", h.multiplicity}, {"numerator", numerator_json(h.numerator)}};
}

inline Json ideal_json(const Ideal& i) {
  Json gens = Json::array();
  for (const auto& g : minimal_generators(i).generators) gens.push_back(to_string(g.monic()));
  return gens;
}

inline Json polynomials_json(const std::vector<Polynomial>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

inline Json document_header(const std::string& command, const InputDescription& input, std::uint64_t seed) {
  return Json{{"schema", kSchemaVersion},
              {"artifact", {{"name", "cmdev"}, {"version", kArtifactVersion}}},
              {"command", command},
              {"seed", seed},
              {"input", to_json(input)}};
}

/// analyze: dimension, depth, the degree family, classification and the deviated sequence.
inline Json analyze_json(const PresentedModule& m, std::uint64_t seed) {
  if (m.is_zero()) throw PreconditionError("the module is zero");
  const DegreeReport r = degree_report(m, seed);
  Json deg{{"dim", r.dim},
           {"depth", r.depth},
           {"deg", r.deg},
           {"adeg", r.adeg},
           {"adeg_filtration", r.adeg_filtration},
           {"hdeg", r.hdeg},
           {"udeg", r.udeg},
           {"polynomial_type", r.p_type},
           {"cohen_macaulay", r.flags.is_cm},
           {"sequentially_cohen_macaulay", r.flags.is_sequentially_cm},
           {"generalized_cohen_macaulay", r.flags.is_generalized_cm},
           {"udeg_le_hdeg", r.udeg <= r.hdeg}};
  Json out{{"hilbert", hilbert_json(m.hilbert())}, {"degrees", deg}};
  Json dev = Json::array();
  for (const auto& e : r.deviated)
    dev.push_back({{"i", e.i},
                   {"dim", e.dim},
                   {"multiplicity", e.multiplicity},
                   {"delta", e.delta},
                   {"numerator", numerator_json(e.numerator)}});
  out["deviated_sequence"] = dev;
  if (r.dim >= 1) out["csop"] = polynomials_json(cm_deviated_sequence(m, seed).csop.elements);
  Json filt = Json::array();
  for (std::size_t i = 0; i < r.filtration_dims.size(); ++i)
    filt.push_back({{"dim", r.filtration_dims[i]}, {"degree", r.filtration_degrees[i]}});
  out["filtration"] = filt;
  Json lc = Json::array();
  for (int i = 0; i < r.dim; ++i) {
    const PresentedModule& e = ext_module(m, static_cast<std::size_t>(m.nvars() - i));
    if (e.is_zero()) continue;
    lc.push_back({{"i", i},
                  {"ext_index", m.nvars() - i},
                  {"dim", e.dim()},
                  {"length", e.dim() <= 0 ? Json(length(e)) : Json(nullptr)},
                  {"annihilator", ideal_json(local_cohomology_annihilators(m).a[static_cast<std::size_t>(i)])}});
  }
  out["local_cohomology"] = lc;
  return out;
}

/// hilbert: Hilbert series and the reduced Gröbner basis in the ring's order.
inline Json hilbert_command_json(const PresentedModule& m) {
  const MonomialOrder order{m.ring()->order(), ModuleExtension::position_over_term};
  const GroebnerBasis gb = groebner_basis(m.relation_module(), order);
  Json basis = Json::array();
  for (const auto& g : gb.elements()) {
    Json row = Json::array();
    std::vector<TermVec> entries(m.rank());
    for (const auto& t : g.terms()) entries[t.comp].push_back({t.mon, 0, t.coef});
    for (auto& e : entries) row.push_back(to_string(Polynomial(m.ring(), std::move(e))));
    basis.push_back(row);
  }
  const HilbertData& h = m.hilbert();
  Json out = hilbert_json(h);
  Json values = Json::array();
  int lo = std::min(0, h.numerator.low());
  for (int k = lo; k < lo + 10; ++k) values.push_back(h.hilbert_function(k));
  out["hilbert_function"] = {{"from", lo}, {"values", values}};
  out["order"] = to_string(m.ring()->order());
  out["groebner_basis"] = basis;
  return out;
}

/// filtration: the dimension filtration with the quotients D_i/D_{i-1}.
inline Json filtration_json(const PresentedModule& m, std::uint64_t seed) {
  const DimensionFiltration f = dimension_filtration(m, seed);
  Json members = Json::array();
  for (std::size_t i = 0; i < f.members.size(); ++i) {
    const PresentedModule q = filtration_quotient(m, f, i);
    members.push_back({{"dim", f.dims[i]},
                       {"degree", deg(f.members[i].module)},
                       {"numerator", numerator_json(f.members[i].module.hilbert().numerator)},
                       {"quotient_cohen_macaulay", is_cohen_macaulay(q)}});
  }
  return Json{{"members", members}, {"adeg", adeg_from_filtration(f)}};
}

/// csop: a C-system of parameters with its certificates.
inline Json csop_json(const PresentedModule& m, std::uint64_t seed) {
  const CSop& c = cm_deviated_sequence(m, seed).csop;
  Json rows = Json::array();
  for (std::size_t i = 0; i < c.elements.size(); ++i)
    rows.push_back({{"i", i + 1},
                    {"x", to_string(c.elements[i])},
                    {"degree", c.elements[i].degree()},
                    {"certificate", ideal_json(c.certificates[i])},
                    {"dim_after", c.tails[i].dim()}});
  return Json{{"elements", rows}, {"verified", verify_csop(m, c.elements)}};
}

/// Outcome of a verification suite; `passed` is false iff an asserted check failed.
struct SuiteResult {
  std::string suite;
  bool passed = true;
  Json checks = Json::array();
  Json observations = Json::object();

  void check(const std::string& name, bool ok, Json detail = Json::object()) {
    Json c{{"name", name}, {"passed", ok}};
    if (!detail.empty()) c["detail"] = std::move(detail);
    checks.push_back(std::move(c));
    passed = passed && ok;
  }
  Json to_json() const {
    return Json{{"suite", suite}, {"passed", passed}, {"checks", checks}, {"observations", observations}};
  }
};

namespace detail {

/// deg + sum_j binom(d-1, j) l(H^j) when every H^j, j < d, has finite length.
inline std::optional<std::int64_t> generalized_cm_formula(const PresentedModule& m) {
  const int d = m.dim();
  std::int64_t total = deg(m);
  for (int j = 0; j < d; ++j) {
    const std::int64_t l = local_cohomology_length(m, j);
    if (l < 0) return std::nullopt;
    total += HilbertData::binomial(d - 1, j) * l;
  }
  return total;
}

/// Coefficients c_S of the multilinear polynomial through the values on {1,2}^d.
inline std::vector<std::int64_t> multilinear_fit(const std::vector<std::int64_t>& values, std::size_t d) {
  // values indexed by bitmask b, n_i = 1 + b_i; first the b-basis, then the n-basis
  const std::size_t N = std::size_t{1} << d;
  std::vector<std::int64_t> a = values;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t s = 0; s < N; ++s)
      if (s >> i & 1u) a[s] -= a[s ^ (std::size_t{1} << i)];
  // f = sum_T a_T prod_{i in T} (n_i - 1)
  std::vector<std::int64_t> c = a;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t s = 0; s < N; ++s)
      if (!(s >> i & 1u)) c[s] -= c[s | (std::size_t{1} << i)];
  return c;
}

inline Json deviated_numerators(const DeviatedSequence& s) {
  Json out = Json::array();
  for (const auto& u : s.u) out.push_back(numerator_json(u.hilbert().numerator));
  return out;
}

}  // namespace detail

/// Degree inequalities, equivalences and the homological consistency checks.
inline SuiteResult inequalities_suite(const PresentedModule& m, std::uint64_t seed) {
  SuiteResult s{"inequalities"};
  const DegreeReport r = degree_report(m, seed);
  const int n = m.nvars();
  s.check("deg <= adeg <= udeg", r.deg <= r.adeg && r.adeg <= r.udeg,
          {{"deg", r.deg}, {"adeg", r.adeg}, {"udeg", r.udeg}});
  s.check("adeg (double Ext) = adeg (filtration)", r.adeg == r.adeg_filtration,
          {{"ext", r.adeg}, {"filtration", r.adeg_filtration}});
  s.check("deg = udeg iff Cohen-Macaulay", (r.deg == r.udeg) == r.flags.is_cm,
          {{"deg", r.deg}, {"udeg", r.udeg}, {"cm", r.flags.is_cm}});
  s.check("adeg = udeg iff sequentially Cohen-Macaulay", (r.adeg == r.udeg) == r.flags.is_sequentially_cm,
          {{"adeg", r.adeg}, {"udeg", r.udeg}, {"seq_cm", r.flags.is_sequentially_cm}});
  s.check("hdeg = deg iff Cohen-Macaulay", (r.hdeg == r.deg) == r.flags.is_cm, {{"hdeg", r.hdeg}});
  s.check("depth <= dim", r.depth <= r.dim, {{"depth", r.depth}, {"dim", r.dim}});
  s.check("Cohen-Macaulay implies the other two flags",
          !r.flags.is_cm || (r.flags.is_sequentially_cm && r.flags.is_generalized_cm));

  bool all_zero = true;
  for (const auto& e : r.deviated) all_zero = all_zero && e.dim < 0;
  s.check("Cohen-Macaulay iff every U_i = 0", all_zero == r.flags.is_cm);
  bool bounded = true;
  for (const auto& e : r.deviated) bounded = bounded && e.dim <= e.i;
  s.check("dim U_i <= i", bounded);

  Json ann = Json::array();
  bool ann_ok = true;
  const auto& ladder = local_cohomology_annihilators(m);
  for (std::size_t i = 0; i < ladder.a.size(); ++i) {
    const int da = dimension(ladder.a[i]);
    ann.push_back(da);
    ann_ok = ann_ok && da <= static_cast<int>(i);
  }
  s.check("dim S/a_i <= i", ann_ok, {{"dims", ann}});

  // computed from the resolution itself, bypassing the vanishing shortcut
  bool vanish = true;
  const FreeResolution& res = resolution(m);
  for (int i = 0; i < n - r.dim; ++i) vanish = vanish && ext_from_resolution(res, m.ring(), i).is_zero();
  s.check("Ext^i(M,S) = 0 for i < n - dim M", vanish);

  if (r.flags.is_generalized_cm && r.dim >= 1) {
    const auto f = detail::generalized_cm_formula(m);
    s.check("generalized CM: udeg = hdeg = deg + sum binom(d-1,j) l(H^j)",
            f && r.udeg == *f && r.hdeg == *f, {{"formula", f ? Json(*f) : Json(nullptr)}, {"hdeg", r.hdeg}});
  }
  if (r.dim >= 1) {
    const SubquotientPiece u = unmixed_piece(m, detail::derive_seed(seed, 7000));
    s.check("dim U_M(0) < dim M", u.module.dim() < r.dim, {{"dim_u", u.module.dim()}});
    const PresentedModule bar(m.free_module(), u.lift.generators);
    s.check("M/U_M(0) is unmixed", unmixed_component(bar, detail::derive_seed(seed, 7001)).is_zero());
    const PresentedModule h0 = zeroth_local_cohomology(m);
    bool contained = true;
    if (!h0.is_zero())
      for (int k = h0.hilbert().numerator.low(); k <= h0.hilbert().numerator.high() + m.nvars(); ++k)
        contained = contained && h0.hilbert().hilbert_function(k) <= u.module.hilbert().hilbert_function(k);
    s.check("HS(H^0) <= HS(U_M(0)) coefficientwise", contained);
    if (r.dim == 1) s.check("d = 1: udeg = adeg", r.udeg == r.adeg);
    if (r.dim == 2) {
      const std::int64_t l = local_cohomology_length(bar, 1);
      if (l >= 0) s.check("d = 2: udeg = adeg + l(H^1(M/U_M(0)))", r.udeg == r.adeg + l, {{"length", l}});
    }
  }
  s.observations["udeg"] = r.udeg;
  s.observations["hdeg"] = r.hdeg;
  s.observations["udeg_le_hdeg"] = r.udeg <= r.hdeg;
  return s;
}

/// Hilbert series of every U_i agree across `trials` consecutive seeds.
inline SuiteResult invariance_suite(const PresentedModule& m, std::uint64_t seed, int trials) {
  SuiteResult s{"invariance"};
  if (trials < 2) throw PreconditionError("invariance needs at least two seeds");
  if (m.dim() < 1) throw PreconditionError("invariance needs dim M >= 1");
  Json runs = Json::array();
  std::optional<Json> first;
  std::optional<std::int64_t> first_udeg;
  bool same = true, same_udeg = true;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t sd = seed + static_cast<std::uint64_t>(t);
    const auto& dev = cm_deviated_sequence(m, sd);
    Json nums = detail::deviated_numerators(dev);
    const std::int64_t u = udeg(m, sd);
    runs.push_back({{"seed", sd}, {"csop", polynomials_json(dev.csop.elements)}, {"u_numerators", nums}, {"udeg", u}});
    if (!first) {
      first = nums;
      first_udeg = u;
    } else {
      same = same && nums == *first;
      same_udeg = same_udeg && u == *first_udeg;
    }
  }
  s.check("Hilbert series of U_i independent of the C-system", same, {{"runs", runs}});
  s.check("udeg independent of the seed", same_udeg);
  return s;
}

/// Length-polynomial identity on {1,2}^d with the polynomial-fit oracle.
inline SuiteResult length_poly_suite(const PresentedModule& m, std::uint64_t seed) {
  SuiteResult s{"length-poly"};
  const int d = m.dim();
  if (d < 1) throw PreconditionError("length polynomial needs dim M >= 1");
  if (d > 4) throw PreconditionError("length polynomial suite is limited to dim M <= 4");
  const auto& dev = cm_deviated_sequence(m, seed);
  const auto& xs = dev.csop.elements;
  s.check("C-system certificates", verify_csop(m, xs), {{"csop", polynomials_json(xs)}});

  std::vector<std::vector<int>> tuples;
  const std::size_t N = std::size_t{1} << d;
  for (std::size_t b = 0; b < N; ++b) {
    std::vector<int> t;
    for (int i = 0; i < d; ++i) t.push_back(1 + static_cast<int>(b >> i & 1u));
    tuples.push_back(t);
  }
  const LengthCheck c = length_function_check(m, dev, tuples);
  Json rows = Json::array();
  std::vector<std::int64_t> lhs;
  for (const auto& row : c.rows) {
    rows.push_back({{"n", row.n}, {"length", row.lhs}, {"predicted", row.rhs}});
    lhs.push_back(row.lhs);
  }
  s.check("l(M/(x^n)M) = n1..nd e(x;M) + sum n1..ni e(x1..xi;U_i)", c.ok(),
          {{"e_m", c.e_m}, {"e_u", c.e_u}, {"p_type", c.p_type}, {"rows", rows}});

  // fitted coefficients: prefix sets carry e_u, the full set carries e(x;M), the rest vanish
  const auto coef = detail::multilinear_fit(lhs, static_cast<std::size_t>(d));
  bool fit = true;
  for (std::size_t S = 0; S < N; ++S) {
    std::int64_t expect = 0;
    if (S == N - 1) expect = c.e_m;
    if (S + 1 < N && (S & (S + 1)) == 0) expect += c.e_u[static_cast<std::size_t>(std::popcount(S))];
    fit = fit && coef[S] == expect;
  }
  s.check("polynomial fit recovers e(x;M) and e(x1..xi;U_i)", fit, {{"coefficients", coef}});

  bool beyond = true;
  for (int i = c.p_type + 1; i < d; ++i) {
    const PresentedModule& u = dev.u[static_cast<std::size_t>(i)];
    if (u.is_zero()) continue;
    std::vector<Polynomial> head(xs.begin(), xs.begin() + i);
    beyond = beyond && (i == 0 ? length(u) == 0 : serre_multiplicity(head, u) == 0);
  }
  s.check("e(x1..xi;U_i) = 0 for i > p(M)", beyond);

  bool powers = true, multiplicative = true;
  for (std::size_t b = 0; b < N; ++b) {
    std::vector<Polynomial> ps;
    std::int64_t prod = 1;
    for (int i = 0; i < d; ++i) {
      const int k = 1 + static_cast<int>(b >> i & 1u);
      ps.push_back(xs[static_cast<std::size_t>(i)].pow(static_cast<unsigned>(k)));
      prod *= k;
    }
    if (b != 0 && d <= 3) powers = powers && verify_csop(m, ps);
    multiplicative = multiplicative && serre_multiplicity(ps, m) == prod * c.e_m;
  }
  if (d <= 3) s.check("powers of a C-system are C-systems", powers);
  s.check("e(x^n;M) = n1..nd e(x;M)", multiplicative);
  return s;
}

/// l(H^i(M/xM)) = l(H^i(M)) + l(H^{i+1}(M/U_M(0))) for the last C-parameter x.
inline SuiteResult splitting_suite(const PresentedModule& m, std::uint64_t seed) {
  SuiteResult s{"splitting"};
  const int d = m.dim();
  if (d < 1) throw PreconditionError("splitting needs dim M >= 1");
  const auto& dev = cm_deviated_sequence(m, seed);
  const Polynomial& x = dev.csop.elements.back();
  const Submodule lift = colon(m.relation_module(), x);
  const auto rows = splitting_check(m, x, lift);
  Json jr = Json::array();
  bool ok = true;
  for (const auto& r : rows) {
    jr.push_back({{"i", r.i}, {"quotient", r.quotient}, {"module", r.module}, {"unmixed_quotient", r.unmixed_quotient}});
    ok = ok && r.ok();
  }
  s.check("splitting lengths", ok, {{"x", to_string(x)}, {"rows", jr}});
  s.observations["rows_checked"] = rows.size();
  return s;
}

inline SuiteResult bertini_suite(const PresentedModule& m, std::uint64_t seed, int trials) {
  SuiteResult s{"bertini"};
  const auto out = bertini_check(m, trials, seed);
  Json jt = Json::array();
  bool ok = true;
  for (const auto& t : out) {
    jt.push_back({{"x", t.x}, {"udeg", t.udeg_m}, {"udeg_quotient", t.udeg_quotient}});
    ok = ok && t.ok();
  }
  s.check("udeg(M/xM) <= udeg(M)", ok, {{"trials", jt}});
  return s;
}

/// Extended-degree axioms for udeg, with hdeg alongside.
inline SuiteResult axioms_suite(const PresentedModule& m, std::uint64_t seed) {
  SuiteResult s{"axioms"};
  const PresentedModule h0 = zeroth_local_cohomology(m);
  const AdditivityCheck a = finite_length_additivity(m, seed);
  s.check("udeg(M) = udeg(M/H^0) + l(H^0)", a.ok(),
          {{"udeg", a.udeg_m}, {"udeg_quotient", a.udeg_quotient}, {"h0_length", a.h0_length}});
  const PresentedModule bar(m.free_module(), saturation(m.relation_module()).generators);
  const std::int64_t hm = hdeg(m), hq = bar.is_zero() ? 0 : hdeg(bar);
  s.check("hdeg(M) = hdeg(M/H^0) + l(H^0)", hm == hq + a.h0_length, {{"hdeg", hm}, {"hdeg_quotient", hq}});
  if (is_cohen_macaulay(m)) s.check("Cohen-Macaulay: udeg = hdeg = deg", a.udeg_m == deg(m) && hm == deg(m));
  s.check("udeg >= deg", a.udeg_m >= deg(m));
  if (m.dim() >= 1) {
    const auto t = bertini_check(m, 1, seed).front();
    s.check("udeg(M/xM) <= udeg(M) for a generic linear form", t.ok(),
            {{"x", t.x}, {"udeg_quotient", t.udeg_quotient}});
  }
  s.observations["udeg_le_hdeg"] = a.udeg_m <= hm;
  return s;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"inequalities", "invariance", "length-poly",
                                              "splitting",    "bertini",    "axioms"};
  return names;
}

inline SuiteResult run_suite(const std::string& name, const PresentedModule& m, std::uint64_t seed, int trials) {
  if (m.is_zero()) throw PreconditionError("the module is zero");
  if (name == "inequalities") return inequalities_suite(m, seed);
  if (name == "invariance") return invariance_suite(m, seed, trials);
  if (name == "length-poly") return length_poly_suite(m, seed);
  if (name == "splitting") return splitting_suite(m, seed);
  if (name == "bertini") return bertini_suite(m, seed, trials);
  if (name == "axioms") return axioms_suite(m, seed);
  throw PreconditionError("unknown suite '" + name + "'");
}

/// Flattens a document to `path: value` lines.
inline void render_text(const Json& j, const std::string& path, std::string& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_text(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out += path + ": " + j.dump() + "\n";
  }
}

inline std::string render_text(const Json& j) {
  std::string out;
  render_text(j, "", out);
  return out;
}

}  // namespace cmdev
