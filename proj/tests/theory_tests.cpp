// Parameter searches, deviated sequences, filtrations, degree functions and the
// verification suites, checked on worked examples and across the corpus.

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cmdev/report.hpp"

using namespace cmdev;

namespace {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::filesystem::path> corpus_files() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(CMDEV_CORPUS_DIR))
    if (e.path().extension() == ".json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

PresentedModule corpus_module(const std::string& name) {
  return parse_input(read_file(std::filesystem::path(CMDEV_CORPUS_DIR) / (name + ".json"))).module();
}

Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(s, r); }

LaurentPolynomial poly(int low, std::vector<std::int64_t> coefs) {
  LaurentPolynomial q;
  for (std::size_t i = 0; i < coefs.size(); ++i) q = q + LaurentPolynomial::monomial(low + static_cast<int>(i), coefs[i]);
  return q;
}

}  // namespace

// ---------------------------------------------------------------- parameters

TEST(Parameters, SearchIsDeterministicAndLandsInTheIdeal) {
  const PresentedModule m = corpus_module("example1");
  const Ideal& a = local_cohomology_annihilators(m).product;
  ASSERT_FALSE(is_unit_ideal(a));
  const Polynomial x = find_parameter_element(m, a, 5);
  EXPECT_EQ(x, find_parameter_element(m, a, 5));
  EXPECT_TRUE(contains(a, x));
  EXPECT_EQ(quotient(m, {x}).dim(), m.dim() - 1);
  EXPECT_EQ(x.lead().coef, 1u);

  const Ideal unit(m.ring(), {Polynomial::constant(m.ring(), 1)});
  const Polynomial y = find_parameter_element(m, unit, 0);
  EXPECT_EQ(y.degree(), 1);
  EXPECT_EQ(quotient(m, {y}).dim(), m.dim() - 1);
}

TEST(Parameters, SearchFailsOnFiniteLength) {
  const PresentedModule m = corpus_module("fl");
  const PresentedModule art = quotient(m, {P(m.ring(), "y")});
  ASSERT_EQ(art.dim(), 0);
  const Ideal unit(m.ring(), {Polynomial::constant(m.ring(), 1)});
  EXPECT_THROW(find_parameter_element(art, unit, 0), PreconditionError);
}

TEST(Parameters, CSystemCertificatesOnCorpus) {
  for (const auto& path : corpus_files()) {
    const PresentedModule m = parse_input(read_file(path)).module();
    if (m.dim() < 1) continue;
    SCOPED_TRACE(path.filename().string());
    const CSop c = c_system_of_parameters(m, 0);
    ASSERT_EQ(c.elements.size(), static_cast<std::size_t>(m.dim()));
    EXPECT_TRUE(verify_csop(m, c.elements));
    // a C-system stays one after raising every element to a power
    if (m.dim() <= 3) {
      std::vector<Polynomial> sq;
      for (const auto& x : c.elements) sq.push_back(x.pow(2));
      EXPECT_TRUE(verify_csop(m, sq));
    }
    EXPECT_EQ(quotient(m, c.elements).dim(), 0);
  }
}

// ---------------------------------------------------------------- unmixed part and deviated sequence

TEST(Structure, UnmixedPartOfExample1) {
  const PresentedModule m = corpus_module("example1");
  const SubquotientPiece u = unmixed_piece(m, 0);
  // U_M(0) = (x1)/(x1^2, x1 x2, x1 x3), isomorphic to k[x4](-1)
  EXPECT_EQ(u.module.hilbert().numerator, poly(1, {1, -3, 3, -1}));
  EXPECT_EQ(unmixed_component(m, 0).hilbert().numerator, u.module.hilbert().numerator);
  // M/U_M(0) = S/(x1)
  const PresentedModule top(m.free_module(), u.lift.generators);
  EXPECT_EQ(top.hilbert().numerator, poly(0, {1, -1}));
  EXPECT_TRUE(is_cohen_macaulay(top));
}

TEST(Structure, DeviatedSequenceExamples) {
  const PresentedModule ex1 = corpus_module("example1");
  const auto& s = cm_deviated_sequence(ex1, 0);
  ASSERT_EQ(s.u.size(), 3u);
  EXPECT_TRUE(s.u[0].is_zero());
  EXPECT_EQ(s.u[1].dim(), 1);
  EXPECT_EQ(s.u[1].hilbert().multiplicity, 1);
  // U_{d-1}(M) = U_M(0)
  EXPECT_EQ(s.u[2].hilbert().numerator, poly(1, {1, -3, 3, -1}));

  const PresentedModule fl = corpus_module("fl");
  const auto& f = cm_deviated_sequence(fl, 0);
  ASSERT_EQ(f.u.size(), 1u);
  EXPECT_EQ(f.u[0].dim(), 0);
  EXPECT_EQ(length(f.u[0]), 1);

  for (int k = 1; k <= 10; ++k) {
    char name[16];
    std::snprintf(name, sizeof name, "ci_%02d", k);
    const PresentedModule ci = corpus_module(name);
    for (const auto& u : cm_deviated_sequence(ci, 0).u) EXPECT_TRUE(u.is_zero()) << name;
  }
}

TEST(Structure, DeviatedSequenceIndependentOfSeed) {
  for (const char* name : {"example1", "example2", "gcm", "quartic", "h0_07", "rand_13"}) {
    const PresentedModule m = corpus_module(name);
    const auto& a = cm_deviated_sequence(m, 0);
    for (std::uint64_t seed : {1u, 2u}) {
      const auto& b = cm_deviated_sequence(m, seed);
      ASSERT_EQ(a.u.size(), b.u.size());
      for (std::size_t i = 0; i < a.u.size(); ++i)
        EXPECT_EQ(a.u[i].hilbert().numerator, b.u[i].hilbert().numerator) << name << " U_" << i;
    }
  }
}

TEST(Structure, DimensionFiltration) {
  const PresentedModule ex1 = corpus_module("example1");
  auto f = dimension_filtration(ex1, 0);
  auto dims = f.dims;
  std::sort(dims.begin(), dims.end());
  EXPECT_EQ(dims, (std::vector<int>{1, 3}));
  EXPECT_EQ(adeg_from_filtration(f), adeg(ex1));

  const PresentedModule ci = corpus_module("ci_05");
  EXPECT_EQ(dimension_filtration(ci, 0).dims.size(), 1u);

  // the quotients of the filtration have pure dimension
  for (const char* name : {"example2", "h0_06", "rand_07"}) {
    const PresentedModule m = corpus_module(name);
    const auto g = dimension_filtration(m, 0);
    for (std::size_t i = 0; i < g.members.size(); ++i) {
      const PresentedModule q = filtration_quotient(m, g, i);
      if (q.is_zero()) continue;
      EXPECT_EQ(zeroth_local_cohomology(q).is_zero() || q.dim() == 0, true) << name;
    }
  }
}

TEST(Structure, PolynomialTypeAndClassification) {
  EXPECT_EQ(polynomial_type(corpus_module("ci_03")), -1);
  EXPECT_EQ(polynomial_type(corpus_module("example1")), 1);
  EXPECT_EQ(polynomial_type(corpus_module("gcm")), 0);

  auto c1 = classify(corpus_module("example1"), 0);
  EXPECT_FALSE(c1.is_cm);
  EXPECT_TRUE(c1.is_sequentially_cm);
  EXPECT_FALSE(c1.is_generalized_cm);
  auto c2 = classify(corpus_module("example2"), 0);
  EXPECT_FALSE(c2.is_cm);
  EXPECT_FALSE(c2.is_sequentially_cm);
  EXPECT_FALSE(c2.is_generalized_cm);
  auto g = classify(corpus_module("gcm"), 0);
  EXPECT_FALSE(g.is_cm);
  EXPECT_TRUE(g.is_generalized_cm);
  auto ci = classify(corpus_module("ci_04"), 0);
  EXPECT_TRUE(ci.is_cm && ci.is_sequentially_cm && ci.is_generalized_cm);
}

// ---------------------------------------------------------------- degrees

TEST(Degrees, WorkedExamples) {
  const auto e1 = degree_report(corpus_module("example1"), 0);
  EXPECT_EQ(e1.dim, 3);
  EXPECT_EQ(e1.depth, 1);
  EXPECT_EQ(e1.deg, 1);
  EXPECT_EQ(e1.adeg, 2);
  EXPECT_EQ(e1.adeg_filtration, 2);
  EXPECT_EQ(e1.udeg, 2);
  EXPECT_EQ(e1.hdeg, 3);

  const auto e2 = degree_report(corpus_module("example2"), 0);
  EXPECT_EQ(e2.dim, 4);
  EXPECT_EQ(e2.deg, 2);
  EXPECT_EQ(e2.adeg, 2);
  EXPECT_EQ(e2.udeg, 4);
  EXPECT_EQ(e2.hdeg, 5);

  // S/((x1,x2) cap (x3,x4)): H^1 = k, so hdeg = deg + l(H^1) = 3
  const PresentedModule gcm = corpus_module("gcm");
  EXPECT_EQ(hdeg(gcm), 3);
  EXPECT_EQ(udeg(gcm, 0), 3);
  EXPECT_EQ(local_cohomology_length(gcm, 1), 1);
  EXPECT_EQ(detail::generalized_cm_formula(gcm), std::optional<std::int64_t>(3));

  const PresentedModule s = PresentedModule::free(FreeModule::ring_module(Ring::standard(3)));
  EXPECT_EQ(deg(s), 1);
  EXPECT_EQ(udeg(s, 0), 1);
  EXPECT_EQ(hdeg(s), 1);
}

TEST(Degrees, LengthPolynomialOnExample1) {
  const PresentedModule m = corpus_module("example1");
  const auto& s = cm_deviated_sequence(m, 0);
  std::vector<std::vector<int>> tuples;
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      for (int c = 1; c <= 2; ++c) tuples.push_back({a, b, c});
  const LengthCheck c = length_function_check(m, s, tuples);
  EXPECT_EQ(c.rows.size(), 8u);
  EXPECT_TRUE(c.ok());
  EXPECT_EQ(c.p_type, 1);
}

TEST(Degrees, MultilinearFit) {
  // f = 3 n1 n2 + 2 n1 + 5 on {1,2}^2, index bit i set means n_i = 2
  std::vector<std::int64_t> values;
  for (int b = 0; b < 4; ++b) {
    const int n1 = 1 + (b & 1), n2 = 1 + (b >> 1 & 1);
    values.push_back(3 * n1 * n2 + 2 * n1 + 5);
  }
  EXPECT_EQ(detail::multilinear_fit(values, 2), (std::vector<std::int64_t>{5, 2, 0, 3}));
}

TEST(Degrees, FiniteLengthAdditivity) {
  for (const char* name : {"fl", "h0_01", "h0_06"}) {
    const auto a = finite_length_additivity(corpus_module(name), 0);
    EXPECT_TRUE(a.ok()) << name;
    EXPECT_GT(a.h0_length, 0) << name;
  }
}

TEST(Degrees, BertiniOnExample1) {
  const auto trials = bertini_check(corpus_module("example1"), 10, 0);
  EXPECT_EQ(trials.size(), 10u);
  for (const auto& t : trials) EXPECT_TRUE(t.ok()) << t.x;
}

// ---------------------------------------------------------------- suites and reports

TEST(Suites, InequalitiesHoldOnCorpus) {
  for (const auto& path : corpus_files()) {
    const PresentedModule m = parse_input(read_file(path)).module();
    const SuiteResult r = inequalities_suite(m, 0);
    EXPECT_TRUE(r.passed) << path.filename() << "\n" << r.to_json().dump(2);
  }
}

TEST(Suites, SplittingOnGeneralizedCM) {
  for (const char* name : {"gcm", "gcm6"}) {
    const SuiteResult r = splitting_suite(corpus_module(name), 0);
    EXPECT_TRUE(r.passed) << name;
    EXPECT_GE(r.observations["rows_checked"].get<int>(), 1) << name;
  }
}

TEST(Reports, AnalyzeIsDeterministic) {
  const std::string text = read_file(std::filesystem::path(CMDEV_CORPUS_DIR) / "example2.json");
  const std::string a = analyze_json(parse_input(text).module(), 3).dump();
  const std::string b = analyze_json(parse_input(text).module(), 3).dump();
  EXPECT_EQ(a, b);
  const Json j = Json::parse(a);
  EXPECT_EQ(j["degrees"]["udeg"].get<int>(), 4);
}

TEST(Reports, TextRendering) {
  const Json j{{"a", 1}, {"b", {{"c", true}, {"d", Json::array({1, 2})}}}};
  const std::string t = render_text(j);
  EXPECT_NE(t.find("a: 1"), std::string::npos);
  EXPECT_NE(t.find("b.c: true"), std::string::npos);
}
