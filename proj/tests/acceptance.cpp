// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "cmdev/report.hpp"
#include "oracles.hpp"

using namespace cmdev;

namespace {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Entry {
  std::string name;
  PresentedModule module;
};

std::vector<Entry> load_corpus() {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(CMDEV_CORPUS_DIR))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<Entry> out;
  for (const auto& f : files) out.push_back({f.stem().string(), parse_input(read_file(f)).module()});
  return out;
}

const PresentedModule& find(const std::vector<Entry>& c, const std::string& name) {
  for (const auto& e : c)
    if (e.name == name) return e.module;
  throw InputError(name, "missing corpus entry");
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

/// Collects the first few failure messages of a criterion.
struct Log {
  std::vector<std::string> notes;
  bool ok = true;
  void fail(const std::string& msg) {
    ok = false;
    if (notes.size() < 5) notes.push_back(msg);
  }
  void expect(bool cond, const std::string& msg) {
    if (!cond) fail(msg);
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_seconds, const std::function<void(Log&)>& body) {
  Log log;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(log);
  } catch (const std::exception& e) {
    log.fail(std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_seconds > 0 && s > budget_seconds) log.fail("over the time budget of " + std::to_string(budget_seconds) + " s");
  char line[256];
  std::snprintf(line, sizeof line, "%s %2d  %-58s %8.2f s", log.ok ? "PASS" : "FAIL", id, title.c_str(), s);
  std::cout << line << "\n";
  for (const auto& n : log.notes) std::cout << "        " << n << "\n";
  std::cout.flush();
  if (!log.ok) ++failures;
}

std::string degrees_line(const DegreeReport& r) {
  return "dim " + std::to_string(r.dim) + " deg " + std::to_string(r.deg) + " adeg " + std::to_string(r.adeg) +
         " udeg " + std::to_string(r.udeg) + " hdeg " + std::to_string(r.hdeg);
}

Ideal random_ideal(const RingPtr& r, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 4), degree(1, 3), terms(1, 3);
  std::vector<Polynomial> g;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) g.push_back(oracle::random_form(r, rng, degree(rng), terms(rng)));
  return Ideal(r, g);
}

}  // namespace

int main() {
  const std::vector<Entry> corpus = load_corpus();

  criterion(1, "example1: dim 3, deg 1, adeg 2, udeg 2, hdeg 3, seqCM", 10, [&](Log& log) {
    const auto r = degree_report(find(corpus, "example1"), 0);
    log.expect(r.dim == 3 && r.deg == 1 && r.adeg == 2 && r.udeg == 2 && r.hdeg == 3, degrees_line(r));
    log.expect(r.adeg_filtration == 2, "adeg via filtration " + std::to_string(r.adeg_filtration));
    log.expect(r.flags.is_sequentially_cm, "not sequentially Cohen-Macaulay");
  });

  criterion(2, "example2: dim 4, deg 2, adeg 2, udeg 4, hdeg 5", 60, [&](Log& log) {
    const auto r = degree_report(find(corpus, "example2"), 0);
    log.expect(r.dim == 4 && r.deg == 2 && r.adeg == 2 && r.udeg == 4 && r.hdeg == 5, degrees_line(r));
  });

  criterion(3, "complete intersections: all degrees agree, U_i = 0", 0, [&](Log& log) {
    int seen = 0;
    for (const auto& e : corpus) {
      if (!starts_with(e.name, "ci_")) continue;
      ++seen;
      const auto r = degree_report(e.module, 0);
      log.expect(r.deg == r.adeg && r.adeg == r.udeg && r.udeg == r.hdeg, e.name + ": " + degrees_line(r));
      for (const auto& u : r.deviated) log.expect(u.dim < 0, e.name + ": U_" + std::to_string(u.i) + " nonzero");
    }
    log.expect(seen == 10, "expected 10 complete intersections, found " + std::to_string(seen));
  });

  criterion(4, "random quotients: deg <= adeg <= udeg, adeg Ext = filtration", 600, [&](Log& log) {
    int seen = 0;
    for (const auto& e : corpus) {
      if (!starts_with(e.name, "rand_")) continue;
      ++seen;
      const auto r = degree_report(e.module, 0);
      log.expect(r.deg <= r.adeg && r.adeg <= r.udeg, e.name + ": " + degrees_line(r));
      log.expect(r.adeg == r.adeg_filtration, e.name + ": adeg " + std::to_string(r.adeg) + " vs filtration " +
                                                  std::to_string(r.adeg_filtration));
    }
    log.expect(seen == 50, "expected 50 random quotients, found " + std::to_string(seen));
  });

  criterion(5, "deviated sequence and udeg invariant across 3 seeds", 0, [&](Log& log) {
    int seen = 0;
    for (const auto& e : corpus) {
      if (e.module.dim() < 1 || is_cohen_macaulay(e.module)) continue;
      ++seen;
      const SuiteResult s = invariance_suite(e.module, 0, 3);
      log.expect(s.passed, e.name);
    }
    log.expect(seen > 0, "no non-CM modules");
  });

  criterion(6, "example1: length identity on {1,2}^3", 0, [&](Log& log) {
    const PresentedModule& m = find(corpus, "example1");
    std::vector<std::vector<int>> tuples;
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2; ++b)
        for (int c = 1; c <= 2; ++c) tuples.push_back({a, b, c});
    const LengthCheck c = length_function_check(m, cm_deviated_sequence(m, 0), tuples);
    log.expect(c.rows.size() == 8, "rows " + std::to_string(c.rows.size()));
    for (const auto& r : c.rows)
      log.expect(r.ok(), "n = (" + std::to_string(r.n[0]) + "," + std::to_string(r.n[1]) + "," +
                             std::to_string(r.n[2]) + "): " + std::to_string(r.lhs) + " vs " + std::to_string(r.rhs));
  });

  criterion(7, "gcm: udeg = hdeg = 3 = deg + l(Ext^3)", 0, [&](Log& log) {
    const PresentedModule& m = find(corpus, "gcm");
    const std::int64_t u = udeg(m, 0), h = hdeg(m), l = length(ext_module(m, 3));
    log.expect(deg(m) == 2 && l == 1 && u == 3 && h == 3,
               "deg " + std::to_string(deg(m)) + " l(Ext^3) " + std::to_string(l) + " udeg " + std::to_string(u) +
                   " hdeg " + std::to_string(h));
  });

  criterion(8, "splitting on generalized Cohen-Macaulay modules", 0, [&](Log& log) {
    int seen = 0;
    for (const auto& e : corpus) {
      const PresentedModule& m = e.module;
      if (m.dim() < 2 || is_cohen_macaulay(m) || !is_generalized_cohen_macaulay(m)) continue;
      ++seen;
      const SuiteResult s = splitting_suite(m, 0);
      log.expect(s.passed, e.name + ": splitting failed");
      log.expect(s.observations["rows_checked"].get<int>() >= 1, e.name + ": no splitting rows");
    }
    log.expect(seen >= 2, "only " + std::to_string(seen) + " generalized CM entries");
  });

  criterion(9, "finite-length additivity on fl and modules with H^0 != 0", 0, [&](Log& log) {
    int seen = 0;
    for (const auto& e : corpus) {
      if (e.name != "fl" && !starts_with(e.name, "h0_")) continue;
      ++seen;
      const auto a = finite_length_additivity(e.module, 0);
      log.expect(a.h0_length > 0, e.name + ": H^0 = 0");
      log.expect(a.ok(), e.name + ": udeg " + std::to_string(a.udeg_m) + " vs " + std::to_string(a.udeg_quotient) +
                             " + " + std::to_string(a.h0_length));
    }
    log.expect(seen == 11, "expected 11 entries, found " + std::to_string(seen));
  });

  criterion(10, "Bertini: udeg(M/xM) <= udeg(M), 10 trials, dim >= 2", 0, [&](Log& log) {
    for (const auto& e : corpus) {
      if (e.module.dim() < 2) continue;
      const auto trials = bertini_check(e.module, 10, 0);
      log.expect(trials.size() == 10, e.name + ": trials " + std::to_string(trials.size()));
      for (const auto& t : trials)
        log.expect(t.ok(), e.name + ": x = " + t.x + ", " + std::to_string(t.udeg_quotient) + " > " +
                               std::to_string(t.udeg_m));
    }
  });

  criterion(11, "kernel: canonical GB, NF, membership oracle, Hilbert SES", 0, [&](Log& log) {
    std::mt19937_64 rng(2025);
    for (int t = 0; t < 50; ++t) {
      auto r = Ring::standard(2 + static_cast<std::size_t>(t % 3));
      const Ideal a = random_ideal(r, rng);
      std::vector<Polynomial> g = a.generators;
      std::shuffle(g.begin(), g.end(), rng);
      const GroebnerBasis ga = groebner_basis(a), gb = groebner_basis(Ideal(r, g));
      bool same = ga.size() == gb.size();
      for (std::size_t i = 0; same && i < ga.size(); ++i) same = detail::terms_equal(ga.raw()[i], gb.raw()[i]);
      log.expect(same, "GB depends on generator order, instance " + std::to_string(t));

      const Polynomial f = oracle::random_form(r, rng, 1 + t % 4, 4);
      const Polynomial nf = normal_form(f, ga);
      log.expect(normal_form(nf, ga) == nf, "NF not idempotent, instance " + std::to_string(t));

      int D = 0;
      for (const auto& x : a.generators) D = std::max(D, x.degree());
      Polynomial h = oracle::random_form(r, rng, D, 3);
      if (t % 2 == 0) {
        h = Polynomial::constant(r, 0);
        for (const auto& x : a.generators) h = h + oracle::random_form(r, rng, D - x.degree(), 2) * x;
      }
      const bool oracle_says =
          oracle::member(a.as_submodule().generators, ModuleElement(FreeModule::ring_module(r), h.terms()));
      log.expect(contains(a, h) == oracle_says, "membership disagrees, instance " + std::to_string(t));

      const PresentedModule m = PresentedModule::quotient_ring(a);
      const PresentedModule k = subquotient(m.free_module(), m.relations(), {});
      log.expect(PresentedModule::free(m.free_module()).hilbert().numerator ==
                     k.hilbert().numerator + m.hilbert().numerator,
                 "Hilbert series not additive, instance " + std::to_string(t));
    }
  });

  std::cout << (failures ? "FAILED " + std::to_string(failures) + " criteria" : std::string("all criteria passed"))
            << "\n";
  return failures ? 1 : 0;
}
